#pragma once

#include <stdexcept>
#include <string>

namespace immaculate {

  // Raised for malformed or mutually inconsistent arguments.
  class invalid_input : public std::invalid_argument {
   public:
    explicit invalid_input(std::string const& what)
        : std::invalid_argument(what) {}
  };

}  // namespace immaculate
