#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace immaculate::cli {

  enum exit_code : int { success = 0, verification_failed = 1, bad_input = 2 };

  //! Runs the command line given without the program name. Results go to out,
  //! diagnostics to err.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace immaculate::cli
