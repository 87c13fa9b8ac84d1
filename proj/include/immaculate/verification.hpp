#pragma once

#include <string>
#include <vector>

#include "immaculate/numbers.hpp"

namespace immaculate {

  struct RecurrenceReport {
    int                      n = 0;
    Integer                  a;
    Integer                  dimension;
    Integer                  immacutations;
    Integer                  b;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
  };

  //! a(n) from the recurrence against the tableau-enumeration dimension and
  //! the immacutation count, and b(n) against n!.
  RecurrenceReport verify_recurrence(int n);

  //! Names accepted by run_suite, in the order "all" runs them.
  std::vector<std::string> const& suite_names();

  //! Default upper n for a suite.
  int default_max_n(std::string const& suite, bool long_mode);

  struct SuiteOutcome {
    std::vector<std::string> lines;
    bool                     ok = true;
  };

  //! Runs one named suite for n = 1..max_n, one summary line per n followed
  //! by any failures. Throws invalid_input for an unknown suite or a young
  //! suite beyond its limit (4, or 5 in long mode).
  SuiteOutcome run_suite(std::string const& suite, int max_n, bool long_mode);

}  // namespace immaculate
