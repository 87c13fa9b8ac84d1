#pragma once

#include <gmpxx.h>

#include <string>

namespace immaculate {

  using Integer  = mpz_class;
  using Rational = mpq_class;

  // Always "p/q", including integers ("3/1").
  inline std::string rational_string(Rational const& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  Integer binomial(unsigned long n, unsigned long k);
  Integer factorial(unsigned long n);

}  // namespace immaculate
