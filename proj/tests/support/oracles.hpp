#pragma once

// Reference computations that share no code with the library: plain GMP
// fixed-point series for pi and log 2, and a brute-force power sum.

#include <gmpxx.h>

#include "eulerzeta/big_real.hpp"

namespace testing_oracles {

// floor(10^scale / (x^(2k+1) (2k+1))) summed with alternating or constant signs.
inline mpz_class arctan_inverse(long x, long scale_digits, bool hyperbolic) {
  mpz_class unit;
  mpz_ui_pow_ui(unit.get_mpz_t(), 10, static_cast<unsigned long>(scale_digits));
  const mpz_class x2 = mpz_class(x) * x;
  mpz_class power = unit / x;  // 10^scale / x^(2k+1)
  mpz_class sum = 0;
  for (long k = 0; power != 0; ++k) {
    const mpz_class term = power / (2 * k + 1);
    if (!hyperbolic && k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    power /= x2;
  }
  return sum;
}

inline eulerzeta::MpFloat fixed_to_float(const mpz_class& v, long scale_digits, mpfr_prec_t bits) {
  eulerzeta::MpFloat r(bits);
  mpfr_set_z(r.raw(), v.get_mpz_t(), MPFR_RNDN);
  mpz_class unit;
  mpz_ui_pow_ui(unit.get_mpz_t(), 10, static_cast<unsigned long>(scale_digits));
  mpfr_div_z(r.raw(), r.raw(), unit.get_mpz_t(), MPFR_RNDN);
  return r;
}

/// Machin: pi = 16 atan(1/5) - 4 atan(1/239); accurate to ~10^-(digits+5).
inline eulerzeta::MpFloat machin_pi(int digits, mpfr_prec_t bits) {
  const long scale = digits + 10;
  const mpz_class pi = 16 * arctan_inverse(5, scale, false) - 4 * arctan_inverse(239, scale, false);
  return fixed_to_float(pi, scale, bits);
}

/// log 2 = 2 atanh(1/3); accurate to ~10^-(digits+5).
inline eulerzeta::MpFloat atanh_log2(int digits, mpfr_prec_t bits) {
  const long scale = digits + 10;
  return fixed_to_float(2 * arctan_inverse(3, scale, true), scale, bits);
}

}  // namespace testing_oracles
