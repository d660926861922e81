#pragma once

#include <string>

#include "eulerzeta/mp_float.hpp"
#include "eulerzeta/precision.hpp"

namespace eulerzeta {

/// Precision of the stored error bound. Bounds are always rounded upward.
inline constexpr mpfr_prec_t kErrBits = 64;

/// A working-precision value together with an absolute error bound.
///
/// The true quantity lies in [value - err, value + err]. Every operation
/// widens err by the propagated input error plus one ulp whenever MPFR
/// reports an inexact result, so bounds are conservative but not produced
/// by directed-rounding interval arithmetic.
class BigReal {
 public:
  BigReal() : value_(64L, 64), err_(kErrBits) {}
  BigReal(MpFloat value, MpFloat err);

  static BigReal exact(long v, const PrecisionContext& ctx);
  static BigReal exact(long v, mpfr_prec_t bits);
  /// Parses a decimal string; err covers the conversion rounding.
  static BigReal from_decimal(const std::string& text, const PrecisionContext& ctx);

  const MpFloat& value() const { return value_; }
  const MpFloat& err() const { return err_; }
  mpfr_prec_t precision() const { return value_.precision(); }

  /// Significant-digit decimal rendering of the value.
  std::string to_decimal(int digits) const { return value_.to_fixed_string(digits); }
  /// Two-digit upward-rounded rendering of the bound, e.g. "1.3e-64".
  std::string err_string() const { return err_.to_sci_string(2, MPFR_RNDU); }

  /// Widens the bound by `extra` (e.g. a series tail bound).
  BigReal widened(const MpFloat& extra) const;

  BigReal operator-() const;
  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  /// Throws std::domain_error when the divisor interval contains zero.
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend BigReal operator*(const BigReal& a, long k);
  friend BigReal operator/(const BigReal& a, long k);

  BigReal& operator+=(const BigReal& b) { return *this = *this + b; }
  BigReal& operator-=(const BigReal& b) { return *this = *this - b; }
  BigReal& operator*=(const BigReal& b) { return *this = *this * b; }

 private:
  MpFloat value_;
  MpFloat err_;
};

/// Natural log; throws std::domain_error unless value - err > 0.
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
/// x^n by binary powering; pow_int(x, 0) is exactly 1.
BigReal pow_int(const BigReal& x, unsigned n, const PrecisionContext& ctx);

/// |a - b| <= a.err + b.err.
bool overlaps(const BigReal& a, const BigReal& b);
/// |a.value - b.value|, rounded up.
MpFloat distance(const BigReal& a, const BigReal& b);

/// One unit in the last place of `x` at its precision (zero for zero).
MpFloat ulp(const MpFloat& x);

}  // namespace eulerzeta
