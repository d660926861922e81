#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

namespace eulerzeta {

/// Owning handle for an MPFR float with explicit precision.
///
/// Binary operators produce a result at the larger of the operand
/// precisions, rounded to nearest. Directed rounding is available through
/// the free functions taking an mpfr_rnd_t, which the error-bound code uses.
class MpFloat {
 public:
  explicit MpFloat(mpfr_prec_t bits = 64);
  MpFloat(long value, mpfr_prec_t bits);
  MpFloat(double value, mpfr_prec_t bits);
  MpFloat(const std::string& decimal, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);

  MpFloat(const MpFloat& other);
  MpFloat(MpFloat&& other) noexcept;
  MpFloat& operator=(const MpFloat& other);
  MpFloat& operator=(MpFloat&& other) noexcept;
  ~MpFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Same value re-rounded to `bits`.
  MpFloat rounded(mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  /// Decimal rendering with `digits` significant digits, e.g. "1.2020569".
  std::string to_fixed_string(int digits) const;
  /// Scientific rendering, e.g. "3.1e-42"; `rnd` lets callers round bounds up.
  std::string to_sci_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  /// Exact bit pattern (hex mantissa and exponent) for determinism checks.
  std::string hex() const;

  MpFloat& operator+=(const MpFloat& rhs);
  MpFloat& operator-=(const MpFloat& rhs);
  MpFloat& operator*=(const MpFloat& rhs);
  MpFloat& operator/=(const MpFloat& rhs);

  friend MpFloat operator+(const MpFloat& a, const MpFloat& b);
  friend MpFloat operator-(const MpFloat& a, const MpFloat& b);
  friend MpFloat operator*(const MpFloat& a, const MpFloat& b);
  friend MpFloat operator/(const MpFloat& a, const MpFloat& b);
  friend MpFloat operator-(const MpFloat& a);

  friend bool operator==(const MpFloat& a, const MpFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const MpFloat& a, const MpFloat& b);

 private:
  mpfr_t v_;
};

MpFloat abs(const MpFloat& x);

// Directed-rounding helpers; the result takes the precision of `bits`.
MpFloat add(const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd);
MpFloat sub(const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd);
MpFloat mul(const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd);
MpFloat div(const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd);
/// x * 2^e, exact unless the exponent range is exceeded.
MpFloat ldexp(const MpFloat& x, long e);

/// 10^(-n) rounded in direction `rnd` at `bits`.
MpFloat pow10_neg(long n, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);

}  // namespace eulerzeta
