#include "eulerzeta/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulerzeta {
namespace {

mpfr_prec_t max_prec(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

MpFloat err_add(const MpFloat& a, const MpFloat& b) { return add(a, b, kErrBits, MPFR_RNDU); }
MpFloat err_mul(const MpFloat& a, const MpFloat& b) { return mul(a, b, kErrBits, MPFR_RNDU); }

MpFloat abs_up(const MpFloat& x) { return abs(x).rounded(kErrBits, MPFR_RNDU); }

// Rounding contribution of an MPFR call that returned `ternary`.
MpFloat rounding_err(const MpFloat& result, int ternary) {
  if (ternary == 0) return MpFloat(kErrBits);
  return ulp(result).rounded(kErrBits, MPFR_RNDU);
}

}  // namespace

MpFloat ulp(const MpFloat& x) {
  MpFloat u(kErrBits);
  if (x.is_zero() || !x.is_finite()) return u;
  // x = m * 2^e with 1/2 <= |m| < 1, so one ulp is 2^(e - p).
  mpfr_set_ui_2exp(u.raw(), 1, mpfr_get_exp(x.raw()) - x.precision(), MPFR_RNDU);
  return u;
}

BigReal::BigReal(MpFloat value, MpFloat err) : value_(std::move(value)), err_(std::move(err)) {
  if (err_.precision() != kErrBits) err_ = err_.rounded(kErrBits, MPFR_RNDU);
  if (err_.sign() < 0) throw std::invalid_argument("error bound must be non-negative");
}

BigReal BigReal::exact(long v, const PrecisionContext& ctx) { return exact(v, ctx.bits()); }

BigReal BigReal::exact(long v, mpfr_prec_t bits) {
  MpFloat value(bits);
  const int t = mpfr_set_si(value.raw(), v, MPFR_RNDN);
  MpFloat e = rounding_err(value, t);
  return {std::move(value), std::move(e)};
}

BigReal BigReal::from_decimal(const std::string& text, const PrecisionContext& ctx) {
  MpFloat value(ctx.bits());
  if (mpfr_set_str(value.raw(), text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: " + text);
  }
  // mpfr_set_str reports success, not exactness; assume rounding happened.
  MpFloat e = rounding_err(value, 1);
  return {std::move(value), std::move(e)};
}

BigReal BigReal::widened(const MpFloat& extra) const {
  if (extra.sign() < 0) throw std::invalid_argument("negative widening");
  return {value_, err_add(err_, extra)};
}

BigReal BigReal::operator-() const { return {-value_, err_}; }

BigReal operator+(const BigReal& a, const BigReal& b) {
  MpFloat v(max_prec(a, b));
  const int t = mpfr_add(v.raw(), a.value_.raw(), b.value_.raw(), MPFR_RNDN);
  MpFloat e = err_add(err_add(a.err_, b.err_), rounding_err(v, t));
  return {std::move(v), std::move(e)};
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  MpFloat v(max_prec(a, b));
  const int t = mpfr_sub(v.raw(), a.value_.raw(), b.value_.raw(), MPFR_RNDN);
  MpFloat e = err_add(err_add(a.err_, b.err_), rounding_err(v, t));
  return {std::move(v), std::move(e)};
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  MpFloat v(max_prec(a, b));
  const int t = mpfr_mul(v.raw(), a.value_.raw(), b.value_.raw(), MPFR_RNDN);
  // |AB - ab| <= |a| eb + |b| ea + ea eb
  MpFloat e = err_add(err_mul(abs_up(a.value_), b.err_), err_mul(abs_up(b.value_), a.err_));
  e = err_add(e, err_mul(a.err_, b.err_));
  e = err_add(e, rounding_err(v, t));
  return {std::move(v), std::move(e)};
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  // |b| - eb must stay positive, rounded down so the bound stays an upper bound.
  const MpFloat b_abs = abs(b.value_);
  const MpFloat margin = sub(b_abs, b.err_, kErrBits, MPFR_RNDD);
  if (margin.sign() <= 0) throw std::domain_error("division by an interval containing zero");

  MpFloat v(max_prec(a, b));
  const int t = mpfr_div(v.raw(), a.value_.raw(), b.value_.raw(), MPFR_RNDN);
  // |A/B - a/b| <= (ea |b| + |a| eb) / (|b| (|b| - eb))
  MpFloat num = err_add(err_mul(a.err_, abs_up(b_abs)), err_mul(abs_up(a.value_), b.err_));
  MpFloat den = mul(b_abs.rounded(kErrBits, MPFR_RNDD), margin, kErrBits, MPFR_RNDD);
  MpFloat e = err_add(div(num, den, kErrBits, MPFR_RNDU), rounding_err(v, t));
  return {std::move(v), std::move(e)};
}

BigReal operator*(const BigReal& a, long k) {
  MpFloat v(a.precision());
  const int t = mpfr_mul_si(v.raw(), a.value_.raw(), k, MPFR_RNDN);
  MpFloat e = err_add(err_mul(a.err_, MpFloat(std::labs(k), kErrBits)), rounding_err(v, t));
  return {std::move(v), std::move(e)};
}

BigReal operator/(const BigReal& a, long k) {
  if (k == 0) throw std::domain_error("division by zero");
  MpFloat v(a.precision());
  const int t = mpfr_div_si(v.raw(), a.value_.raw(), k, MPFR_RNDN);
  MpFloat e = err_add(div(a.err_, MpFloat(std::labs(k), kErrBits), kErrBits, MPFR_RNDU), rounding_err(v, t));
  return {std::move(v), std::move(e)};
}

BigReal log(const BigReal& x) {
  const MpFloat margin = sub(x.value(), x.err(), kErrBits, MPFR_RNDD);
  if (margin.sign() <= 0) throw std::domain_error("log of an interval reaching zero");
  MpFloat v(x.precision());
  const int t = mpfr_log(v.raw(), x.value().raw(), MPFR_RNDN);
  // |log A - log a| <= ea / (a - ea)
  MpFloat e = err_add(div(x.err(), margin, kErrBits, MPFR_RNDU), rounding_err(v, t));
  return {std::move(v), std::move(e)};
}

BigReal exp(const BigReal& x) {
  MpFloat v(x.precision());
  const int t = mpfr_exp(v.raw(), x.value().raw(), MPFR_RNDN);
  // |e^A - e^a| <= e^a (e^ea - 1)
  MpFloat grow(kErrBits);
  mpfr_expm1(grow.raw(), x.err().raw(), MPFR_RNDU);
  MpFloat e = err_add(err_mul(abs(v).rounded(kErrBits, MPFR_RNDU), grow), rounding_err(v, t));
  e = err_add(e, err_mul(rounding_err(v, t), grow));
  return {std::move(v), std::move(e)};
}

BigReal pow_int(const BigReal& x, unsigned n, const PrecisionContext& ctx) {
  BigReal result = BigReal::exact(1, std::max(ctx.bits(), x.precision()));
  BigReal base = x;
  while (n != 0) {
    if ((n & 1U) != 0) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

MpFloat distance(const BigReal& a, const BigReal& b) {
  MpFloat d = sub(a.value(), b.value(), std::max(a.precision(), b.precision()), MPFR_RNDN);
  return abs(d).rounded(kErrBits, MPFR_RNDU);
}

bool overlaps(const BigReal& a, const BigReal& b) {
  return distance(a, b) <= err_add(a.err(), b.err());
}

}  // namespace eulerzeta
