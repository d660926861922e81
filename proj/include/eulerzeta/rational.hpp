#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "eulerzeta/big_real.hpp"
#include "eulerzeta/precision.hpp"

namespace eulerzeta {

/// Exact fraction num/den in lowest terms with den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(mpq_class q);

  /// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
  static Rational parse(const std::string& text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& get() const { return q_; }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "p/q", or "p" when den == 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& b);
  Rational& operator-=(const Rational& b);
  Rational& operator*=(const Rational& b);
  Rational& operator/=(const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

/// 2^e as a rational (e may be negative).
Rational pow2(long e);

/// Nearest working-precision value; err is one ulp when inexact.
BigReal to_big_real(const Rational& r, const PrecisionContext& ctx);

}  // namespace eulerzeta
