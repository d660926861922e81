#include "eulerzeta/rational.hpp"

#include <stdexcept>

namespace eulerzeta {

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) {
  if (d == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_text = text.substr(0, slash);
  const std::string den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!valid(num_text, true) || !valid(den_text, false)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  const std::string n = num_text[0] == '+' ? num_text.substr(1) : num_text;
  const mpz_class d(den_text);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(mpz_class(n), d);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& b) {
  q_ += b.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& b) {
  q_ -= b.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& b) {
  q_ *= b.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= b.q_;
  return *this;
}

Rational pow2(long e) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

BigReal to_big_real(const Rational& r, const PrecisionContext& ctx) {
  MpFloat v(ctx.bits());
  const int t = mpfr_set_q(v.raw(), r.get().get_mpq_t(), MPFR_RNDN);
  MpFloat e = t == 0 ? MpFloat(kErrBits) : ulp(v);
  return {std::move(v), std::move(e)};
}

}  // namespace eulerzeta
