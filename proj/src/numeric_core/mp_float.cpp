#include "eulerzeta/mp_float.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerzeta {
namespace {

struct MpfrString {
  char* s = nullptr;
  ~MpfrString() {
    if (s != nullptr) mpfr_free_str(s);
  }
};

mpfr_prec_t max_prec(const MpFloat& a, const MpFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

MpFloat::MpFloat(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

MpFloat::MpFloat(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

MpFloat::MpFloat(double value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

MpFloat::MpFloat(const std::string& decimal, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  mpfr_init2(v_, bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, rnd) != 0 && !mpfr_number_p(v_)) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

MpFloat::MpFloat(const MpFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

MpFloat::MpFloat(MpFloat&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

MpFloat& MpFloat::operator=(const MpFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

MpFloat& MpFloat::operator=(MpFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

MpFloat::~MpFloat() { mpfr_clear(v_); }

MpFloat MpFloat::rounded(mpfr_prec_t bits, mpfr_rnd_t rnd) const {
  MpFloat r(bits);
  mpfr_set(r.v_, v_, rnd);
  return r;
}

std::string MpFloat::to_fixed_string(int digits) const {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  MpfrString buf;
  buf.s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(buf.s);
  std::string out;
  if (!mant.empty() && mant.front() == '-') {
    out.push_back('-');
    mant.erase(mant.begin());
  }
  // value = 0.mant * 10^exp10
  if (exp10 <= 0) {
    out += "0.";
    out.append(static_cast<size_t>(-exp10), '0');
    out += mant;
  } else if (static_cast<size_t>(exp10) >= mant.size()) {
    out += mant;
    out.append(static_cast<size_t>(exp10) - mant.size(), '0');
  } else {
    out += mant.substr(0, static_cast<size_t>(exp10));
    out.push_back('.');
    out += mant.substr(static_cast<size_t>(exp10));
  }
  return out;
}

std::string MpFloat::to_sci_string(int digits, mpfr_rnd_t rnd) const {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (!is_finite()) return to_fixed_string(1);
  if (is_zero()) return "0";

  mpfr_exp_t exp10 = 0;
  MpfrString buf;
  buf.s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, rnd);
  std::string mant(buf.s);
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(mant.begin());
  }
  out.push_back(mant[0]);
  if (mant.size() > 1) {
    out.push_back('.');
    out += mant.substr(1);
  }
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

std::string MpFloat::hex() const {
  if (!is_finite() || is_zero()) return to_fixed_string(1);
  mpfr_exp_t e = 0;
  MpfrString buf;
  buf.s = mpfr_get_str(nullptr, &e, 16, 0, v_, MPFR_RNDN);
  return std::string(buf.s) + "@" + std::to_string(static_cast<long>(e));
}

MpFloat& MpFloat::operator+=(const MpFloat& rhs) { return *this = *this + rhs; }
MpFloat& MpFloat::operator-=(const MpFloat& rhs) { return *this = *this - rhs; }
MpFloat& MpFloat::operator*=(const MpFloat& rhs) { return *this = *this * rhs; }
MpFloat& MpFloat::operator/=(const MpFloat& rhs) { return *this = *this / rhs; }

MpFloat operator+(const MpFloat& a, const MpFloat& b) { return add(a, b, max_prec(a, b), MPFR_RNDN); }
MpFloat operator-(const MpFloat& a, const MpFloat& b) { return sub(a, b, max_prec(a, b), MPFR_RNDN); }
MpFloat operator*(const MpFloat& a, const MpFloat& b) { return mul(a, b, max_prec(a, b), MPFR_RNDN); }
MpFloat operator/(const MpFloat& a, const MpFloat& b) { return div(a, b, max_prec(a, b), MPFR_RNDN); }

MpFloat operator-(const MpFloat& a) {
  MpFloat r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const MpFloat& a, const MpFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

MpFloat abs(const MpFloat& x) {
  MpFloat r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

MpFloat add(const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpFloat r(bits);
  mpfr_add(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

MpFloat sub(const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpFloat r(bits);
  mpfr_sub(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

MpFloat mul(const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpFloat r(bits);
  mpfr_mul(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

MpFloat div(const MpFloat& a, const MpFloat& b, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpFloat r(bits);
  mpfr_div(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

MpFloat ldexp(const MpFloat& x, long e) {
  MpFloat r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

MpFloat pow10_neg(long n, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  MpFloat r(bits);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(n < 0 ? -n : n), rnd);
  if (n > 0) {
    // 1/10^n: reciprocal in the opposite direction keeps `rnd` meaningful.
    const mpfr_rnd_t inv = rnd == MPFR_RNDU ? MPFR_RNDD : rnd == MPFR_RNDD ? MPFR_RNDU : rnd;
    MpFloat p(bits);
    mpfr_ui_pow_ui(p.raw(), 10, static_cast<unsigned long>(n), inv);
    mpfr_ui_div(r.raw(), 1, p.raw(), rnd);
  }
  return r;
}

}  // namespace eulerzeta
