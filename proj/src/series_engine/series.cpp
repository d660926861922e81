#include "eulerzeta/series.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <utility>

#include "eulerzeta/closed_form.hpp"
#include "eulerzeta/constants.hpp"
#include "eulerzeta/exact_zeta.hpp"

namespace eulerzeta {
namespace {

// zeta(2) = 1.6449340668... <= 1645/1000 bounds every zeta(2k), k >= 1.
const Rational& zeta2_upper() {
  static const Rational r(1645, 1000);
  return r;
}

// pi^2 = 9.8696044... <= 98697/10000
const Rational& pi_squared_upper() {
  static const Rational r(98697, 10000);
  return r;
}

MpFloat round_up(const Rational& r) {
  MpFloat v(kErrBits);
  mpfr_set_q(v.raw(), r.get().get_mpq_t(), MPFR_RNDU);
  return v;
}

// zeta(2) 4^-K / 3 times `weight`, the largest remaining rational factor.
MpFloat geometric_tail(int terms, const Rational& weight) {
  return round_up(zeta2_upper() * pow2(-2L * terms) / Rational(3) * weight);
}

Rational inv(long n) { return Rational(1, n); }

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n)), mpz_class(1)); }

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

// Sum of zeta(2k)/4^k * weight(k) for k = 1..terms, ascending.
template <typename Weight>
BigReal weighted_sum(int terms, const PrecisionContext& ctx, Weight weight) {
  BigReal sum = BigReal::exact(0, ctx);
  if (terms == 0) return sum;
  const auto z = even_zeta_quarter_powers(terms, ctx);
  for (int k = 1; k <= terms; ++k) sum += weight(k, (*z)[static_cast<std::size_t>(k)]);
  return sum;
}

int terms_for(const PrecisionContext& ctx, const std::function<MpFloat(int)>& bound) {
  int terms = default_terms(ctx);
  const MpFloat target = pow10_neg(ctx.digits + 2, kErrBits, MPFR_RNDD);
  while (bound(terms) > target) ++terms;
  return terms;
}

struct OddLevels {
  std::mutex mu;
  std::vector<BigReal> values;  // values[l] = zeta(2l+1); index 0 unused
};

std::shared_ptr<OddLevels> odd_levels_for(const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<OddLevels>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{ctx.digits, ctx.guard}];
  if (!slot) slot = std::make_shared<OddLevels>();
  return slot;
}

BigReal zeta_odd_main_level(int l, const std::vector<BigReal>& lower, const PrecisionContext& ctx) {
  const BigReal pi = const_pi(ctx);
  const BigReal pi2 = pi * pi;

  BigReal inner = BigReal::exact(0, ctx);
  for (int k = 1; k <= l - 1; ++k) {
    Rational c = (Rational(1) - pow2(-2 * k)) / fact(2 * (l - k));
    if ((k - 1) % 2 != 0) c = -c;
    inner += to_big_real(c, ctx) * pow_int(pi2, static_cast<unsigned>(l - k), ctx) *
             lower[static_cast<std::size_t>(k)];
  }

  const BigReal s = tail_series_S(l, ctx).bounded();
  const BigReal bracket = const_log_pi(ctx) - to_big_real(inv(2L * l), ctx) - s * l;
  inner -= to_big_real(inv(1) / fact(2 * l), ctx) * pow_int(pi2, static_cast<unsigned>(l), ctx) * bracket;

  Rational prefactor = pow2(2 * l) / (pow2(2 * l + 1) - Rational(1));
  if (l % 2 != 0) prefactor = -prefactor;
  return to_big_real(prefactor, ctx) * inner;
}

}  // namespace

int default_terms(const PrecisionContext& ctx) {
  return static_cast<int>(std::ceil(1.661 * ctx.digits)) + 10;
}

std::shared_ptr<const std::vector<BigReal>> even_zeta_quarter_powers(int terms, const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::shared_ptr<const std::vector<BigReal>>> cache;

  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ctx.bits()];
  if (slot && static_cast<int>(slot->size()) > terms) return slot;

  const auto table = shared_even_table(terms);
  const BigReal pi = const_pi(ctx);
  const BigReal quarter_pi2 = pi * pi / 4;

  std::vector<BigReal> values(static_cast<std::size_t>(terms) + 1);
  values[0] = BigReal::exact(0, ctx);
  BigReal power = quarter_pi2;
  for (int k = 1; k <= terms; ++k) {
    values[static_cast<std::size_t>(k)] = to_big_real(table->coeff(k), ctx) * power;
    if (k < terms) power = power * quarter_pi2;
  }
  slot = std::make_shared<const std::vector<BigReal>>(std::move(values));
  return slot;
}

MpFloat tail_bound_S(int l, int terms) {
  require(l >= 1 && terms >= 0, "tail_bound_S requires l >= 1 and terms >= 0");
  return geometric_tail(terms, inv(static_cast<long>(terms + 1) * (terms + 1 + l)));
}

SeriesResult tail_series_S(int l, const PrecisionContext& ctx) {
  require(l >= 1, "tail_series_S requires l >= 1");
  return tail_series_S(l, terms_for(ctx, [l](int k) { return tail_bound_S(l, k); }), ctx);
}

SeriesResult tail_series_S(int l, int terms, const PrecisionContext& ctx) {
  require(l >= 1 && terms >= 0, "tail_series_S requires l >= 1 and terms >= 0");
  BigReal sum = weighted_sum(terms, ctx, [l](int k, const BigReal& z) { return z / (static_cast<long>(k) * (k + l)); });
  return {std::move(sum), terms, tail_bound_S(l, terms)};
}

BigReal euler_integral_series(int l, const PrecisionContext& ctx) {
  require(l >= 1, "euler_integral_series requires l >= 1");
  const BigReal elementary = eval_symbolic(euler_integral_elementary_part(l), {}, ctx);
  const BigReal half_pi = const_pi(ctx) / 2;
  const BigReal scale = pow_int(half_pi, static_cast<unsigned>(2 * l), ctx);
  return elementary - scale * tail_series_S(l, ctx).bounded() / 2;
}

BigReal zeta_odd_main(int l, const PrecisionContext& ctx) {
  require(l >= 1, "zeta_odd_main requires l >= 1");
  const auto levels = odd_levels_for(ctx);
  std::lock_guard<std::mutex> lock(levels->mu);
  auto& values = levels->values;
  if (values.empty()) values.emplace_back(BigReal::exact(0, ctx));
  for (int j = static_cast<int>(values.size()); j <= l; ++j) {
    values.push_back(zeta_odd_main_level(j, values, ctx));
  }
  return values[static_cast<std::size_t>(l)];
}

OddZetaValues zeta_odd_main_values(int lmax, const PrecisionContext& ctx) {
  OddZetaValues out;
  for (int l = 1; l <= lmax; ++l) out.emplace(2 * l + 1, zeta_odd_main(l, ctx));
  return out;
}

BigReal zeta5_collapsed(const PrecisionContext& ctx) {
  // (2k+11)/(k(k+1)(k+2)) decreases in k, so its value at K+1 bounds the tail weight.
  auto bound = [](int terms) {
    const long k = terms + 1;
    return geometric_tail(terms, Rational(2 * k + 11) / Rational(k * (k + 1) * (k + 2)));
  };
  const int terms = terms_for(ctx, bound);
  const BigReal sum = weighted_sum(terms, ctx, [](int k, const BigReal& z) {
    return z * (2L * k + 11) / (static_cast<long>(k) * (k + 1) * (k + 2));
  });
  const BigReal pi = const_pi(ctx);
  const BigReal bracket = const_log_pi(ctx) * 11 / 2 - to_big_real(Rational(29, 8), ctx) - sum.widened(bound(terms));
  return pow_int(pi, 4, ctx) * 4 / 651 * bracket;
}

SeriesResult euler_zeta3_sum(int terms, const PrecisionContext& ctx) {
  require(terms >= 0, "euler_zeta3_sum requires terms >= 0");
  BigReal sum = weighted_sum(terms, ctx, [](int k, const BigReal& z) {
    return z / ((2L * k + 1) * (2L * k + 2));
  });
  const long k = terms + 1;
  return {std::move(sum), terms, geometric_tail(terms, inv((2 * k + 1) * (2 * k + 2)))};
}

BigReal zeta3_euler(const PrecisionContext& ctx) {
  // the sum enters multiplied by 4 pi^2 / 7
  const MpFloat scale = round_up(pi_squared_upper() * Rational(4, 7));
  const int terms = terms_for(ctx, [&scale](int k) {
    return mul(geometric_tail(k, inv((2L * k + 3) * (2L * k + 4))), scale, kErrBits, MPFR_RNDU);
  });
  const BigReal sum = euler_zeta3_sum(terms, ctx).bounded();
  const BigReal pi = const_pi(ctx);
  return pi * pi / 7 * (BigReal::exact(1, ctx) - sum * 4);
}

SeriesResult log_pi_series(int terms, const PrecisionContext& ctx) {
  require(terms >= 0, "log_pi_series requires terms >= 0");
  BigReal sum = weighted_sum(terms, ctx, [](int k, const BigReal& z) {
    return z / (static_cast<long>(k) * (2L * k + 1));
  });
  const long k = terms + 1;
  return {std::move(sum), terms, geometric_tail(terms, inv(k * (2 * k + 1)))};
}

LogPiIdentity log_pi_identity(const PrecisionContext& ctx) {
  const int terms = terms_for(ctx, [](int k) { return geometric_tail(k, inv((k + 1L) * (2L * k + 3))); });
  return {const_log_pi(ctx) - BigReal::exact(1, ctx), log_pi_series(terms, ctx)};
}

BigReal zeta_odd_ck(int l, const PrecisionContext& ctx) {
  require(l >= 1, "zeta_odd_ck requires l >= 1");
  const BigReal pi = const_pi(ctx);
  const BigReal pi2 = pi * pi;

  std::vector<BigReal> values(static_cast<std::size_t>(l) + 1);
  for (int j = 1; j <= l; ++j) {
    BigReal bracket = BigReal::exact(0, ctx);
    for (int k = 1; k <= j - 1; ++k) {
      Rational c = Rational(k) / fact(2 * (j - k));
      if ((k - 1) % 2 != 0) c = -c;
      bracket += to_big_real(c, ctx) * values[static_cast<std::size_t>(k)] /
                 pow_int(pi2, static_cast<unsigned>(k), ctx);
    }

    // k = 0 term: zeta(0) (0)! / (4^0 (2j)!)
    bracket += to_big_real(zeta_zero() / fact(2 * j), ctx);

    // (2k)!/(2k+2j)! <= (2k+1)^-2j, decreasing in k.
    auto bound = [j](int terms) {
      mpz_class base = 2 * terms + 3;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(2 * j));
      return geometric_tail(terms, Rational(mpz_class(1), p));
    };
    const int terms = terms_for(ctx, bound);
    const BigReal sum = weighted_sum(terms, ctx, [j, &ctx](int k, const BigReal& z) {
      // (2k)!/(2k+2j)! = 1 / ((2k+1)(2k+2)...(2k+2j))
      mpz_class rising = 1;
      for (int i = 1; i <= 2 * j; ++i) rising *= 2 * k + i;
      return z * to_big_real(Rational(mpz_class(1), rising), ctx);
    });
    bracket += sum.widened(bound(terms));

    Rational prefactor = pow2(2 * j) / (Rational(j) * (pow2(2 * j + 1) - Rational(1)));
    if (j % 2 != 0) prefactor = -prefactor;
    values[static_cast<std::size_t>(j)] =
        to_big_real(prefactor, ctx) * pow_int(pi2, static_cast<unsigned>(j), ctx) * bracket;
  }
  return values[static_cast<std::size_t>(l)];
}

BigReal zeta_value(int s, const PrecisionContext& ctx) {
  require(s >= 2, "zeta_value requires s >= 2");
  if (s % 2 != 0) return zeta_odd_main((s - 1) / 2, ctx);
  const auto table = shared_even_table(s / 2);
  return to_big_real(table->coeff(s / 2), ctx) * pow_int(const_pi(ctx), static_cast<unsigned>(s), ctx);
}

BigReal alternating_zeta(int k, const PrecisionContext& ctx) {
  require(k >= 2, "alternating_zeta requires k >= 2");
  return to_big_real(Rational(1) - pow2(1 - k), ctx) * zeta_value(k, ctx);
}

BigReal odd_reciprocal_zeta(int k, const PrecisionContext& ctx) {
  require(k >= 2, "odd_reciprocal_zeta requires k >= 2");
  return to_big_real(Rational(1) - pow2(-k), ctx) * zeta_value(k, ctx);
}

}  // namespace eulerzeta
