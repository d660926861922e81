#include <cmath>
#include <mutex>
#include <stdexcept>

#include "eulerzeta/exact_zeta.hpp"
#include "eulerzeta/series.hpp"

namespace eulerzeta {
namespace {

constexpr int kMaxCorrections = 400;

// B_0..B_n, grown on demand.
std::vector<Rational> bernoulli_prefix(int n) {
  static std::mutex mu;
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= n) cache = bernoulli_numbers(std::max(n, 2 * static_cast<int>(cache.size())));
  return {cache.begin(), cache.begin() + n + 1};
}

// B_2j / (2j)! * s (s+1) ... (s+2j-2)
Rational correction_coeff(const std::vector<Rational>& b, int s, int j) {
  mpz_class rising = 1;
  for (int i = 0; i <= 2 * j - 2; ++i) rising *= s + i;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
  return b[static_cast<std::size_t>(2 * j)] * Rational(rising, fact);
}

}  // namespace

OracleResult zeta_direct_oracle(int s, const PrecisionContext& ctx, int cutoff) {
  if (s < 2) throw PreconditionError("zeta_direct_oracle requires s >= 2");
  const int n_cut = cutoff > 0 ? cutoff : std::max(16, 2 * ctx.working_digits());

  BigReal sum = BigReal::exact(0, ctx);
  for (int n = 1; n < n_cut; ++n) {
    sum += BigReal::exact(1, ctx) / pow_int(BigReal::exact(n, ctx), static_cast<unsigned>(s), ctx);
  }

  const BigReal big_n = BigReal::exact(n_cut, ctx);
  const BigReal n_pow_s = pow_int(big_n, static_cast<unsigned>(s), ctx);
  // N^(1-s)/(s-1) + N^-s/2
  sum += big_n / n_pow_s / (s - 1);
  sum += BigReal::exact(1, ctx) / n_pow_s / 2;

  const MpFloat target = pow10_neg(ctx.working_digits() + 2, kErrBits, MPFR_RNDD);
  std::vector<Rational> b = bernoulli_prefix(64);
  const BigReal n_sq = big_n * big_n;
  BigReal n_pow = n_pow_s * big_n;  // N^(s+2j-1), starting at j = 1
  MpFloat previous;
  bool have_previous = false;
  for (int j = 1; j <= kMaxCorrections + 1; ++j) {
    if (2 * j >= static_cast<int>(b.size())) b = bernoulli_prefix(4 * j);
    const BigReal term = to_big_real(correction_coeff(b, s, j), ctx) / n_pow;
    const MpFloat magnitude = add(abs(term.value()), term.err(), kErrBits, MPFR_RNDU);
    if (have_previous && magnitude > previous) {
      throw std::runtime_error("Euler-Maclaurin corrections diverge before reaching the target; raise the cutoff");
    }
    if (magnitude <= target || j == kMaxCorrections + 1) {
      if (magnitude > target) throw std::runtime_error("Euler-Maclaurin correction limit reached");
      // The remainder after j-1 corrections is bounded by the j-th.
      return {sum.widened(magnitude), n_cut, j - 1};
    }
    sum += term;
    previous = magnitude;
    have_previous = true;
    n_pow = n_pow * n_sq;
  }
  throw std::logic_error("unreachable");
}

BigReal zeta_odd_oracle(int l, const PrecisionContext& ctx) {
  if (l < 1) throw PreconditionError("zeta_odd_oracle requires l >= 1");
  return zeta_direct_oracle(2 * l + 1, ctx).value;
}

}  // namespace eulerzeta
