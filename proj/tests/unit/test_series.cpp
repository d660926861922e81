#include "doctest.h"
#include "eulerzeta/closed_form.hpp"
#include "eulerzeta/constants.hpp"
#include "eulerzeta/exact_zeta.hpp"
#include "eulerzeta/quadrature.hpp"
#include "eulerzeta/series.hpp"

using namespace eulerzeta;

namespace {

MpFloat tenth_power(long n) { return pow10_neg(n, kErrBits, MPFR_RNDD); }

// Reference digits from an external arbitrary-precision library.
constexpr const char* kZeta3 = "1.20205690315959428539973816151144999076498629234049888179227";
constexpr const char* kZeta5 = "1.03692775514336992633136548645703416805708091950191281197419";
constexpr const char* kZeta7 = "1.00834927738192282683979754984979675959986356056523870641728";
constexpr const char* kZeta9 = "1.0020083928260822144178527692324120604856058513948887565486";

// The strings above carry 60 significant digits.
BigReal reference(const char* digits, const PrecisionContext& ctx) {
  return BigReal::from_decimal(digits, ctx).widened(tenth_power(58));
}

}  // namespace

TEST_CASE("default term rule") {
  CHECK(default_terms(PrecisionContext(30)) == 60);
  CHECK(default_terms(PrecisionContext(1)) == 12);
}

TEST_CASE("empty sum") {
  const PrecisionContext ctx(20);
  const SeriesResult r = tail_series_S(1, 0, ctx);
  CHECK(r.value.value().is_zero());
  CHECK(r.terms_used == 0);
  CHECK(r.tail_bound.sign() > 0);
}

TEST_CASE("default truncation meets its target") {
  for (int d : {10, 30, 60}) {
    const PrecisionContext ctx(d);
    for (int l = 1; l <= 4; ++l) {
      const SeriesResult r = tail_series_S(l, ctx);
      CHECK(r.tail_bound <= tenth_power(d + 2));
      CHECK(r.tail_bound == tail_bound_S(l, r.terms_used));
    }
  }
}

TEST_CASE("l = 1: log pi - 1/2 - S(1) = 7 zeta(3) / (2 pi^2)") {
  const PrecisionContext ctx(40);
  const BigReal pi = const_pi(ctx);
  const BigReal lhs = const_log_pi(ctx) - to_big_real(Rational(1, 2), ctx) - tail_series_S(1, ctx).bounded();
  const BigReal rhs = zeta_odd_oracle(1, ctx) * 7 / (pi * pi * 2);
  CHECK(overlaps(lhs, rhs));
  CHECK(distance(lhs, rhs) <= tenth_power(40));
}

TEST_CASE("S(l) decreases in l") {
  const PrecisionContext ctx(30);
  for (int l = 1; l < 8; ++l) {
    const BigReal a = tail_series_S(l, ctx).bounded();
    const BigReal b = tail_series_S(l + 1, ctx).bounded();
    CHECK(b.value() + b.err() < a.value() - a.err());
  }
}

TEST_CASE("Euler integral by series") {
  const PrecisionContext ctx(30);
  const BigReal s1 = euler_integral_series(1, ctx);
  const BigReal c1 = eval_symbolic(euler_integral_closed_form(1), zeta_odd_main_values(1, ctx), ctx);
  CHECK(overlaps(s1, c1));
  CHECK(overlaps(euler_integral_series(2, ctx), euler_integral_quad(2, ctx).value));
  for (int l = 1; l <= 5; ++l) CHECK(euler_integral_series(l, ctx).value().sign() < 0);
  CHECK(euler_integral_series(4, ctx).to_decimal(30) == "-0.132402680456152013424288772721");
  CHECK_THROWS_AS(euler_integral_series(0, ctx), PreconditionError);
}

TEST_CASE("odd zeta by the main recursion matches frozen reference digits") {
  const PrecisionContext ctx(55);
  const char* refs[] = {kZeta3, kZeta5, kZeta7, kZeta9};
  for (int l = 1; l <= 4; ++l) {
    CAPTURE(l);
    const BigReal z = zeta_odd_main(l, ctx);
    CHECK(overlaps(z, reference(refs[l - 1], ctx)));
    CHECK(z.err() <= tenth_power(55));
  }
  const OddZetaValues v = zeta_odd_main_values(3, ctx);
  CHECK(v.size() == 3);
  CHECK(v.at(7).value() == zeta_odd_main(3, ctx).value());
}

TEST_CASE("zeta(5) by the nested l = 2 form and the collapsed series") {
  const PrecisionContext ctx(40);
  const BigReal pi = const_pi(ctx);
  const BigReal pi2 = pi * pi;
  // (6 pi^2 / 31) (zeta(3) - (pi^2/9) (log pi - 1/4 - 2 S(2)))
  const BigReal inner = const_log_pi(ctx) - to_big_real(Rational(1, 4), ctx) - tail_series_S(2, ctx).bounded() * 2;
  const BigReal nested = pi2 * 6 / 31 * (zeta_odd_main(1, ctx) - pi2 / 9 * inner);
  CHECK(overlaps(nested, zeta_odd_main(2, ctx)));
  CHECK(overlaps(nested, zeta5_collapsed(ctx)));
  CHECK(distance(nested, zeta5_collapsed(ctx)) <= tenth_power(40));
}

TEST_CASE("Euler's zeta(3) series") {
  const PrecisionContext ctx(40);
  CHECK(overlaps(zeta3_euler(ctx), zeta_odd_main(1, ctx)));
  CHECK(overlaps(zeta3_euler(ctx), zeta_odd_oracle(1, ctx)));
  for (int k : {5, 10, 20, 40}) {
    const SeriesResult a = euler_zeta3_sum(k, ctx);
    const SeriesResult b = euler_zeta3_sum(2 * k, ctx);
    CHECK(distance(a.value, b.value) <= a.tail_bound);
  }
}

TEST_CASE("log(pi/e) identity") {
  const LogPiIdentity id30 = log_pi_identity(PrecisionContext(30));
  CHECK(id30.agrees());
  const LogPiIdentity id15 = log_pi_identity(PrecisionContext(15));
  CHECK(id15.lhs.to_decimal(15) == "0.144729885849400");

  // Terms zeta(2n) / (n (2n+1) 4^n) are positive and decreasing: successive partial sums grow by shrinking steps.
  const PrecisionContext ctx(30);
  MpFloat previous_term(1.0, kErrBits);
  for (int n = 1; n <= 40; ++n) {
    const MpFloat term = log_pi_series(n, ctx).value.value() - log_pi_series(n - 1, ctx).value.value();
    CHECK(term.sign() > 0);
    CHECK(term < previous_term);
    previous_term = term;
  }
}

TEST_CASE("CK representation") {
  const PrecisionContext ctx(40);
  for (int l = 1; l <= 4; ++l) {
    CAPTURE(l);
    CHECK(overlaps(zeta_odd_ck(l, ctx), zeta_odd_main(l, ctx)));
    CHECK(distance(zeta_odd_ck(l, ctx), zeta_odd_oracle(l, ctx)) <= tenth_power(40));
  }
  // (2k)!/(2k+2l)! <= (2k+1)^(-2l), the decay used for its tail bound.
  for (int l = 1; l <= 5; ++l) {
    for (int k = 0; k <= 30; ++k) {
      const Rational ratio = Rational(factorial(static_cast<unsigned>(2 * k)), factorial(static_cast<unsigned>(2 * k + 2 * l)));
      mpz_class base = 2 * k + 1;
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(2 * l));
      CHECK(ratio <= Rational(mpz_class(1), p));
    }
  }
}

TEST_CASE("alternating and odd-part sums") {
  const PrecisionContext ctx(30);
  const BigReal pi = const_pi(ctx);
  CHECK(overlaps(alternating_zeta(2, ctx), pi * pi / 12));
  CHECK(overlaps(alternating_zeta(3, ctx), zeta_odd_oracle(1, ctx) * 3 / 4));
  CHECK(overlaps(odd_reciprocal_zeta(3, ctx), zeta_odd_oracle(1, ctx) * 7 / 8));
  CHECK(overlaps(odd_reciprocal_zeta(2, ctx), pi * pi / 8));
  CHECK_THROWS_AS(alternating_zeta(1, ctx), PreconditionError);
}

TEST_CASE("alternating sum for k = 2 by brute force") {
  // sum_{n <= N} (-1)^(n-1) / n^2 plus half the next term; the remainder of
  // an alternating series with convex terms is within half a term of that.
  constexpr long kTerms = 1000000;
  const mpfr_prec_t bits = 96;
  MpFloat sum(0L, bits);
  MpFloat term(bits);
  for (long n = kTerms; n >= 1; --n) {
    mpfr_set_si(term.raw(), n, MPFR_RNDN);
    mpfr_sqr(term.raw(), term.raw(), MPFR_RNDN);
    mpfr_si_div(term.raw(), n % 2 == 1 ? 1 : -1, term.raw(), MPFR_RNDN);
    mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
  }
  MpFloat next(bits);
  mpfr_set_si(next.raw(), kTerms + 1, MPFR_RNDN);
  mpfr_sqr(next.raw(), next.raw(), MPFR_RNDN);
  mpfr_si_div(next.raw(), 1, next.raw(), MPFR_RNDN);  // term kTerms + 1 is positive
  sum += ldexp(next, -1);

  const BigReal eta2 = alternating_zeta(2, PrecisionContext(20));
  CHECK(abs(eta2.value() - sum) <= MpFloat(2e-18, kErrBits));
}

TEST_CASE("direct-summation oracle") {
  const PrecisionContext ctx(15);
  CHECK(zeta_odd_oracle(1, ctx).to_decimal(15) == "1.20205690315959");
  CHECK(zeta_odd_oracle(2, ctx).to_decimal(15) == "1.03692775514337");
  for (int s : {3, 4, 5, 7, 12}) {
    CAPTURE(s);
    const PrecisionContext wide(40);
    const OracleResult a = zeta_direct_oracle(s, wide);
    const OracleResult b = zeta_direct_oracle(s, wide, 2 * a.cutoff);
    CHECK(overlaps(a.value, b.value));
    CHECK(a.value.err() <= tenth_power(wide.digits + 5));
  }
  CHECK(overlaps(zeta_direct_oracle(3, PrecisionContext(55)).value, reference(kZeta3, PrecisionContext(55))));
  CHECK_THROWS_AS(zeta_direct_oracle(1, ctx), PreconditionError);

  // zeta(2l+1) decreases toward 1 from above.
  const PrecisionContext mid(30);
  BigReal previous = zeta_odd_oracle(1, mid);
  for (int l = 2; l <= 12; ++l) {
    const BigReal z = zeta_odd_oracle(l, mid);
    CHECK(z.value() - z.err() > MpFloat(1L, 64));
    CHECK(z.value() + z.err() < previous.value() - previous.err());
    previous = z;
  }
  CHECK(previous.value() - MpFloat(1L, 64) < MpFloat(1e-7, 64));
}

TEST_CASE("zeta_value dispatches by parity") {
  const PrecisionContext ctx(30);
  const BigReal pi = const_pi(ctx);
  CHECK(overlaps(zeta_value(2, ctx), pi * pi / 6));
  CHECK(overlaps(zeta_value(7, ctx), zeta_odd_oracle(3, ctx)));
  CHECK_THROWS_AS(zeta_value(1, ctx), PreconditionError);
}

TEST_CASE("preconditions") {
  const PrecisionContext ctx(20);
  CHECK_THROWS_AS(tail_series_S(0, ctx), PreconditionError);
  CHECK_THROWS_AS(tail_series_S(1, -1, ctx), PreconditionError);
  CHECK_THROWS_AS(zeta_odd_main(0, ctx), PreconditionError);
  CHECK_THROWS_AS(zeta_odd_ck(0, ctx), PreconditionError);
}
