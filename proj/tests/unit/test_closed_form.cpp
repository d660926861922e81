#include "doctest.h"
#include "eulerzeta/closed_form.hpp"
#include "eulerzeta/constants.hpp"
#include "eulerzeta/exact_zeta.hpp"
#include "eulerzeta/quadrature.hpp"
#include "eulerzeta/series.hpp"

using namespace eulerzeta;

namespace {

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n)), mpz_class(1)); }

}  // namespace

TEST_CASE("atoms") {
  CHECK(Atom::unit().str() == "1");
  CHECK(Atom::log2(2).str() == "pi^2*log2");
  CHECK(Atom::log_pi().str() == "logpi");
  CHECK(Atom::zeta_odd(5, 4).str() == "pi^4*zeta(5)");
  CHECK_THROWS_AS(Atom::zeta_odd(4), std::invalid_argument);
  CHECK_THROWS_AS(Atom::zeta_odd(1), std::invalid_argument);
  CHECK_THROWS_AS(Atom::unit(3), std::invalid_argument);
  CHECK_THROWS_AS(Atom::log2(-2), std::invalid_argument);
  const AtomOrder less;
  CHECK(less(Atom::log2(4), Atom::unit(2)));
  CHECK(less(Atom::unit(2), Atom::log2(2)));
  CHECK(less(Atom::log_pi(2), Atom::zeta_odd(3, 2)));
  CHECK(less(Atom::zeta_odd(3), Atom::zeta_odd(5)));
}

TEST_CASE("sym_combine") {
  const SymbolicConstant a = euler_integral_closed_form(2);
  CHECK(sym_combine(a, a, 1, -1).is_zero());
  CHECK(sym_combine(a, a, 1, -1).str() == "0");

  const SymbolicConstant five_a = sym_combine(a, SymbolicConstant{}, 5, 1);
  for (const auto& [atom, c] : a.terms()) CHECK(five_a.coeff(atom) == c * Rational(5));
  CHECK(five_a.terms().size() == a.terms().size());

  SymbolicConstant x(Atom::unit(), Rational(1, 3));
  x.add(Atom::unit(), Rational(-1, 3));
  CHECK(x.is_zero());
}

TEST_CASE("golden closed forms") {
  CHECK(euler_integral_closed_form(1).str() == "-1/8*pi^2*log2 + 7/16*zeta(3)");
  CHECK(euler_integral_closed_form(2).str() == "-1/64*pi^4*log2 + 9/64*pi^2*zeta(3) - 93/128*zeta(5)");
  CHECK(euler_integral_closed_form(3).str() ==
        "-1/384*pi^6*log2 + 15/256*pi^4*zeta(3) - 225/256*pi^2*zeta(5) + 1905/512*zeta(7)");

  SymbolicConstant l1;
  l1.add(Atom::log2(2), Rational(-1, 8));
  l1.add(Atom::zeta_odd(3), Rational(7, 16));
  CHECK(euler_integral_closed_form(1) == l1);

  SymbolicConstant l2;
  l2.add(Atom::log2(4), Rational(-1, 64));
  l2.add(Atom::zeta_odd(3, 2), Rational(9, 64));
  l2.add(Atom::zeta_odd(5), Rational(-93, 128));
  CHECK(euler_integral_closed_form(2) == l2);

  CHECK_THROWS_AS(euler_integral_closed_form(0), PreconditionError);
}

TEST_CASE("adding (pi^2/8) log 2 to the l = 1 form leaves (7/16) zeta(3)") {
  const SymbolicConstant s =
      sym_combine(euler_integral_closed_form(1), SymbolicConstant(Atom::log2(2), Rational(1, 8)), 1, 1);
  CHECK(s == SymbolicConstant(Atom::zeta_odd(3), Rational(7, 16)));
  CHECK(s.str() == "7/16*zeta(3)");
}

TEST_CASE("coefficient structure for l = 1..15") {
  for (int l = 1; l <= 15; ++l) {
    CAPTURE(l);
    const SymbolicConstant c = euler_integral_closed_form(l);
    Rational top = fact(2 * l - 1) * (pow2(2 * l + 1) - Rational(1)) / pow2(4 * l);
    if (l % 2 == 0) top = -top;
    CHECK(c.coeff(Atom::zeta_odd(2 * l + 1)) == top);
    CHECK(c.coeff(Atom::log2(2 * l)) == -pow2(-2 * l) / Rational(2 * l));
    for (int k = 1; k <= l - 1; ++k) {
      const int expected_sign = k % 2 == 1 ? 1 : -1;
      CHECK(c.coeff(Atom::zeta_odd(2 * k + 1, 2 * (l - k))).sign() == expected_sign);
    }
    CHECK(c.terms().size() == static_cast<std::size_t>(l + 1));
    CHECK(SymbolicConstant::parse(c.str()) == c);
  }
}

TEST_CASE("parse") {
  const SymbolicConstant c = SymbolicConstant::parse("3/2*pi^2*logpi - 1/4 + 2*log2");
  CHECK(c.coeff(Atom::log_pi(2)) == Rational(3, 2));
  CHECK(c.coeff(Atom::unit()) == Rational(-1, 4));
  CHECK(c.coeff(Atom::log2()) == Rational(2));
  CHECK(SymbolicConstant::parse(c.str()) == c);
  CHECK(SymbolicConstant::parse("0").is_zero());
  CHECK_THROWS_AS(SymbolicConstant::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SymbolicConstant::parse("1/2*gamma"), std::invalid_argument);
  CHECK_THROWS_AS(SymbolicConstant::parse("1/2*log2*logpi"), std::invalid_argument);
  CHECK_THROWS_AS(SymbolicConstant::parse("1/2*zeta(4)"), std::invalid_argument);
  CHECK_THROWS_AS(SymbolicConstant::parse("1 +"), std::invalid_argument);
}

TEST_CASE("elementary part") {
  const SymbolicConstant e = euler_integral_elementary_part(1);
  CHECK(e.str() == "-1/16*pi^2 - 1/8*pi^2*log2 + 1/8*pi^2*logpi");
  CHECK(e.coeff(Atom::log_pi(2)) == Rational(1, 8));
  const SymbolicConstant e4 = euler_integral_elementary_part(4);
  for (const auto& [atom, coeff] : e4.terms()) CHECK(atom.pi_power == 8);
}

TEST_CASE("evaluation") {
  const PrecisionContext ctx(30);
  const BigReal zero = eval_symbolic(SymbolicConstant{}, {}, ctx);
  CHECK(zero.value().is_zero());
  CHECK(zero.err().is_zero());

  const BigReal one = eval_symbolic(SymbolicConstant(Atom::unit(), Rational(1)), {}, ctx);
  CHECK(one.value() == MpFloat(1L, 64));
  CHECK(one.err().is_zero());

  const BigReal pi2 = eval_symbolic(SymbolicConstant(Atom::unit(2), Rational(1)), {}, ctx);
  CHECK(overlaps(pi2, const_pi(ctx) * const_pi(ctx)));

  const BigReal lp = eval_symbolic(SymbolicConstant(Atom::log_pi(), Rational(1)), {}, ctx);
  CHECK(overlaps(lp, const_log_pi(ctx)));

  try {
    eval_symbolic(euler_integral_closed_form(2), {{3, zeta_odd_oracle(1, ctx)}}, ctx);
    FAIL("expected MissingAtomError");
  } catch (const MissingAtomError& e) {
    CHECK(e.atom() == Atom::zeta_odd(5));
    CHECK(std::string(e.what()).find("zeta(5)") != std::string::npos);
  }
}

TEST_CASE("l = 1 with the oracle zeta(3) matches quadrature") {
  const PrecisionContext ctx(30);
  const BigReal closed = eval_symbolic(euler_integral_closed_form(1), {{3, zeta_odd_oracle(1, ctx)}}, ctx);
  const QuadratureResult quad = euler_integral_quad(1, ctx);
  CHECK(overlaps(closed, quad.value));
  CHECK(closed.to_decimal(30) == "-0.329236162849817068243549448583");
}

TEST_CASE("l = 3 closed form confirmed by quadrature at 30 digits") {
  const PrecisionContext ctx(30);
  OddZetaValues odd;
  for (int l = 1; l <= 3; ++l) odd[2 * l + 1] = zeta_odd_oracle(l, ctx);
  const BigReal closed = eval_symbolic(euler_integral_closed_form(3), odd, ctx);
  const QuadratureResult quad = euler_integral_quad(3, ctx);
  CHECK(distance(closed, quad.value) <= pow10_neg(30, kErrBits, MPFR_RNDD));
  CHECK(closed.to_decimal(30) == "-0.117575834072332482062429067949");
}
