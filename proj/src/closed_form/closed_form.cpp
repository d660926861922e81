#include "eulerzeta/closed_form.hpp"

#include "eulerzeta/exact_zeta.hpp"

namespace eulerzeta {
namespace {

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n)), mpz_class(1)); }

}  // namespace

SymbolicConstant euler_integral_closed_form(int l) {
  if (l < 1) throw PreconditionError("euler_integral_closed_form requires l >= 1");
  SymbolicConstant c;
  c.add(Atom::log2(2 * l), -pow2(-2 * l) / Rational(2 * l));

  const Rational lead = fact(2 * l - 1) * pow2(-2 * l);
  for (int k = 1; k <= l - 1; ++k) {
    Rational coeff = lead / fact(2 * (l - k)) * (Rational(1) - pow2(-2 * k));
    if ((k - 1) % 2 != 0) coeff = -coeff;
    c.add(Atom::zeta_odd(2 * k + 1, 2 * (l - k)), coeff);
  }

  Rational top = fact(2 * l - 1) * (pow2(2 * l + 1) - Rational(1)) * pow2(-4 * l);
  if ((l - 1) % 2 != 0) top = -top;
  c.add(Atom::zeta_odd(2 * l + 1), top);
  return c;
}

SymbolicConstant euler_integral_elementary_part(int l) {
  if (l < 1) throw PreconditionError("euler_integral_elementary_part requires l >= 1");
  const Rational scale = pow2(-2 * l);  // (pi/2)^(2l) = scale * pi^(2l)
  SymbolicConstant c;
  c.add(Atom::log_pi(2 * l), scale / Rational(2 * l));
  c.add(Atom::log2(2 * l), -scale / Rational(2 * l));
  c.add(Atom::unit(2 * l), -scale / Rational(4L * l * l));
  return c;
}

}  // namespace eulerzeta
