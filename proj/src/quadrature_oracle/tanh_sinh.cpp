#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "eulerzeta/constants.hpp"
#include "eulerzeta/quadrature.hpp"

namespace eulerzeta {
namespace {

// One abscissa on [0, 1]: x, 1 - x and the weight dx/dt.
struct Node {
  MpFloat x;
  MpFloat complement;
  MpFloat weight;
  bool center = false;  // t = 0 has no mirror
};

using NodeLevel = std::vector<Node>;

// u = (pi/2) sinh t is cut where e^(-2u) drops below 10^-(working digits + 20).
double t_max_for(const PrecisionContext& ctx) {
  const double u_max = (ctx.working_digits() + 20) * std::log(10.0) / 2.0;
  return std::asinh(2.0 * u_max / M_PI);
}

// Node for t > 0 on the unit interval; the mirror node at -t swaps x and complement.
Node make_node(const MpFloat& t, const MpFloat& half_pi, mpfr_prec_t bits) {
  MpFloat u(bits);
  mpfr_sinh(u.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul(u.raw(), u.raw(), half_pi.raw(), MPFR_RNDN);

  // q = e^(-2u); 1 - x = q / (1 + q); x = 1 / (1 + q)
  MpFloat q(bits);
  mpfr_mul_si(q.raw(), u.raw(), -2, MPFR_RNDN);
  mpfr_exp(q.raw(), q.raw(), MPFR_RNDN);
  MpFloat one_plus_q(bits);
  mpfr_add_ui(one_plus_q.raw(), q.raw(), 1, MPFR_RNDN);

  Node n{MpFloat(bits), MpFloat(bits), MpFloat(bits), false};
  mpfr_ui_div(n.x.raw(), 1, one_plus_q.raw(), MPFR_RNDN);
  mpfr_div(n.complement.raw(), q.raw(), one_plus_q.raw(), MPFR_RNDN);

  // dx/dt = (1/2) sech^2(u) (pi/2) cosh t, sech^2(u) = 4 q / (1 + q)^2
  MpFloat cosh_t(bits);
  mpfr_cosh(cosh_t.raw(), t.raw(), MPFR_RNDN);
  mpfr_mul_ui(n.weight.raw(), q.raw(), 2, MPFR_RNDN);
  mpfr_div(n.weight.raw(), n.weight.raw(), one_plus_q.raw(), MPFR_RNDN);
  mpfr_div(n.weight.raw(), n.weight.raw(), one_plus_q.raw(), MPFR_RNDN);
  mpfr_mul(n.weight.raw(), n.weight.raw(), half_pi.raw(), MPFR_RNDN);
  mpfr_mul(n.weight.raw(), n.weight.raw(), cosh_t.raw(), MPFR_RNDN);
  return n;
}

// Nodes new at `level` (t = k 2^-level, k odd for level > 0, all k at level 0), t >= 0 only.
std::shared_ptr<const NodeLevel> nodes_at(int level, const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<std::pair<int, mpfr_prec_t>, std::shared_ptr<const NodeLevel>> cache;

  const auto key = std::make_pair(level, ctx.bits());
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const mpfr_prec_t bits = ctx.bits();
  const MpFloat half_pi = ldexp(const_pi(ctx).value(), -1);
  const double t_max = t_max_for(ctx);
  const long step_denominator = 1L << level;
  const long k_max = static_cast<long>(std::floor(t_max * static_cast<double>(step_denominator)));

  auto nodes = std::make_shared<NodeLevel>();
  for (long k = (level == 0 ? 0 : 1); k <= k_max; k += (level == 0 ? 1 : 2)) {
    MpFloat t(bits);
    mpfr_set_si_2exp(t.raw(), k, -level, MPFR_RNDN);
    nodes->push_back(make_node(t, half_pi, bits));
    nodes->back().center = k == 0;
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(nodes));
  return it->second;
}

// log(sin x) given x and pi/2 - x, accurate near both ends.
MpFloat log_sin(const MpFloat& x, const MpFloat& right) {
  MpFloat r(x.precision());
  if (x <= right) {
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    mpfr_log(r.raw(), r.raw(), MPFR_RNDN);
  } else {
    // sin x = cos d = 1 - 2 sin^2(d/2)
    mpfr_div_2ui(r.raw(), right.raw(), 1, MPFR_RNDN);
    mpfr_sin(r.raw(), r.raw(), MPFR_RNDN);
    mpfr_sqr(r.raw(), r.raw(), MPFR_RNDN);
    mpfr_mul_si(r.raw(), r.raw(), -2, MPFR_RNDN);
    mpfr_log1p(r.raw(), r.raw(), MPFR_RNDN);
  }
  return r;
}

MpFloat sin_of(const MpFloat& x, const MpFloat& right) {
  MpFloat r(x.precision());
  if (x <= right) {
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  } else {
    mpfr_cos(r.raw(), right.raw(), MPFR_RNDN);
  }
  return r;
}

}  // namespace

NonConvergenceError::NonConvergenceError(MpFloat last, MpFloat previous, int level)
    : std::runtime_error("tanh-sinh quadrature did not converge by level " + std::to_string(level) +
                         " (last estimates " + last.to_sci_string(20) + ", " + previous.to_sci_string(20) + ")"),
      last_(std::move(last)),
      previous_(std::move(previous)),
      level_(level) {}

QuadratureResult integrate_tanh_sinh(const Integrand& f, const BigReal& upper, const PrecisionContext& ctx,
                                     const QuadratureOptions& opts) {
  const mpfr_prec_t bits = ctx.bits();
  const MpFloat& b = upper.value();
  const MpFloat tol = pow10_neg(ctx.digits + opts.extra_digits, kErrBits, MPFR_RNDD);

  MpFloat weighted_sum(bits);  // sum of w f over all nodes so far
  MpFloat abs_sum(kErrBits);   // sum of |w f|, for the rounding allowance
  MpFloat estimate(bits);
  MpFloat previous(bits);
  MpFloat est_error(kErrBits);
  std::vector<MpFloat> history;

  for (int level = 0; level <= opts.max_level; ++level) {
    const auto nodes = nodes_at(level, ctx);
    for (const Node& n : *nodes) {
      const MpFloat w = n.weight * b;
      const MpFloat x = n.x * b;
      const MpFloat c = n.complement * b;
      // t and -t give (x, c) and (c, x).
      MpFloat contribution = w * f(x, c);
      if (!n.center) contribution += w * f(c, x);
      weighted_sum += contribution;
      abs_sum = add(abs_sum, abs(contribution), kErrBits, MPFR_RNDU);
    }

    MpFloat step(bits);
    mpfr_set_si_2exp(step.raw(), 1, -level, MPFR_RNDN);
    previous = estimate;
    estimate = weighted_sum * step;
    history.push_back(estimate);
    if (level >= 2) {
      est_error = abs(estimate - previous).rounded(kErrBits, MPFR_RNDU);
      if (est_error <= tol) {
        // Rounding allowance: each contribution carries a few ulps of relative error.
        MpFloat rounding = mul(abs_sum, step, kErrBits, MPFR_RNDU);
        mpfr_mul_2si(rounding.raw(), rounding.raw(), 4 - static_cast<long>(bits), MPFR_RNDU);
        MpFloat err = add(est_error, rounding, kErrBits, MPFR_RNDU);
        // The upper limit's own uncertainty moves the integral by at most |f| near it; f is bounded here.
        err = add(err, mul(upper.err(), MpFloat(16L, kErrBits), kErrBits, MPFR_RNDU), kErrBits, MPFR_RNDU);
        return {BigReal(estimate, err), est_error, level, std::move(history)};
      }
    }
  }
  throw NonConvergenceError(estimate, previous, opts.max_level);
}

QuadratureResult euler_integral_quad(int l, const PrecisionContext& ctx, const QuadratureOptions& opts) {
  if (l < 1) throw std::invalid_argument("euler_integral_quad requires l >= 1");
  const BigReal upper = const_pi(ctx) / 2;
  const unsigned power = static_cast<unsigned>(2 * l - 1);
  return integrate_tanh_sinh(
      [power](const MpFloat& x, const MpFloat& right) {
        MpFloat p(x.precision());
        mpfr_pow_ui(p.raw(), x.raw(), power, MPFR_RNDN);
        return p * log_sin(x, right);
      },
      upper, ctx, opts);
}

ReferenceIntegral reference_integral(int which, const PrecisionContext& ctx, const QuadratureOptions& opts) {
  const BigReal pi = const_pi(ctx);
  const BigReal log2 = const_log2(ctx);
  const BigReal upper = pi / 2;

  switch (which) {
    case 0:
      return {"int_0^{pi/2} log(sin x) dx",
              integrate_tanh_sinh([](const MpFloat& x, const MpFloat& right) { return log_sin(x, right); }, upper,
                                  ctx, opts),
              -(upper * log2)};
    case 1:
      return {"int_0^{pi/2} sin(x) log(sin x) dx",
              integrate_tanh_sinh(
                  [](const MpFloat& x, const MpFloat& right) { return sin_of(x, right) * log_sin(x, right); }, upper,
                  ctx, opts),
              log2 - BigReal::exact(1, ctx)};
    case 2: {
      const BigReal pi2 = pi * pi;
      return {"int_0^{pi/2} x log(x) dx",
              integrate_tanh_sinh(
                  [](const MpFloat& x, const MpFloat&) {
                    MpFloat r(x.precision());
                    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
                    return x * r;
                  },
                  upper, ctx, opts),
              pi2 / 8 * log(upper) - pi2 / 16};
    }
    default:
      throw std::invalid_argument("reference integral index must be 0, 1 or 2");
  }
}

std::array<ReferenceIntegral, 3> reference_integrals(const PrecisionContext& ctx, const QuadratureOptions& opts) {
  return {reference_integral(0, ctx, opts), reference_integral(1, ctx, opts), reference_integral(2, ctx, opts)};
}

}  // namespace eulerzeta
