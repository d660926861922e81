#include "properties.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "eulerzeta/closed_form.hpp"
#include "eulerzeta/constants.hpp"
#include "eulerzeta/quadrature.hpp"
#include "eulerzeta/report.hpp"
#include "eulerzeta/series.hpp"
#include "eulerzeta/verify.hpp"

namespace properties {
namespace {

using namespace eulerzeta;
using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng) {
  const long num = uniform(rng, -999, 999);
  const long den = uniform(rng, 1, 999);
  return Rational(num, den);
}

Atom random_atom(Rng& rng) {
  const int pi_power = 2 * uniform(rng, 0, 4);
  switch (uniform(rng, 0, 3)) {
    case 0:
      return Atom::unit(pi_power);
    case 1:
      return Atom::log2(pi_power);
    case 2:
      return Atom::log_pi(pi_power);
    default:
      return Atom::zeta_odd(2 * uniform(rng, 1, 4) + 1, pi_power);
  }
}

SymbolicConstant random_constant(Rng& rng) {
  SymbolicConstant c;
  const int n = uniform(rng, 0, 6);
  for (int i = 0; i < n; ++i) c.add(random_atom(rng), random_rational(rng));
  return c;
}

void record(Outcome& o, bool ok, const std::string& what) {
  ++o.cases;
  if (!ok) {
    if (o.failures == 0) o.first_failure = what;
    ++o.failures;
  }
}

std::string bits(const BigReal& x) { return x.value().hex() + "/" + x.err().hex(); }

}  // namespace

Outcome tail_bound_soundness(int cases) {
  Outcome o;
  o.name = "tail-bound soundness";
  const PrecisionContext ctx(80);
  auto check = [&](int l, int k) {
    const SeriesResult a = tail_series_S(l, k, ctx);
    const SeriesResult b = tail_series_S(l, 4 * k, ctx);
    const bool ok = distance(a.value, b.value) <= a.tail_bound && a.tail_bound == tail_bound_S(l, k) &&
                    b.value.value() > a.value.value();
    record(o, ok, "l=" + std::to_string(l) + " K=" + std::to_string(k));
  };
  for (int l = 1; l <= 5; ++l) {
    for (int k : {10, 20, 40}) check(l, k);
  }
  Rng rng(kSeed);
  while (o.cases < cases) check(uniform(rng, 1, 12), uniform(rng, 1, 60));
  return o;
}

Outcome symbolic_homomorphism(int cases) {
  Outcome o;
  o.name = "symbolic/numeric homomorphism";
  Rng rng(kSeed + 1);
  const PrecisionContext ctx(40);
  const OddZetaValues odd = zeta_odd_main_values(4, ctx);
  for (int i = 0; i < cases; ++i) {
    const SymbolicConstant a = random_constant(rng);
    const SymbolicConstant b = i % 5 == 0 ? a : random_constant(rng);
    const Rational s = random_rational(rng);
    const Rational t = random_rational(rng);
    const BigReal lhs = eval_symbolic(sym_combine(a, b, s, t), odd, ctx);
    const BigReal rhs = to_big_real(s, ctx) * eval_symbolic(a, odd, ctx) + to_big_real(t, ctx) * eval_symbolic(b, odd, ctx);
    record(o, overlaps(lhs, rhs), a.str() + " | " + b.str() + " | " + s.str() + " | " + t.str());
  }
  return o;
}

Outcome thread_determinism(int cases) {
  Outcome o;
  o.name = "determinism across thread counts";
  Rng rng(kSeed + 2);
  // Fresh precisions make the multi-threaded pass race to fill the caches.
  std::vector<std::function<std::string()>> work;
  std::vector<std::string> labels;
  for (int i = 0; i < cases; ++i) {
    const PrecisionContext ctx(uniform(rng, 8, 70), uniform(rng, 5, 20));
    const int l = uniform(rng, 1, 5);
    const int kind = uniform(rng, 0, 5);
    labels.push_back("kind=" + std::to_string(kind) + " l=" + std::to_string(l) + " digits=" +
                     std::to_string(ctx.digits) + " guard=" + std::to_string(ctx.guard));
    work.push_back([=]() -> std::string {
      switch (kind) {
        case 0:
          return bits(zeta_odd_main(l, ctx));
        case 1:
          return bits(zeta_odd_ck(l, ctx));
        case 2:
          return bits(euler_integral_series(l, ctx));
        case 3:
          return bits(eval_symbolic(euler_integral_closed_form(l), zeta_odd_main_values(l, ctx), ctx));
        case 4:
          return bits(euler_integral_quad(l, ctx).value);
        default:
          return bits(zeta_direct_oracle(2 * l + 1, ctx).value);
      }
    });
  }
  auto run_all = [&](int threads) {
    std::vector<std::function<ReportEntry()>> tasks;
    for (const auto& w : work) {
      tasks.push_back([w]() {
        ReportEntry e;
        e.value = w();
        return e;
      });
    }
    std::vector<std::string> out;
    for (const auto& e : run_tasks(tasks, threads)) out.push_back(e.value);
    return out;
  };
  const std::vector<std::string> parallel = run_all(4);
  const std::vector<std::string> serial = run_all(1);
  for (std::size_t i = 0; i < work.size(); ++i) record(o, parallel[i] == serial[i], labels[i]);
  return o;
}

Outcome precision_refinement(int cases) {
  Outcome o;
  o.name = "monotone precision refinement";
  Rng rng(kSeed + 3);
  for (int i = 0; i < cases; ++i) {
    const int d = uniform(rng, 5, 60);
    const int kind = uniform(rng, 0, 5);
    const int l = uniform(rng, 1, 4);
    const SymbolicConstant c = random_constant(rng);
    const unsigned n = static_cast<unsigned>(uniform(rng, 0, 12));
    auto evaluate = [&](const PrecisionContext& ctx) -> BigReal {
      switch (kind) {
        case 0: {
          const BigReal pi = const_pi(ctx);
          return pow_int(pi, n, ctx) * const_log2(ctx) - const_log_pi(ctx) / pi;
        }
        case 1:
          return eval_symbolic(c, zeta_odd_main_values(4, ctx), ctx);
        case 2:
          return zeta_odd_main(l, ctx);
        case 3:
          return euler_integral_series(l, ctx);
        case 4:
          return exp(const_log_pi(ctx) * static_cast<long>(n + 1) / 7);
        default:
          return zeta_odd_ck(l, ctx);
      }
    };
    const BigReal lo = evaluate(PrecisionContext(d));
    const BigReal hi = evaluate(PrecisionContext(2 * d));
    const bool exact_zero = lo.err().is_zero() && hi.err().is_zero();
    const bool ok = overlaps(lo, hi) && (exact_zero || hi.err() < lo.err());
    record(o, ok, "kind=" + std::to_string(kind) + " D=" + std::to_string(d) + " l=" + std::to_string(l) + " " + c.str());
  }
  return o;
}

Outcome symbolic_round_trip(int cases) {
  Outcome o;
  o.name = "symbolic text round trip";
  Rng rng(kSeed + 4);
  for (int i = 0; i < cases; ++i) {
    const SymbolicConstant c = random_constant(rng);
    record(o, SymbolicConstant::parse(c.str()) == c, c.str());
  }
  return o;
}

Outcome report_round_trip(int cases) {
  Outcome o;
  o.name = "report JSON round trip";
  Rng rng(kSeed + 5);
  for (int i = 0; i < cases; ++i) {
    Report r;
    const int n = uniform(rng, 0, 5);
    for (int j = 0; j < n; ++j) {
      ReportEntry e;
      e.quantity = "zeta(" + std::to_string(2 * uniform(rng, 1, 9) + 1) + ")";
      e.method = uniform(rng, 0, 1) == 0 ? "main" : "quadrature";
      e.digits = uniform(rng, 1, 500);
      e.value = random_rational(rng).str();
      e.error_bound = std::to_string(uniform(rng, 1, 9)) + ".0e-" + std::to_string(uniform(rng, 1, 300));
      e.terms_or_level = uniform(rng, 0, 100000);
      e.elapsed_ms = uniform(rng, 0, 100000);
      const bool comparison = uniform(rng, 0, 1) == 1;
      if (comparison) {
        e.status = uniform(rng, 0, 1) == 0 ? Status::kPass : Status::kFail;
        e.reference_method = "oracle";
        e.reference_value = random_rational(rng).str();
        e.discrepancy = "1.0e-" + std::to_string(uniform(rng, 1, 99));
        e.tolerance = "1.0e-" + std::to_string(uniform(rng, 1, 99));
      }
      r.entries.push_back(e);
    }
    const std::string text = nlohmann::json(r).dump();
    record(o, nlohmann::json::parse(text).get<Report>() == r, text);
  }
  return o;
}

std::vector<Outcome> all(int cases) {
  return {tail_bound_soundness(cases), symbolic_homomorphism(cases), thread_determinism(cases),
          precision_refinement(cases), symbolic_round_trip(cases), report_round_trip(cases)};
}

}  // namespace properties
