#include "eulerzeta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "eulerzeta/closed_form.hpp"
#include "eulerzeta/constants.hpp"
#include "eulerzeta/exact_zeta.hpp"
#include "eulerzeta/quadrature.hpp"
#include "eulerzeta/series.hpp"

namespace eulerzeta {
namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
std::function<ReportEntry()> timed(F f) {
  return [f]() {
    const auto start = Clock::now();
    ReportEntry e = f();
    e.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return e;
  };
}

MpFloat tol(int exponent) { return pow10_neg(exponent, kErrBits, MPFR_RNDD); }

std::string l_str(int l) { return std::to_string(l); }

}  // namespace

ReportEntry compare_entry(const std::string& quantity, const std::string& method, const BigReal& value,
                          const std::string& reference_method, const BigReal& reference, const MpFloat& tolerance,
                          int digits, long terms_or_level) {
  const MpFloat diff = distance(value, reference);
  ReportEntry e;
  e.quantity = quantity;
  e.method = method;
  e.digits = digits;
  e.value = value.to_decimal(digits);
  e.error_bound = value.err_string();
  e.terms_or_level = terms_or_level;
  e.status = diff <= tolerance ? Status::kPass : Status::kFail;
  e.reference_method = reference_method;
  e.reference_value = reference.to_decimal(digits);
  e.discrepancy = diff.to_sci_string(2, MPFR_RNDU);
  e.tolerance = tolerance.to_sci_string(2);
  return e;
}

std::vector<ReportEntry> run_tasks(const std::vector<std::function<ReportEntry()>>& tasks, int threads) {
  std::vector<ReportEntry> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  const int n = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (n == 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

Report run_verification(const VerifyOptions& opts) {
  const PrecisionContext ctx(opts.digits);
  const int d = opts.digits;
  QuadratureOptions qopts;
  qopts.max_level = opts.max_quad_level;

  std::vector<std::function<ReportEntry()>> tasks;

  tasks.push_back(timed([=]() {
    const int n = opts.even_table_max;
    const auto table = shared_even_table(n);
    bool all_equal = true;
    for (int l = 1; l <= n; ++l) all_equal = all_equal && table->coeff(l) == zeta_even_oracle(l);
    const BigReal pi_pow = pow_int(const_pi(ctx), static_cast<unsigned>(2 * n), ctx);
    ReportEntry e = compare_entry("even_table[1.." + l_str(n) + "]", "recurrence", to_big_real(table->coeff(n), ctx) * pi_pow,
                                  "bernoulli", to_big_real(zeta_even_oracle(n), ctx) * pi_pow, MpFloat(kErrBits), d, n);
    e.status = all_equal ? Status::kPass : Status::kFail;
    return e;
  }));

  for (int l = 1; l <= opts.lmax; ++l) {
    tasks.push_back(timed([=]() {
      const auto table = shared_even_table(l);
      const Rational r = table->coeff(l);
      const Rational oracle = zeta_even_oracle(l);
      const BigReal pi_pow = pow_int(const_pi(ctx), static_cast<unsigned>(2 * l), ctx);
      ReportEntry e = compare_entry("zeta(" + l_str(2 * l) + ")", "recurrence", to_big_real(r, ctx) * pi_pow,
                                    "bernoulli", to_big_real(oracle, ctx) * pi_pow, MpFloat(kErrBits), d, l);
      e.status = r == oracle ? Status::kPass : Status::kFail;
      return e;
    }));
  }

  for (int l = 1; l <= opts.lmax; ++l) {
    const std::string q = "euler_integral(" + l_str(l) + ")";
    tasks.push_back(timed([=]() {
      const BigReal closed = eval_symbolic(euler_integral_closed_form(l), zeta_odd_main_values(l, ctx), ctx);
      return compare_entry(q, "closed_form", closed, "series", euler_integral_series(l, ctx), tol(d - 5), d,
                           tail_series_S(l, ctx).terms_used);
    }));
    tasks.push_back(timed([=]() {
      const QuadratureResult quad = euler_integral_quad(l, ctx, qopts);
      const BigReal closed = eval_symbolic(euler_integral_closed_form(l), zeta_odd_main_values(l, ctx), ctx);
      return compare_entry(q, "quadrature", quad.value, "closed_form", closed, tol(d - 10), d, quad.level);
    }));
  }

  for (int l = 1; l <= opts.lmax; ++l) {
    const std::string q = "zeta(" + l_str(2 * l + 1) + ")";
    tasks.push_back(timed([=]() {
      return compare_entry(q, "main", zeta_odd_main(l, ctx), "oracle", zeta_odd_oracle(l, ctx), tol(d), d,
                           tail_series_S(l, ctx).terms_used);
    }));
    tasks.push_back(timed([=]() {
      return compare_entry(q, "ck", zeta_odd_ck(l, ctx), "oracle", zeta_odd_oracle(l, ctx), tol(d), d);
    }));
  }

  tasks.push_back(timed([=]() {
    return compare_entry("zeta(3)", "euler", zeta3_euler(ctx), "main", zeta_odd_main(1, ctx), tol(d), d);
  }));
  tasks.push_back(timed([=]() {
    return compare_entry("zeta(5)", "collapsed", zeta5_collapsed(ctx), "main", zeta_odd_main(2, ctx), tol(d), d);
  }));

  tasks.push_back(timed([=]() {
    const LogPiIdentity id = log_pi_identity(ctx);
    ReportEntry e = compare_entry("log(pi/e)", "series", id.rhs.bounded(), "log_pi_minus_1", id.lhs, tol(d), d,
                                  id.rhs.terms_used);
    if (!id.agrees()) e.status = Status::kFail;
    return e;
  }));

  for (int i = 0; i < 3; ++i) {
    tasks.push_back(timed([=]() {
      const ReferenceIntegral r = reference_integral(i, ctx, qopts);
      return compare_entry(r.name, "quadrature", r.quad.value, "closed_form", r.closed_form, tol(d - 5), d,
                           r.quad.level);
    }));
  }

  tasks.push_back(timed([=]() {
    const BigReal pi = const_pi(ctx);
    return compare_entry("alternating_zeta(2)", "eta", alternating_zeta(2, ctx), "pi^2/12", pi * pi / 12, tol(d), d);
  }));
  tasks.push_back(timed([=]() {
    const BigReal seven_eighths = to_big_real(Rational(7, 8), ctx);
    return compare_entry("odd_reciprocal_zeta(3)", "lambda", odd_reciprocal_zeta(3, ctx), "7/8*oracle",
                         seven_eighths * zeta_odd_oracle(1, ctx), tol(d), d);
  }));

  return Report{run_tasks(tasks, opts.threads)};
}

}  // namespace eulerzeta
