#include "eulerzeta/cli.hpp"

#include <chrono>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "eulerzeta/closed_form.hpp"
#include "eulerzeta/config.hpp"
#include "eulerzeta/constants.hpp"
#include "eulerzeta/exact_zeta.hpp"
#include "eulerzeta/quadrature.hpp"
#include "eulerzeta/series.hpp"
#include "eulerzeta/verify.hpp"

namespace eulerzeta {
namespace {

constexpr int kDefaultDigits = 50;
constexpr int kDefaultLmax = 4;
constexpr const char* kDefaultConfig = "eulerzeta.toml";

using Clock = std::chrono::steady_clock;

struct Settings {
  int digits = kDefaultDigits;
  int lmax = kDefaultLmax;
  int max_quad_level = 12;
};

ReportEntry value_entry(const std::string& quantity, const std::string& method, const BigReal& v, int digits,
                        long terms_or_level, Clock::time_point start) {
  ReportEntry e;
  e.quantity = quantity;
  e.method = method;
  e.digits = digits;
  e.value = v.to_decimal(digits);
  e.error_bound = v.err_string();
  e.terms_or_level = terms_or_level;
  e.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return e;
}

int emit(const Report& report, const std::string& json_path, std::ostream& out) {
  for (const auto& e : report.entries) out << render_plain(e) << '\n';
  if (!json_path.empty()) write_report(report, json_path);
  return report.all_pass() ? kExitOk : kExitFail;
}

std::string zeta_name(int s) { return "zeta(" + std::to_string(s) + ")"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Even/odd zeta values, Euler log-sine integrals and their cross-checks", "eulerzeta"};
  app.require_subcommand(1);

  std::string config_path = kDefaultConfig;
  app.add_option("--config", config_path, "key=value settings file (digits, lmax, max_quad_level)");

  std::optional<int> digits_flag;
  std::optional<int> lmax_flag;
  std::string json_path;

  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", digits_flag, "significant decimal digits")->check(CLI::Range(1, 100000));
  };
  auto add_json = [&](CLI::App* sub) { sub->add_option("--json", json_path, "write a JSON report to this path"); };

  // zeta
  auto* zeta = app.add_subcommand("zeta", "even or odd zeta values");
  int even_l = 0;
  int odd_l = 0;
  std::string method = "main";
  bool exact = false;
  auto* even_opt = zeta->add_option("--even", even_l, "zeta(2L)")->check(CLI::PositiveNumber);
  auto* odd_opt = zeta->add_option("--odd", odd_l, "zeta(2L+1)")->check(CLI::PositiveNumber);
  even_opt->excludes(odd_opt);
  zeta->add_option("--method", method, "odd-value method")->check(CLI::IsMember({"main", "euler", "ck", "oracle"}));
  zeta->add_flag("--exact", exact, "print the exact rational multiple of pi^(2L)");
  add_digits(zeta);
  add_json(zeta);

  // integral
  auto* integral = app.add_subcommand("integral", "int_0^{pi/2} x^(2L-1) log(sin x) dx");
  int integral_l = 1;
  std::string integral_method = "closed";
  integral->add_option("--l", integral_l, "moment index L >= 1")->required()->check(CLI::PositiveNumber);
  integral->add_option("--method", integral_method)->check(CLI::IsMember({"closed", "series", "quadrature"}));
  add_digits(integral);
  add_json(integral);

  // identity
  auto* identity = app.add_subcommand("identity", "log(pi/e) series identity");
  bool log_pi = false;
  identity->add_flag("--log-pi", log_pi, "check log(pi/e) = sum zeta(2n)/(n(2n+1)4^n)")->required();
  add_digits(identity);
  add_json(identity);

  // verify
  auto* verify = app.add_subcommand("verify", "run every cross-check");
  int threads = 1;
  verify->add_option("--lmax", lmax_flag, "largest moment / odd index")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  add_digits(verify);
  add_json(verify);

  // table
  auto* table = app.add_subcommand("table", "exact even zeta coefficients");
  int even_max = 10;
  table->add_option("--even-max", even_max, "largest L")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Settings s;
  try {
    const Config cfg = load_config(config_path);
    if (cfg.digits) s.digits = *cfg.digits;
    if (cfg.lmax) s.lmax = *cfg.lmax;
    if (cfg.max_quad_level) s.max_quad_level = *cfg.max_quad_level;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (digits_flag) s.digits = *digits_flag;
  if (lmax_flag) s.lmax = *lmax_flag;
  if (s.digits < 1 || s.lmax < 1 || s.max_quad_level < 2) {
    err << "digits and lmax must be >= 1, max_quad_level >= 2\n";
    return kExitUsage;
  }

  const PrecisionContext ctx(s.digits);
  const auto start = Clock::now();
  try {
    if (zeta->parsed()) {
      if (even_opt->count() == 0 && odd_opt->count() == 0) {
        err << "zeta: one of --even or --odd is required\n\n" << zeta->help();
        return kExitUsage;
      }
      if (even_opt->count() > 0) {
        const auto t = shared_even_table(even_l);
        const Rational& r = t->coeff(even_l);
        if (exact) {
          out << r.str() << " * pi^" << 2 * even_l << '\n';
          return kExitOk;
        }
        const BigReal v = to_big_real(r, ctx) * pow_int(const_pi(ctx), static_cast<unsigned>(2 * even_l), ctx);
        return emit(Report{{value_entry(zeta_name(2 * even_l), "exact", v, s.digits, even_l, start)}}, json_path, out);
      }
      if (exact) {
        err << "zeta: --exact applies to even values only\n";
        return kExitUsage;
      }
      if (method == "euler" && odd_l != 1) {
        err << "zeta: --method euler is only defined for zeta(3) (--odd 1)\n";
        return kExitUsage;
      }
      BigReal v;
      long terms = 0;
      if (method == "main") {
        v = zeta_odd_main(odd_l, ctx);
        terms = tail_series_S(odd_l, ctx).terms_used;
      } else if (method == "euler") {
        v = zeta3_euler(ctx);
      } else if (method == "ck") {
        v = zeta_odd_ck(odd_l, ctx);
      } else {
        const OracleResult o = zeta_direct_oracle(2 * odd_l + 1, ctx);
        v = o.value;
        terms = o.cutoff;
      }
      return emit(Report{{value_entry(zeta_name(2 * odd_l + 1), method, v, s.digits, terms, start)}}, json_path, out);
    }

    if (integral->parsed()) {
      const std::string q = "euler_integral(" + std::to_string(integral_l) + ")";
      if (integral_method == "closed") {
        const SymbolicConstant c = euler_integral_closed_form(integral_l);
        out << c.str() << '\n';
        const BigReal v = eval_symbolic(c, zeta_odd_main_values(integral_l, ctx), ctx);
        return emit(Report{{value_entry(q, "closed_form", v, s.digits, 0, start)}}, json_path, out);
      }
      if (integral_method == "series") {
        const BigReal v = euler_integral_series(integral_l, ctx);
        return emit(Report{{value_entry(q, "series", v, s.digits, tail_series_S(integral_l, ctx).terms_used, start)}},
                    json_path, out);
      }
      QuadratureOptions qopts;
      qopts.max_level = s.max_quad_level;
      const QuadratureResult r = euler_integral_quad(integral_l, ctx, qopts);
      return emit(Report{{value_entry(q, "quadrature", r.value, s.digits, r.level, start)}}, json_path, out);
    }

    if (identity->parsed()) {
      const LogPiIdentity id = log_pi_identity(ctx);
      ReportEntry e = compare_entry("log(pi/e)", "series", id.rhs.bounded(), "log_pi_minus_1", id.lhs,
                                    pow10_neg(s.digits, kErrBits, MPFR_RNDD), s.digits, id.rhs.terms_used);
      if (!id.agrees()) e.status = Status::kFail;
      e.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
      return emit(Report{{e}}, json_path, out);
    }

    if (verify->parsed()) {
      VerifyOptions v;
      v.digits = s.digits;
      v.lmax = s.lmax;
      v.threads = threads;
      v.max_quad_level = s.max_quad_level;
      return emit(run_verification(v), json_path, out);
    }

    if (table->parsed()) {
      const auto t = shared_even_table(even_max);
      for (int l = 1; l <= even_max; ++l) {
        out << zeta_name(2 * l) << " = " << t->coeff(l).str() << " * pi^" << 2 * l << '\n';
      }
      return kExitOk;
    }
  } catch (const NonConvergenceError& e) {
    err << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace eulerzeta
