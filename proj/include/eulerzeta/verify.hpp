#pragma once

#include <functional>
#include <vector>

#include "eulerzeta/big_real.hpp"
#include "eulerzeta/report.hpp"

namespace eulerzeta {

struct VerifyOptions {
  int digits = 50;
  int lmax = 4;
  int threads = 1;
  int max_quad_level = 12;
  int even_table_max = 50;
};

/// Comparison entry: PASS iff |value - reference| <= tolerance.
ReportEntry compare_entry(const std::string& quantity, const std::string& method, const BigReal& value,
                          const std::string& reference_method, const BigReal& reference, const MpFloat& tolerance,
                          int digits, long terms_or_level = 0);

/// Runs tasks on up to `threads` workers; results keep the task order.
std::vector<ReportEntry> run_tasks(const std::vector<std::function<ReportEntry()>>& tasks, int threads);

/// The full cross-check suite: even table vs Bernoulli oracle, Euler
/// integral closed form vs series vs quadrature, odd zeta by the main
/// recursion, the CK formula and direct summation, both alternative zeta(3)
/// and zeta(5) forms, the log(pi/e) identity and the reference integrals.
Report run_verification(const VerifyOptions& opts);

}  // namespace eulerzeta
