#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerzeta/big_real.hpp"

namespace eulerzeta {

struct QuadratureResult {
  BigReal value;      // err includes est_error
  MpFloat est_error;  // |I_level - I_(level-1)|
  int level = 0;      // step 2^-level
  std::vector<MpFloat> estimates;  // I_0 .. I_level
};

/// Thrown when level doubling fails to meet the tolerance by max_level.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(MpFloat last, MpFloat previous, int level);
  const MpFloat& last() const { return last_; }
  const MpFloat& previous() const { return previous_; }
  int level() const { return level_; }

 private:
  MpFloat last_;
  MpFloat previous_;
  int level_;
};

struct QuadratureOptions {
  int max_level = 12;
  /// Absolute tolerance as a power of ten below the requested digits:
  /// stop once |I_m - I_(m-1)| <= 10^-(digits + extra_digits).
  int extra_digits = 3;
};

/// f(x, upper - x). Both distances are passed so integrands can stay
/// accurate next to either endpoint.
using Integrand = std::function<MpFloat(const MpFloat& x, const MpFloat& upper_minus_x)>;

/// tanh-sinh quadrature of f over [0, upper] with initial step 1 and
/// step halving per level. Abscissae never coincide with an endpoint.
/// Node tables are memoized per (level, precision) and shared across threads.
QuadratureResult integrate_tanh_sinh(const Integrand& f, const BigReal& upper, const PrecisionContext& ctx,
                                     const QuadratureOptions& opts = {});

/// int_0^{pi/2} x^(2l-1) log(sin x) dx. Throws std::invalid_argument for l < 1.
QuadratureResult euler_integral_quad(int l, const PrecisionContext& ctx, const QuadratureOptions& opts = {});

struct ReferenceIntegral {
  std::string name;
  QuadratureResult quad;
  BigReal closed_form;
};

/// One of the three reference integrals below, `which` in 0..2.
ReferenceIntegral reference_integral(int which, const PrecisionContext& ctx, const QuadratureOptions& opts = {});

/// int_0^{pi/2} log sin x = -(pi/2) log 2,
/// int_0^{pi/2} sin x log sin x = log 2 - 1,
/// int_0^{pi/2} x log x = (pi^2/8) log(pi/2) - pi^2/16.
std::array<ReferenceIntegral, 3> reference_integrals(const PrecisionContext& ctx, const QuadratureOptions& opts = {});

}  // namespace eulerzeta
