#pragma once

#include <mpfr.h>

#include <compare>

namespace eulerzeta {

/// Requested decimal digits plus guard digits carried internally.
struct PrecisionContext {
  int digits = 50;
  int guard = 15;

  PrecisionContext() = default;
  /// Throws std::invalid_argument unless digits >= 1 and guard >= 0.
  PrecisionContext(int digits_, int guard_ = 15);

  int working_digits() const { return digits + guard; }
  /// Binary precision whose unit roundoff is below one unit in the last working digit.
  mpfr_prec_t bits() const;

  friend auto operator<=>(const PrecisionContext&, const PrecisionContext&) = default;
};

}  // namespace eulerzeta
