#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "eulerzeta/big_real.hpp"
#include "eulerzeta/rational.hpp"

namespace eulerzeta {

enum class Marker { kUnit, kLog2, kLogPi, kZetaOdd };

/// One basis element pi^pi_power * marker, where marker is 1, log 2,
/// log pi or zeta(m) with m odd >= 3.
struct Atom {
  int pi_power = 0;
  Marker marker = Marker::kUnit;
  int zeta_arg = 0;  // m for kZetaOdd, 0 otherwise

  static Atom unit(int pi_power = 0);
  static Atom log2(int pi_power = 0);
  static Atom log_pi(int pi_power = 0);
  static Atom zeta_odd(int m, int pi_power = 0);

  /// "pi^2*zeta(3)", "log2", "1" for the bare unit.
  std::string str() const;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Canonical print order: pi power descending, then unit < log2 < logpi < zeta(m) by m.
struct AtomOrder {
  bool operator()(const Atom& a, const Atom& b) const;
};

/// Raised by eval_symbolic when a zeta(m) atom has no supplied value.
class MissingAtomError : public std::invalid_argument {
 public:
  explicit MissingAtomError(const Atom& atom);
  const Atom& atom() const { return atom_; }

 private:
  Atom atom_;
};

/// Q-linear combination of atoms, held in canonical form (no zero coefficients).
class SymbolicConstant {
 public:
  using Terms = std::map<Atom, Rational, AtomOrder>;

  SymbolicConstant() = default;
  SymbolicConstant(const Atom& atom, const Rational& coeff) { add(atom, coeff); }

  /// Adds coeff * atom, dropping the atom if its coefficient cancels.
  void add(const Atom& atom, const Rational& coeff);
  /// Coefficient of `atom`, zero when absent.
  Rational coeff(const Atom& atom) const;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Canonical text, e.g. "-1/8*pi^2*log2 + 7/16*zeta(3)"; "0" when empty.
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument on malformed input.
  static SymbolicConstant parse(const std::string& text);

  friend bool operator==(const SymbolicConstant&, const SymbolicConstant&) = default;

 private:
  Terms terms_;
};

/// s*a + t*b in canonical form.
SymbolicConstant sym_combine(const SymbolicConstant& a, const SymbolicConstant& b, const Rational& s,
                             const Rational& t);

/// Odd zeta values keyed by argument m (3, 5, 7, ...).
using OddZetaValues = std::map<int, BigReal>;

/// Numeric value using const_pi/const_log2/const_log_pi; throws
/// MissingAtomError for a zeta(m) atom absent from `odd_values`.
BigReal eval_symbolic(const SymbolicConstant& c, const OddZetaValues& odd_values, const PrecisionContext& ctx);

}  // namespace eulerzeta
