#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "eulerzeta/rational.hpp"

namespace eulerzeta {

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Coefficients r_0..r_L with zeta(2l) = r_l * pi^(2l) and seed r_0 = zeta(0) = -1/2.
class EvenZetaTable {
 public:
  /// Table holding only the seed r_0.
  EvenZetaTable();

  /// Builds r_0..r_lmax by the recurrence.
  static EvenZetaTable build(int lmax);

  /// Highest index held.
  int max_index() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Throws PreconditionError when l is not held.
  const Rational& coeff(int l) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

 private:
  friend Rational zeta_even_coeff(int l, EvenZetaTable& table);
  std::vector<Rational> coeffs_;
};

inline constexpr int kDefaultEvenTableMax = 200;

/// zeta(0) = -1/2, the seed that closes the even recurrence.
Rational zeta_zero();

/// r_l from r_0..r_{l-1} via
///   zeta(2l) = 2^(2l-1)/(2^(2l-1)-1) * sum_{k<l} (-1)^(l+k-1) pi^(2(l-k)) / (2(l-k)+1)!
///              * (1 - 2^(1-2k)) zeta(2k)
/// with every pi power divided out. Appends r_l when the table ends at l-1.
/// Throws PreconditionError if l < 1 or the table lacks r_{l-1}.
Rational zeta_even_coeff(int l, EvenZetaTable& table);

/// The vanishing identity the recurrence was solved from,
///   sum_{k=0}^{l} (-1)^(k-1) (1 - 2^(1-2k)) r_k / (2(l-k)+1)!,
/// which is exactly zero for a correct table.
Rational even_recurrence_residual(int l, const EvenZetaTable& table);

/// Independent r_l via Bernoulli numbers: r_l = (-1)^(l+1) B_2l 2^(2l-1) / (2l)!.
Rational zeta_even_oracle(int l);

/// B_0..B_n from B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int n);

/// n! memoized; thread-safe.
mpz_class factorial(unsigned n);

/// Process-wide table holding at least r_0..r_lmax. Snapshots are immutable;
/// a larger request builds an extended copy once under a lock.
std::shared_ptr<const EvenZetaTable> shared_even_table(int lmax = kDefaultEvenTableMax);

}  // namespace eulerzeta
