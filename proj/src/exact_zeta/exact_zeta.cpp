#include "eulerzeta/exact_zeta.hpp"

#include <deque>
#include <mutex>
#include <string>

namespace eulerzeta {
namespace {

// 1 - 2^(1-2k) as an exact rational.
Rational one_minus_pow2(long k) { return Rational(1) - pow2(1 - 2 * k); }

Rational inv_factorial(unsigned n) { return Rational(mpz_class(1), factorial(n)); }

}  // namespace

mpz_class factorial(unsigned n) {
  static std::mutex mu;
  static std::deque<mpz_class> table{mpz_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[n];
}

EvenZetaTable::EvenZetaTable() : coeffs_{zeta_zero()} {}

EvenZetaTable EvenZetaTable::build(int lmax) {
  EvenZetaTable t;
  for (int l = 1; l <= lmax; ++l) zeta_even_coeff(l, t);
  return t;
}

const Rational& EvenZetaTable::coeff(int l) const {
  if (l < 0 || l > max_index()) {
    throw PreconditionError("even zeta table lacks r_" + std::to_string(l) + " (holds up to r_" +
                            std::to_string(max_index()) + ")");
  }
  return coeffs_[static_cast<std::size_t>(l)];
}

Rational zeta_zero() { return Rational(-1, 2); }

Rational zeta_even_coeff(int l, EvenZetaTable& table) {
  if (l < 1) throw PreconditionError("zeta_even_coeff requires l >= 1");
  if (table.max_index() < l - 1) {
    throw PreconditionError("zeta_even_coeff(" + std::to_string(l) + ") needs r_0..r_" + std::to_string(l - 1));
  }
  Rational sum;
  for (int k = 0; k <= l - 1; ++k) {
    Rational term = inv_factorial(static_cast<unsigned>(2 * (l - k) + 1)) * one_minus_pow2(k) * table.coeff(k);
    if ((l + k - 1) % 2 != 0) term = -term;
    sum += term;
  }
  const Rational p = pow2(2 * l - 1);
  Rational r = p / (p - Rational(1)) * sum;
  if (table.max_index() == l - 1) table.coeffs_.push_back(r);
  return r;
}

Rational even_recurrence_residual(int l, const EvenZetaTable& table) {
  if (l < 1) throw PreconditionError("even_recurrence_residual requires l >= 1");
  Rational sum;
  for (int k = 0; k <= l; ++k) {
    Rational term = inv_factorial(static_cast<unsigned>(2 * (l - k) + 1)) * one_minus_pow2(k) * table.coeff(k);
    if ((k - 1) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

std::vector<Rational> bernoulli_numbers(int n) {
  if (n < 0) throw PreconditionError("bernoulli_numbers requires n >= 0");
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    mpz_class binom;
    for (int j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j));
      acc += binom * b[static_cast<std::size_t>(j)].get();
    }
    b.emplace_back(mpq_class(-acc / (m + 1)));
  }
  return b;
}

Rational zeta_even_oracle(int l) {
  if (l < 1) throw PreconditionError("zeta_even_oracle requires l >= 1");
  const std::vector<Rational> b = bernoulli_numbers(2 * l);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * l));
  Rational r = b[static_cast<std::size_t>(2 * l)] * pow2(2 * l - 1) / Rational(fact, mpz_class(1));
  return l % 2 == 1 ? r : -r;
}

std::shared_ptr<const EvenZetaTable> shared_even_table(int lmax) {
  static std::mutex mu;
  static std::shared_ptr<const EvenZetaTable> current = std::make_shared<const EvenZetaTable>();

  std::lock_guard<std::mutex> lock(mu);
  if (current->max_index() < lmax) {
    EvenZetaTable extended = *current;
    for (int l = extended.max_index() + 1; l <= lmax; ++l) zeta_even_coeff(l, extended);
    current = std::make_shared<const EvenZetaTable>(std::move(extended));
  }
  return current;
}

}  // namespace eulerzeta
