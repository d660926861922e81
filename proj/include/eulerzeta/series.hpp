#pragma once

#include <memory>
#include <vector>

#include "eulerzeta/big_real.hpp"
#include "eulerzeta/symbolic.hpp"

namespace eulerzeta {

/// A truncated infinite series. The true sum lies within
/// value.err() + tail_bound of value.value().
struct SeriesResult {
  BigReal value;
  int terms_used = 0;
  MpFloat tail_bound{kErrBits};

  /// value with the tail folded into its error bound.
  BigReal bounded() const { return value.widened(tail_bound); }
};

/// Terms for a series with ratio 1/4: K = ceil(1.661 * digits) + 10.
int default_terms(const PrecisionContext& ctx);

/// zeta(2k) / 4^k for k = 1..terms (index 0 unused), from the exact even
/// table. Memoized per working precision and shared between threads.
std::shared_ptr<const std::vector<BigReal>> even_zeta_quarter_powers(int terms, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// S(l) = sum_{k>=1} zeta(2k) / (k (k+l) 4^k)

/// Bound on the omitted tail after `terms` terms: zeta(2) 4^-K / (3 (K+1) (K+1+l)).
/// Follows from zeta(2k) <= zeta(2) and 1/(k(k+l)) <= 1/((K+1)(K+1+l)) for k > K,
/// leaving the geometric sum sum_{k>K} 4^-k = 4^-K / 3.
MpFloat tail_bound_S(int l, int terms);

/// S(l) with the default term count (tail bound <= 10^-(digits+2)).
SeriesResult tail_series_S(int l, const PrecisionContext& ctx);
/// S(l) truncated after exactly `terms` terms (terms = 0 gives the empty sum).
SeriesResult tail_series_S(int l, int terms, const PrecisionContext& ctx);

/// Euler integral via the log-product route:
///   (pi/2)^(2l) ((log pi - log 2)/(2l) - 1/(2l)^2 - S(l)/2).
BigReal euler_integral_series(int l, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Odd zeta values

/// zeta(2l+1) from the even values:
///   zeta(2l+1) = (-1)^l 2^(2l) / (2^(2l+1) - 1) {
///       sum_{k=1}^{l-1} (-1)^(k-1) pi^(2(l-k)) / (2(l-k))! (1 - 2^-2k) zeta(2k+1)
///     - pi^(2l) / (2l)! (log pi - 1/(2l) - l S(l)) }
/// Lower levels come from the same recursion, computed bottom-up and cached
/// once per precision context.
BigReal zeta_odd_main(int l, const PrecisionContext& ctx);

/// {3: zeta(3), 5: zeta(5), ..., 2 lmax + 1} from zeta_odd_main.
OddZetaValues zeta_odd_main_values(int lmax, const PrecisionContext& ctx);

/// zeta(5) as one series:
///   (4 pi^4 / 651) ((11/2) log pi - 29/8 - sum (2k+11) zeta(2k) / (k (k+1) (k+2) 4^k)).
BigReal zeta5_collapsed(const PrecisionContext& ctx);

/// sum_{n>=1} zeta(2n) / ((2n+1) (2n+2) 4^n), truncated after `terms`.
SeriesResult euler_zeta3_sum(int terms, const PrecisionContext& ctx);
/// zeta(3) = (pi^2/7) (1 - 4 sum_{n>=1} zeta(2n) / ((2n+1) (2n+2) 4^n)).
BigReal zeta3_euler(const PrecisionContext& ctx);

/// sum_{n>=1} zeta(2n) / (n (2n+1) 4^n), truncated after `terms`.
SeriesResult log_pi_series(int terms, const PrecisionContext& ctx);

struct LogPiIdentity {
  BigReal lhs;        // log pi - 1
  SeriesResult rhs;   // the series above

  /// |lhs - rhs| <= lhs.err + rhs.err + tail_bound.
  bool agrees() const { return overlaps(lhs, rhs.bounded()); }
};

/// Both sides of log(pi/e) = sum_{n>=1} zeta(2n) / (n (2n+1) 4^n).
LogPiIdentity log_pi_identity(const PrecisionContext& ctx);

/// zeta(2l+1) via the Cvijovic-Klinowski representation
///   (-1)^l (2 pi)^(2l) / (l (2^(2l+1) - 1)) [
///       sum_{k=1}^{l-1} (-1)^(k-1) k zeta(2k+1) / (pi^(2k) (2l-2k)!)
///     + sum_{k>=0} zeta(2k) (2k)! / (4^k (2k+2l)!) ]
/// where the k = 0 term uses zeta(0) = -1/2. Lower odd values come from this
/// same formula, so no code is shared with zeta_odd_main beyond S-free inputs.
BigReal zeta_odd_ck(int l, const PrecisionContext& ctx);

/// zeta(s) for integer s >= 2: even from the exact table, odd from zeta_odd_main.
BigReal zeta_value(int s, const PrecisionContext& ctx);

/// sum_{n>=1} (-1)^(n-1) / n^k = (1 - 2^(1-k)) zeta(k), k >= 2.
BigReal alternating_zeta(int k, const PrecisionContext& ctx);
/// sum_{n>=1} 1 / (2n-1)^k = (1 - 2^-k) zeta(k), k >= 2.
BigReal odd_reciprocal_zeta(int k, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Direct-summation oracle

struct OracleResult {
  BigReal value;
  int cutoff = 0;        // N: terms summed directly are n < N
  int corrections = 0;   // Euler-Maclaurin correction terms
};

/// zeta(s), s >= 2, as sum_{n<N} n^-s plus the Euler-Maclaurin tail
///   N^(1-s)/(s-1) + N^-s/2 + sum_j B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1).
/// The remainder is bounded by the first omitted correction. Shares no code
/// with the series formulas. cutoff = 0 picks N from the precision.
OracleResult zeta_direct_oracle(int s, const PrecisionContext& ctx, int cutoff = 0);

/// zeta(2l+1) from zeta_direct_oracle.
BigReal zeta_odd_oracle(int l, const PrecisionContext& ctx);

}  // namespace eulerzeta
