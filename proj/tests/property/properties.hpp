#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace properties {

inline constexpr std::uint64_t kSeed = 0x5eed2026;
inline constexpr int kCases = 100;

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases >= kCases; }
};

// |S_K(l) - S_4K(l)| <= tail_bound_S(l, K): the fixed grid l <= 5, K in {10, 20, 40},
// then random (l, K).
Outcome tail_bound_soundness(int cases = kCases);

// eval(s a + t b) overlaps s eval(a) + t eval(b) for random constants and rationals.
Outcome symbolic_homomorphism(int cases = kCases);

// Random computations give bit-identical value and bound on 4 worker threads and on 1.
Outcome thread_determinism(int cases = kCases);

// Random expressions at D and 2D digits: intervals overlap and the bound shrinks.
Outcome precision_refinement(int cases = kCases);

// str/parse round trip for random symbolic constants.
Outcome symbolic_round_trip(int cases = kCases);

// parse(serialize(report)) == report for random reports.
Outcome report_round_trip(int cases = kCases);

std::vector<Outcome> all(int cases = kCases);

}  // namespace properties
