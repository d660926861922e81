#pragma once

#include "eulerzeta/big_real.hpp"
#include "eulerzeta/precision.hpp"

namespace eulerzeta {

// Fundamental constants at the working precision of `ctx`. Each value is
// correctly rounded, so err is one ulp, below one unit in the last working
// digit. Results are memoized per (constant, binary precision); the cache is
// shared across threads.
BigReal const_pi(const PrecisionContext& ctx);
BigReal const_log2(const PrecisionContext& ctx);
BigReal const_log_pi(const PrecisionContext& ctx);

}  // namespace eulerzeta
