#include "eulerzeta/constants.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace eulerzeta {
namespace {

enum class Constant { kPi, kLog2, kLogPi };

// Extra bits for log(pi): computed from a wider pi, then rounded once.
constexpr mpfr_prec_t kLogPiExtraBits = 32;

MpFloat compute(Constant which, mpfr_prec_t bits) {
  MpFloat v(bits);
  switch (which) {
    case Constant::kPi:
      mpfr_const_pi(v.raw(), MPFR_RNDN);
      break;
    case Constant::kLog2:
      mpfr_const_log2(v.raw(), MPFR_RNDN);
      break;
    case Constant::kLogPi: {
      MpFloat wide(bits + kLogPiExtraBits);
      mpfr_const_pi(wide.raw(), MPFR_RNDN);
      mpfr_log(wide.raw(), wide.raw(), MPFR_RNDN);
      mpfr_set(v.raw(), wide.raw(), MPFR_RNDN);
      break;
    }
  }
  return v;
}

BigReal cached(Constant which, const PrecisionContext& ctx) {
  static std::mutex mu;
  static std::map<std::pair<Constant, mpfr_prec_t>, MpFloat> cache;

  const auto key = std::make_pair(which, ctx.bits());
  MpFloat value;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute(which, ctx.bits())).first;
    value = it->second;
  }
  MpFloat e = ulp(value);
  if (which == Constant::kLogPi) {
    // Double rounding: wide-log error (2^-32 ulp) plus the final rounding.
    e = add(e, ldexp(e, -static_cast<long>(kLogPiExtraBits) + 1), kErrBits, MPFR_RNDU);
  }
  return {std::move(value), std::move(e)};
}

}  // namespace

BigReal const_pi(const PrecisionContext& ctx) { return cached(Constant::kPi, ctx); }
BigReal const_log2(const PrecisionContext& ctx) { return cached(Constant::kLog2, ctx); }
BigReal const_log_pi(const PrecisionContext& ctx) { return cached(Constant::kLogPi, ctx); }

}  // namespace eulerzeta
