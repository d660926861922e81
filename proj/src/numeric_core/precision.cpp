#include "eulerzeta/precision.hpp"

#include <cmath>
#include <stdexcept>

namespace eulerzeta {

PrecisionContext::PrecisionContext(int digits_, int guard_) : digits(digits_), guard(guard_) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  if (guard < 0) throw std::invalid_argument("guard must be >= 0");
}

mpfr_prec_t PrecisionContext::bits() const {
  // 2^(1-p) <= 10^(-working_digits)
  return static_cast<mpfr_prec_t>(std::ceil(working_digits() * 3.321928094887362)) + 1;
}

}  // namespace eulerzeta
