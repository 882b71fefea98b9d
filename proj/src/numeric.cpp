#include "thickening/numeric.hpp"

namespace thickening {

BigInt require_integral(const ExactRatio& r, const char* what) {
  if (denominator(r) != 1) {
    throw IntegralityError(std::string(what) + ": expected an integer, got " + r.str());
  }
  return numerator(r);
}

}  // namespace thickening
