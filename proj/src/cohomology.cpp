#include "thickening/cohomology.hpp"

#include <stdexcept>

#include "thickening/closed_forms.hpp"

namespace thickening {

LengthValue LengthValue::finite(BigInt value) {
  if (value < 0) throw std::invalid_argument("length cannot be negative");
  if (value == 0) return zero();
  return LengthValue(Kind::Finite, std::move(value));
}

const BigInt& LengthValue::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("length is not finite");
  return value_;
}

std::string LengthValue::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "zero";
    case Kind::Infinite: return "infinite";
    case Kind::Finite: return "finite " + value_.str();
  }
  return {};
}

const char* kind_name(LengthValue::Kind kind) noexcept {
  switch (kind) {
    case LengthValue::Kind::Zero: return "zero";
    case LengthValue::Kind::Finite: return "finite";
    case LengthValue::Kind::Infinite: return "infinite";
  }
  return "?";
}

std::set<std::int64_t> nonvanishing_hi_indices(std::int64_t n, std::int64_t m) {
  if (n < 2 || n >= m) {
    throw std::invalid_argument("need 2 <= n < m, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  std::set<std::int64_t> out;
  for (std::int64_t r = 0; r < n; ++r) out.insert((n - r) * (m - n) + 1);
  return out;
}

std::int64_t dual_index(std::int64_t m, std::int64_t n, std::int64_t j) {
  if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  if (j < 0 || j > m * n) {
    throw std::invalid_argument("cohomological index " + std::to_string(j) + " outside [0, " +
                                std::to_string(m * n) + "]");
  }
  return m * n - j;
}

LengthValue local_cohomology_length(std::int64_t m, std::int64_t t, std::int64_t j) {
  if (m < 3) throw std::invalid_argument("hypothesis 2 < m violated (m=" + std::to_string(m) + ")");
  if (t < 1) throw std::invalid_argument("need t >= 1, got " + std::to_string(t));
  if (j < 0 || j > 2 * m) {
    throw std::invalid_argument("cohomological index " + std::to_string(j) + " outside [0, 2m]");
  }
  if (j == m + 1) return LengthValue::infinite();
  if (j == 3) return LengthValue::finite(cumulative_length(m, t));
  return LengthValue::zero();
}

}  // namespace thickening
