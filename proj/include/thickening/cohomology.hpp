#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "thickening/numeric.hpp"

namespace thickening {

/// Length of a local cohomology module: zero, a positive finite integer, or infinite.
class LengthValue {
 public:
  enum class Kind { Zero, Finite, Infinite };

  static LengthValue zero() { return LengthValue(Kind::Zero, 0); }
  static LengthValue infinite() { return LengthValue(Kind::Infinite, 0); }
  /// Finite(0) is never constructed: a zero value yields zero().
  static LengthValue finite(BigInt value);

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
  /// Throws std::logic_error unless is_finite().
  const BigInt& value() const;

  /// "zero", "finite <n>" or "infinite".
  std::string to_string() const;

  friend bool operator==(const LengthValue&, const LengthValue&) = default;

 private:
  LengthValue(Kind kind, BigInt value) : kind_(kind), value_(std::move(value)) {}
  Kind kind_;
  BigInt value_;
};

const char* kind_name(LengthValue::Kind kind) noexcept;

/// Indices j with H^j_I(R) != 0 for maximal minors of an n x m matrix:
/// {(n-r)(m-n)+1 : 0 <= r < n}. Requires 2 <= n < m.
std::set<std::int64_t> nonvanishing_hi_indices(std::int64_t n, std::int64_t m);

/// Graded duality H^j_m <-> Ext^{mn-j}: returns m n - j. Requires 0 <= j <= m n.
std::int64_t dual_index(std::int64_t m, std::int64_t n, std::int64_t j);

/// Length of H^j_m(R/I^t) for the 2 x m case: finite at j = 3,
/// infinite at j = m + 1 = dim R/I^t, zero elsewhere.
/// Requires m >= 3, t >= 1, 0 <= j <= 2m.
LengthValue local_cohomology_length(std::int64_t m, std::int64_t t, std::int64_t j);

}  // namespace thickening
