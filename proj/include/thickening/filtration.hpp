#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "thickening/numeric.hpp"
#include "thickening/partitions.hpp"

namespace thickening {

/// R = C[X] with X a generic n x m matrix, I = ideal of D x D minors, power t.
/// Only n = D = 2 is supported.
struct ThickeningInstance {
  static constexpr std::int64_t n = 2;
  static constexpr std::int64_t D = 2;
  std::int64_t m;
  std::int64_t t;

  /// Throws std::invalid_argument unless m >= 3 and t >= 1.
  ThickeningInstance(std::int64_t m, std::int64_t t);

  /// dim R = m n.
  std::int64_t ambient_dim() const noexcept { return m * n; }
  /// dim R/I^t = m + 1.
  std::int64_t quotient_dim() const noexcept { return m + 1; }
};

/// One factor J_{z,l} of the Ext-split filtration of R/I^t.
struct ZIndexEntry {
  Partition z;
  std::int64_t l = 0;

  friend bool operator==(const ZIndexEntry&, const ZIndexEntry&) = default;
  friend auto operator<=>(const ZIndexEntry&, const ZIndexEntry&) = default;
};

std::ostream& operator<<(std::ostream& os, const ZIndexEntry& e);

/// Index set of the Ext-split filtration of R/I_D^t for an n-row matrix:
/// all (z, l) with 0 <= l <= D-1, z with at most n rows,
/// z_1 = ... = z_{l+1} <= t-1 and
///   |z| + (t - z_1) l + 1 <= D t <= |z| + (t - z_1)(l + 1).
/// Bounded exhaustive search (every part is at most t-1). Result is sorted.
/// Throws std::invalid_argument unless 1 <= D <= n and t >= 1.
std::vector<ZIndexEntry> enumerate_Z(std::int64_t n, std::int64_t D, std::int64_t t);

struct StSelection {
  std::int64_t t1;
  std::int64_t s;
};

/// Solves m n - l^2 - s (m - n) - 2 t1 = j over 0 <= s <= t1 <= l for
/// n = 2, l = 1. Only j = 2m - 3 is supported; the unique answer is (1, 0).
StSelection select_st(std::int64_t m, std::int64_t j);

/// Dominant weights (lambda_1, 1 - z - m) with 1 - z - m <= lambda_1 <= -m,
/// increasing in lambda_1. Exactly z weights; empty for z = 0, so the
/// z = 0 factor contributes nothing to Ext^{2m-3}.
std::vector<DominantWeight> enumerate_W(std::int64_t z, std::int64_t m);

/// lambda(0) = ((-2)^{m-2}, lambda_1 + m - 2, lambda_2 + m - 2) for a length-2
/// weight with lambda_1 + m - 2 <= -2. Throws std::invalid_argument when the
/// result would not be dominant.
DominantWeight lambda_s(const DominantWeight& lambda, std::int64_t m);

/// One summand S_{lambda(0)} C^m (x) S_lambda C^2 of the new layer at power t.
struct LayerSummand {
  DominantWeight lambda;    // length 2
  DominantWeight lambda_s;  // length m
  std::int64_t epsilon;     // lambda_1 - lambda_2
  BigInt dim;
};

/// Summands of Ext^{2m-3}(I^{t-1}/I^t, R), one per epsilon in {0..t-2},
/// built from the single new filtration index z = (t-1, t-1).
std::vector<LayerSummand> layer_summands(std::int64_t m, std::int64_t t);

/// Sum of layer_summands(m, t) dimensions.
BigInt layer_length_via_decomposition(std::int64_t m, std::int64_t t);

/// Length of Ext^{2m-3}(R/I^T, R) summed over every filtration index of
/// enumerate_Z(2, 2, T) and every weight of its W-set.
BigInt cumulative_length_via_decomposition(std::int64_t m, std::int64_t T);

}  // namespace thickening
