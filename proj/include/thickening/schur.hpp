#pragma once

#include <cstdint>
#include <utility>

#include "thickening/numeric.hpp"
#include "thickening/partitions.hpp"

namespace thickening {

/// dim S_lambda C^N by the Weyl product
///   prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
/// Numerator and denominator are accumulated separately and divided once;
/// a nonzero remainder raises IntegralityError. Throws std::invalid_argument
/// when lambda.length() != N.
BigInt weyl_dim(const DominantWeight& lambda, std::size_t N);

/// Partition overload: pads with zeros to length N. A shape with more than N
/// rows has dimension 0 (the Schur functor vanishes).
BigInt weyl_dim(const Partition& shape, std::size_t N);

struct ShiftNormalized {
  Partition partition;
  std::int64_t shift = 0;
};

/// Subtracts c = lambda_N from every entry, giving a partition whose last
/// padded entry is 0. weyl_dim is invariant under this shift.
ShiftNormalized shift_normalize(const DominantWeight& lambda);

/// Number of semistandard Young tableaux of the given shape with entries in
/// {1..N}, by plain backtracking over the cells in reading order. Independent
/// of the product formula; keep |shape| small.
BigInt ssyt_count(const Partition& shape, std::size_t N);

/// weyl_dim(lambda_m, len) * weyl_dim(lambda_n, len): the dimension of
/// S_{lambda_m} C^m (x) S_{lambda_n} C^n.
BigInt tensor_pair_dim(const DominantWeight& lambda_m, const DominantWeight& lambda_n);

}  // namespace thickening
