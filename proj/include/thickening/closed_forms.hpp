#pragma once

#include <cstdint>

#include "thickening/numeric.hpp"

namespace thickening {

/// C(n, k); zero when k < 0, k > n or n < 0.
BigInt binom(std::int64_t n, std::int64_t k);

/// n! for n >= 0.
BigInt factorial(std::int64_t n);

/// (eps+1)^2/(m-1) * C(m+t-3, m-2) * C(m+t-4-eps, t-eps-2): the dimension of
/// the epsilon-th summand of the layer at power t.
BigInt layer_summand_dim_closed(std::int64_t m, std::int64_t t, std::int64_t epsilon);

/// (1/(m-1)) C(m+t-3, m-2) [C(m+t-1, m+1) + C(m+t-2, m+1)], length of
/// Ext^{2m-3}(I^{t-1}/I^t, R). Requires m >= 3, t >= 1.
BigInt layer_length_closed(std::int64_t m, std::int64_t t);

/// (1/(m+1)) C(m+T-2, m) C(m+T-1, m) = length of H^3_m(R/I^T).
/// Requires m >= 3, T >= 1.
BigInt cumulative_length(std::int64_t m, std::int64_t T);

/// 1 / ((m+1) (m!)^2), the limit of cumulative_length(m, T) / T^{2m}.
ExactRatio epsilon3(std::int64_t m);

/// cumulative_length(m, T) / T^{2m} as an exact rational.
ExactRatio normalized_length(std::int64_t m, std::int64_t T);

/// C(2m, m) / (m+1). Requires m >= 1.
BigInt catalan(std::int64_t m);

/// sum_{eps=1}^{b-a} eps^2 C(b-eps, a). Throws std::invalid_argument if a > b or a < 0.
BigInt identity_sum_lhs(std::int64_t a, std::int64_t b);
/// C(b+2, a+3) + C(b+1, a+3).
BigInt identity_sum_rhs(std::int64_t a, std::int64_t b);
bool identity_sum_check(std::int64_t a, std::int64_t b);

/// sum_{t=1}^{T} layer_length_closed(m, t) == cumulative_length(m, T).
bool cumulative_identity_check(std::int64_t m, std::int64_t T);

}  // namespace thickening
