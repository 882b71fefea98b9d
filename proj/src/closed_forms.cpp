#include "thickening/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace thickening {
namespace {

void require_m_t(std::int64_t m, std::int64_t t) {
  if (m < 3) throw std::invalid_argument("need m >= 3, got " + std::to_string(m));
  if (t < 1) throw std::invalid_argument("need t >= 1, got " + std::to_string(t));
}

BigInt power(const BigInt& base, std::int64_t exponent) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  // Each prefix product out * (n-i) / (i+1) is itself a binomial coefficient.
  for (std::int64_t i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt out = 1;
  for (std::int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt layer_summand_dim_closed(std::int64_t m, std::int64_t t, std::int64_t epsilon) {
  require_m_t(m, t);
  if (epsilon < 0 || epsilon > t - 2) {
    throw std::invalid_argument("epsilon must lie in {0..t-2}, got " + std::to_string(epsilon));
  }
  const BigInt num = BigInt(epsilon + 1) * (epsilon + 1) * binom(m + t - 3, m - 2) *
                     binom(m + t - 4 - epsilon, t - epsilon - 2);
  return require_integral(ExactRatio(num, m - 1), "layer summand dimension");
}

BigInt layer_length_closed(std::int64_t m, std::int64_t t) {
  require_m_t(m, t);
  const BigInt num = binom(m + t - 3, m - 2) * (binom(m + t - 1, m + 1) + binom(m + t - 2, m + 1));
  return require_integral(ExactRatio(num, m - 1), "layer length");
}

BigInt cumulative_length(std::int64_t m, std::int64_t T) {
  require_m_t(m, T);
  const BigInt num = binom(m + T - 2, m) * binom(m + T - 1, m);
  return require_integral(ExactRatio(num, m + 1), "cumulative length");
}

ExactRatio epsilon3(std::int64_t m) {
  if (m < 3) throw std::invalid_argument("need m >= 3, got " + std::to_string(m));
  const BigInt f = factorial(m);
  return ExactRatio(BigInt(1), BigInt(m + 1) * f * f);
}

ExactRatio normalized_length(std::int64_t m, std::int64_t T) {
  return ExactRatio(cumulative_length(m, T), power(BigInt(T), 2 * m));
}

BigInt catalan(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("need m >= 1, got " + std::to_string(m));
  return require_integral(ExactRatio(binom(2 * m, m), m + 1), "Catalan number");
}

BigInt identity_sum_lhs(std::int64_t a, std::int64_t b) {
  if (a < 0 || a > b) {
    throw std::invalid_argument("need 0 <= a <= b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  BigInt sum = 0;
  for (std::int64_t eps = 1; eps <= b - a; ++eps) sum += BigInt(eps) * eps * binom(b - eps, a);
  return sum;
}

BigInt identity_sum_rhs(std::int64_t a, std::int64_t b) {
  return binom(b + 2, a + 3) + binom(b + 1, a + 3);
}

bool identity_sum_check(std::int64_t a, std::int64_t b) {
  return identity_sum_lhs(a, b) == identity_sum_rhs(a, b);
}

bool cumulative_identity_check(std::int64_t m, std::int64_t T) {
  require_m_t(m, T);
  BigInt sum = 0;
  for (std::int64_t t = 1; t <= T; ++t) sum += layer_length_closed(m, t);
  return sum == cumulative_length(m, T);
}

}  // namespace thickening
