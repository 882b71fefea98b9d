#include "thickening/filtration.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "thickening/schur.hpp"

namespace thickening {
namespace {

constexpr std::int64_t kRows = ThickeningInstance::n;
// Only the l = 1 branch of the W-set theorem is executable for n = 2.
constexpr std::int64_t kLevel = 1;

void require_columns(std::int64_t m) {
  if (m < 3) throw std::invalid_argument("need m >= 3 columns, got " + std::to_string(m));
}

bool in_zset(const Partition& z, std::int64_t l, std::int64_t D, std::int64_t t) {
  const std::int64_t z1 = z.part(1);
  if (z1 > t - 1) return false;
  for (std::int64_t i = 2; i <= l + 1; ++i) {
    if (z.part(static_cast<std::size_t>(i)) != z1) return false;
  }
  const std::int64_t size = z.size();
  return size + (t - z1) * l + 1 <= D * t && D * t <= size + (t - z1) * (l + 1);
}

}  // namespace

ThickeningInstance::ThickeningInstance(std::int64_t m_, std::int64_t t_) : m(m_), t(t_) {
  require_columns(m);
  if (t < 1) throw std::invalid_argument("need power t >= 1, got " + std::to_string(t));
}

std::ostream& operator<<(std::ostream& os, const ZIndexEntry& e) {
  return os << '(' << e.z << ", " << e.l << ')';
}

std::vector<ZIndexEntry> enumerate_Z(std::int64_t n, std::int64_t D, std::int64_t t) {
  if (D < 1 || D > n) {
    throw std::invalid_argument("need 1 <= D <= n, got D=" + std::to_string(D) + " n=" + std::to_string(n));
  }
  if (t < 1) throw std::invalid_argument("need t >= 1, got " + std::to_string(t));
  std::vector<ZIndexEntry> out;
  for (const Partition& z : partitions_in_box(static_cast<std::size_t>(n), t - 1)) {
    for (std::int64_t l = 0; l <= D - 1; ++l) {
      if (in_zset(z, l, D, t)) out.push_back({z, l});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

StSelection select_st(std::int64_t m, std::int64_t j) {
  require_columns(m);
  if (j != 2 * m - 3) {
    throw std::invalid_argument("unsupported cohomological index " + std::to_string(j) +
                                " (only 2m-3 = " + std::to_string(2 * m - 3) + ")");
  }
  std::vector<StSelection> solutions;
  for (std::int64_t t1 = 0; t1 <= kLevel; ++t1) {
    for (std::int64_t s = 0; s <= t1; ++s) {
      if (m * kRows - kLevel * kLevel - s * (m - kRows) - 2 * t1 == j) solutions.push_back({t1, s});
    }
  }
  if (solutions.empty()) throw std::invalid_argument("no (t1, s) solves the index equation");
  if (solutions.size() > 1) throw std::logic_error("index equation has several (t1, s) solutions");
  return solutions.front();
}

std::vector<DominantWeight> enumerate_W(std::int64_t z, std::int64_t m) {
  require_columns(m);
  if (z < 0) throw std::invalid_argument("need z >= 0, got " + std::to_string(z));
  const std::int64_t second = 1 - z - m;
  std::vector<DominantWeight> out;
  out.reserve(static_cast<std::size_t>(z));
  for (std::int64_t first = second; first <= -m; ++first) out.push_back(DominantWeight{first, second});
  return out;
}

DominantWeight lambda_s(const DominantWeight& lambda, std::int64_t m) {
  require_columns(m);
  if (lambda.length() != 2) throw std::invalid_argument("lambda_s expects a length-2 weight");
  const std::int64_t first = lambda[1] + m - 2;
  const std::int64_t second = lambda[2] + m - 2;
  if (first > -2) {
    throw std::invalid_argument("lambda(0) is not dominant for " + lambda.to_string() +
                                " at m=" + std::to_string(m));
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(m - 2), -2);
  out.push_back(first);
  out.push_back(second);
  return DominantWeight(std::move(out));
}

namespace {

// Dimensions of every W-set summand for the filtration factor indexed by z.
std::vector<LayerSummand> summands_for_index(std::int64_t z, std::int64_t m) {
  const StSelection st = select_st(m, 2 * m - 3);
  if (st.s != 0) throw std::logic_error("only s = 0 has an explicit lambda(s)");
  std::vector<LayerSummand> out;
  for (DominantWeight& lambda : enumerate_W(z, m)) {
    DominantWeight big = lambda_s(lambda, m);
    const std::int64_t eps = lambda[1] - lambda[2];
    BigInt dim = tensor_pair_dim(big, lambda);
    out.push_back({std::move(lambda), std::move(big), eps, std::move(dim)});
  }
  return out;
}

}  // namespace

std::vector<LayerSummand> layer_summands(std::int64_t m, std::int64_t t) {
  const ThickeningInstance inst(m, t);
  return summands_for_index(inst.t - 1, inst.m);
}

BigInt layer_length_via_decomposition(std::int64_t m, std::int64_t t) {
  BigInt total = 0;
  for (const LayerSummand& s : layer_summands(m, t)) total += s.dim;
  return total;
}

BigInt cumulative_length_via_decomposition(std::int64_t m, std::int64_t T) {
  const ThickeningInstance inst(m, T);
  BigInt total = 0;
  for (const ZIndexEntry& entry : enumerate_Z(inst.n, inst.D, inst.t)) {
    if (entry.l != kLevel || entry.z.part(1) != entry.z.part(2)) {
      throw std::logic_error("filtration index outside the l = 1, z1 = z2 family");
    }
    for (const LayerSummand& s : summands_for_index(entry.z.part(1), inst.m)) total += s.dim;
  }
  return total;
}

}  // namespace thickening
