#include "thickening/schur.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace thickening {
namespace {

// Cell-by-cell backtracking over the diagram in reading order. Each cell
// must be >= its left neighbour and > the cell above it.
class TableauCounter {
 public:
  TableauCounter(const Partition& shape, std::int64_t alphabet)
      : rows_(shape.parts()), alphabet_(alphabet) {
    grid_.resize(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) grid_[r].assign(static_cast<std::size_t>(rows_[r]), 0);
  }

  std::uint64_t count() { return fill(0, 0); }

 private:
  std::uint64_t fill(std::size_t r, std::size_t c) {
    if (r == rows_.size()) return 1;
    if (c == static_cast<std::size_t>(rows_[r])) return fill(r + 1, 0);
    std::int64_t lo = 1;
    if (c > 0) lo = std::max(lo, grid_[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid_[r - 1][c] + 1);
    // Cells below this one need room for strictly larger entries.
    std::size_t depth_below = 0;
    for (std::size_t k = r + 1; k < rows_.size() && static_cast<std::size_t>(rows_[k]) > c; ++k) ++depth_below;
    const std::int64_t hi = alphabet_ - static_cast<std::int64_t>(depth_below);
    std::uint64_t total = 0;
    for (std::int64_t v = lo; v <= hi; ++v) {
      grid_[r][c] = v;
      total += fill(r, c + 1);
    }
    grid_[r][c] = 0;
    return total;
  }

  std::vector<std::int64_t> rows_;
  std::int64_t alphabet_;
  std::vector<std::vector<std::int64_t>> grid_;
};

}  // namespace

BigInt weyl_dim(const DominantWeight& lambda, std::size_t N) {
  if (lambda.length() != N) {
    throw std::invalid_argument("weight " + lambda.to_string() + " has length " +
                                std::to_string(lambda.length()) + ", expected " + std::to_string(N));
  }
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 1; i <= N; ++i) {
    for (std::size_t j = i + 1; j <= N; ++j) {
      const auto gap = static_cast<std::int64_t>(j - i);
      num *= lambda[i] - lambda[j] + gap;
      den *= gap;
    }
  }
  return require_integral(ExactRatio(num, den), "Weyl dimension product");
}

BigInt weyl_dim(const Partition& shape, std::size_t N) {
  if (N == 0) throw std::invalid_argument("Schur functor dimension needs N >= 1");
  if (shape.length() > N) return 0;
  return weyl_dim(DominantWeight(shape.padded(N)), N);
}

ShiftNormalized shift_normalize(const DominantWeight& lambda) {
  const std::int64_t c = lambda[lambda.length()];
  return {Partition(lambda.shifted(-c).entries()), c};
}

BigInt ssyt_count(const Partition& shape, std::size_t N) {
  if (shape.length() > N) return 0;
  return TableauCounter(shape, static_cast<std::int64_t>(N)).count();
}

BigInt tensor_pair_dim(const DominantWeight& lambda_m, const DominantWeight& lambda_n) {
  return weyl_dim(lambda_m, lambda_m.length()) * weyl_dim(lambda_n, lambda_n.length());
}

}  // namespace thickening
