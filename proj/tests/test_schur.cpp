#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "thickening/schur.hpp"

namespace thickening {
namespace {

TEST(WeylDim, Examples) {
  const std::int64_t eps = 5;
  EXPECT_EQ(weyl_dim(DominantWeight{eps, 0}, 2), eps + 1);
  EXPECT_EQ(weyl_dim(DominantWeight{0, 0, 0, 0, 0}, 5), 1);
  EXPECT_EQ(weyl_dim(DominantWeight{2, 1, 0}, 3), 8);
  EXPECT_EQ(weyl_dim(DominantWeight{-3, -3}, 2), 1);
}

TEST(WeylDim, LengthMismatchIsAnError) {
  EXPECT_THROW(weyl_dim(DominantWeight{1, 0}, 3), std::invalid_argument);
}

TEST(WeylDim, TooManyRowsGivesZero) {
  EXPECT_EQ(weyl_dim(Partition{1, 1, 1}, 2), 0);
  EXPECT_EQ(ssyt_count(Partition{1, 1, 1}, 2), 0);
}

TEST(WeylDim, ExceedsSixtyFourBits) {
  // lambda = 2 * staircase on C^21: every Weyl factor equals 3.
  std::vector<std::int64_t> w;
  for (std::int64_t i = 20; i >= 0; --i) w.push_back(2 * i);
  EXPECT_EQ(weyl_dim(DominantWeight(w), 21), boost::multiprecision::pow(BigInt(3), 210));
}

TEST(ShiftNormalize, Examples) {
  const std::int64_t t = 4, m = 5, eps = 1;
  {
    const auto r = shift_normalize(DominantWeight{-2 - t - m + eps, -2 - t - m});
    EXPECT_EQ(r.partition, Partition({eps, 0}));
    EXPECT_EQ(r.shift, -2 - t - m);
  }
  {
    const auto r = shift_normalize(DominantWeight{0, 0, 0});
    EXPECT_EQ(r.partition, Partition{});
    EXPECT_EQ(r.shift, 0);
  }
  {
    const auto r = shift_normalize(DominantWeight{-2, -2, -2, -t + eps, -t});
    EXPECT_EQ(r.partition, Partition({2, 2, 2, 1}));
    EXPECT_EQ(r.shift, -4);
  }
}

TEST(SsytCount, Examples) {
  EXPECT_EQ(ssyt_count(Partition{1, 1}, 2), 1);
  EXPECT_EQ(ssyt_count(Partition{2, 1}, 2), 2);
  for (std::int64_t eps = 0; eps <= 9; ++eps) {
    EXPECT_EQ(ssyt_count(eps == 0 ? Partition{} : Partition{eps}, 2), eps + 1);
  }
}

TEST(TensorPairDim, Examples) {
  EXPECT_EQ(tensor_pair_dim(DominantWeight{-2, -2, -2}, DominantWeight{-3, -3}), 1);
  EXPECT_EQ(tensor_pair_dim(DominantWeight{4, 0}, DominantWeight{0, 0, 0, 0}), 5);
  // m = 3, t = 3, eps = 1: lambda = (-3, -4), lambda(0) = (-2, -2, -3).
  EXPECT_EQ(tensor_pair_dim(DominantWeight{-2, -2, -3}, DominantWeight{-3, -4}), 6);
}

TEST(WeylDim, AgreesWithTableauCount) {
  std::size_t cases = 0;
  for (std::int64_t size = 0; size <= 8; ++size) {
    for (const Partition& p : partitions_of(size, 4)) {
      for (std::size_t n = 1; n <= 6; ++n) {
        EXPECT_EQ(weyl_dim(p, n), ssyt_count(p, n)) << p << " N=" << n;
        ++cases;
      }
    }
  }
  EXPECT_GT(cases, 300u);
}

TEST(WeylDim, ShiftInvariance) {
  for (std::int64_t size = 0; size <= 6; ++size) {
    for (const Partition& p : partitions_of(size, 4)) {
      for (std::size_t n = std::max<std::size_t>(1, p.length()); n <= 5; ++n) {
        const DominantWeight w(p.padded(n));
        for (std::int64_t c = -3; c <= 3; ++c) EXPECT_EQ(weyl_dim(w.shifted(c), n), weyl_dim(w, n));
        const auto normalized = shift_normalize(w.shifted(-7));
        EXPECT_EQ(weyl_dim(normalized.partition, n), weyl_dim(w, n));
      }
    }
  }
}

TEST(WeylDim, SymmetricAndExteriorPowers) {
  for (std::int64_t n = 1; n <= 7; ++n) {
    const auto N = static_cast<std::size_t>(n);
    for (std::int64_t k = 1; k <= 10; ++k) {
      EXPECT_EQ(weyl_dim(Partition{k}, N), oracle::pascal(n + k - 1, k)) << "N=" << n << " k=" << k;
      const Partition column(std::vector<std::int64_t>(static_cast<std::size_t>(k), 1));
      EXPECT_EQ(weyl_dim(column, N), oracle::pascal(n, k)) << "N=" << n << " k=" << k;
    }
    EXPECT_EQ(weyl_dim(Partition(std::vector<std::int64_t>(N, 1)), N), 1);
  }
}

}  // namespace
}  // namespace thickening
