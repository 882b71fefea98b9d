#include <gtest/gtest.h>

#include <stdexcept>

#include "thickening/closed_forms.hpp"
#include "thickening/cohomology.hpp"

namespace thickening {
namespace {

TEST(LengthValue, FiniteZeroCollapsesToZero) {
  EXPECT_TRUE(LengthValue::finite(0).is_zero());
  EXPECT_EQ(LengthValue::finite(0), LengthValue::zero());
  EXPECT_EQ(LengthValue::finite(7).value(), 7);
  EXPECT_THROW(LengthValue::zero().value(), std::logic_error);
  EXPECT_THROW(LengthValue::finite(-1), std::invalid_argument);
  EXPECT_EQ(LengthValue::finite(10).to_string(), "finite 10");
  EXPECT_EQ(LengthValue::infinite().to_string(), "infinite");
}

TEST(NonvanishingIndices, Examples) {
  EXPECT_EQ(nonvanishing_hi_indices(2, 5), (std::set<std::int64_t>{4, 7}));
  EXPECT_EQ(nonvanishing_hi_indices(2, 3), (std::set<std::int64_t>{2, 3}));
  EXPECT_EQ(nonvanishing_hi_indices(3, 7), (std::set<std::int64_t>{5, 9, 13}));
  EXPECT_THROW(nonvanishing_hi_indices(3, 3), std::invalid_argument);
  EXPECT_THROW(nonvanishing_hi_indices(1, 3), std::invalid_argument);
}

TEST(DualIndex, Examples) {
  EXPECT_EQ(dual_index(5, 2, 3), 7);
  EXPECT_EQ(dual_index(4, 2, 5), 3);
  EXPECT_EQ(dual_index(6, 2, 0), 12);
  EXPECT_THROW(dual_index(4, 2, 9), std::invalid_argument);
  EXPECT_THROW(dual_index(4, 2, -1), std::invalid_argument);
}

TEST(DualIndex, InvolutionAndWittIndices) {
  for (std::int64_t m = 3; m <= 12; ++m) {
    for (std::int64_t j = 0; j <= 2 * m; ++j) EXPECT_EQ(dual_index(m, 2, dual_index(m, 2, j)), j);
    EXPECT_EQ(nonvanishing_hi_indices(2, m),
              (std::set<std::int64_t>{dual_index(m, 2, 3), dual_index(m, 2, m + 1)}));
  }
}

TEST(LocalCohomologyLength, Examples) {
  EXPECT_EQ(local_cohomology_length(3, 2, 3), LengthValue::finite(1));
  EXPECT_TRUE(local_cohomology_length(5, 4, 6).is_infinite());
  EXPECT_TRUE(local_cohomology_length(5, 4, 5).is_zero());
  EXPECT_TRUE(local_cohomology_length(4, 1, 3).is_zero());
  EXPECT_THROW(local_cohomology_length(2, 1, 3), std::invalid_argument);
  EXPECT_THROW(local_cohomology_length(4, 1, 9), std::invalid_argument);
}

TEST(LocalCohomologyLength, VanishingStructure) {
  for (std::int64_t m = 3; m <= 8; ++m) {
    for (std::int64_t t = 1; t <= 10; ++t) {
      for (std::int64_t j = 0; j <= 2 * m; ++j) {
        const LengthValue v = local_cohomology_length(m, t, j);
        if (j == m + 1) {
          EXPECT_TRUE(v.is_infinite());
        } else if (j == 3) {
          EXPECT_EQ(v, LengthValue::finite(cumulative_length(m, t)));
          EXPECT_EQ(v.is_zero(), t == 1);
        } else {
          EXPECT_TRUE(v.is_zero()) << m << ' ' << t << ' ' << j;
        }
      }
    }
  }
}

TEST(LocalCohomologyLength, MonotoneInPower) {
  for (std::int64_t m = 3; m <= 8; ++m) {
    for (std::int64_t t = 1; t <= 15; ++t) {
      const auto a = local_cohomology_length(m, t, 3);
      const auto b = local_cohomology_length(m, t + 1, 3);
      const BigInt va = a.is_zero() ? BigInt(0) : a.value();
      EXPECT_LE(va, b.value());
    }
  }
}

}  // namespace
}  // namespace thickening
