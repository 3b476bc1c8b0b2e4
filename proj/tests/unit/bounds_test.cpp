#include <gtest/gtest.h>

#include "printers.hpp"
#include "cgg/bounds.hpp"
#include "cgg/constructions.hpp"
#include "cgg/errors.hpp"

namespace cgg {
namespace {

TEST(Fmax, Examples) {
  const FmaxResult a = f_max(12, 3, 6);
  EXPECT_EQ(a.value, 36);
  EXPECT_EQ(a.clause, FmaxClause::kQLeNMinus2K);
  const FmaxResult b = f_max(12, 3, 8);
  EXPECT_EQ(b.value, 33);
  EXPECT_EQ(b.clause, FmaxClause::kMiddle);
  EXPECT_EQ(b.ell, 2);
  const FmaxResult c = f_max(10, 2, 8);
  EXPECT_EQ(c.value, 17);
  EXPECT_EQ(c.clause, FmaxClause::kQGeNMinusK);
  EXPECT_EQ(f_max(12, 3, 9).clause, FmaxClause::kQGeNMinusK);
  EXPECT_EQ(f_max(12, 3, 9).value, 30);
}

TEST(Fmax, RejectsOutsideDomain) {
  EXPECT_THROW(f_max(12, 0, 3), ParameterError);
  EXPECT_THROW(f_max(12, 6, 3), ParameterError);
  EXPECT_THROW(f_max(12, 3, 0), ParameterError);
  EXPECT_THROW(f_max(12, 3, 12), ParameterError);
  EXPECT_FALSE(fmax_domain_contains(3, 1, 1));
}

TEST(Fmax, ClauseContinuity) {
  for (std::int64_t n = 4; n <= 64; ++n) {
    for (std::int64_t k = 1; k <= n / 2 - 1; ++k) {
      const std::int64_t middle_at_k = k * n - k * (k + 1) / 2;
      const std::int64_t third_at_n_minus_k = n * (n - 1) / 2 - (n - k) * (n - k - 1) / 2;
      EXPECT_EQ(middle_at_k, third_at_n_minus_k);
      EXPECT_EQ(f_max(static_cast<int>(n), static_cast<int>(k), static_cast<int>(n - k)).value, middle_at_k);
    }
  }
}

TEST(Fmax, Monotone) {
  for (int n = 4; n <= 32; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) {
      for (int q = 1; q <= n - 1; ++q) {
        if (q > 1) EXPECT_LE(f_max(n, k, q).value, f_max(n, k, q - 1).value);
        if (k > 1) EXPECT_GE(f_max(n, k, q).value, f_max(n, k - 1, q).value);
      }
    }
  }
}

TEST(Loss, FormulaExamples) {
  EXPECT_EQ(loss_formula(3, 2, 0), 1);
  EXPECT_EQ(loss_formula(3, 2, 1), 1);
  EXPECT_EQ(loss_formula(3, 2, 2), 0);
  EXPECT_EQ(loss_formula(3, 2, -1), 1);
  EXPECT_THROW(loss_formula(3, 3, 0), ParameterError);
}

TEST(Loss, DirectExamples) {
  EXPECT_EQ(loss_direct(ConstructionSpec(12, 3, 2), 0), 1);
  const ConstructionSpec plain(12, 3, 0);
  for (int j = -5; j <= 6; ++j) EXPECT_EQ(loss_direct(plain, j), 0);
  const ConstructionSpec odd(13, 3, 2);
  EXPECT_EQ(loss_direct(odd, 2), 0);
  EXPECT_GE(allowed_edges(odd, 2).size(), 3u);
}

TEST(Loss, FormulaMatchesCountAndTotals) {
  for (int n = 5; n <= 24; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) {
      for (int ell = 0; ell < k; ++ell) {
        const ConstructionSpec spec(n, k, ell);
        const LossProfile p = loss_profile(spec);
        ASSERT_EQ(static_cast<int>(p.per_direction.size()), n);
        int sum = 0;
        for (const auto& [j, loss] : p.per_direction) {
          EXPECT_EQ(loss, loss_formula(k, ell, j)) << n << "," << k << "," << ell << " j=" << j;
          if (p.per_direction.count(-j)) EXPECT_EQ(loss, p.per_direction.at(-j));
          sum += loss;
        }
        EXPECT_EQ(sum, p.total);
        EXPECT_EQ(p.total, ell * (ell + 1) / 2);
        EXPECT_EQ(static_cast<std::int64_t>(k) * n - static_cast<std::int64_t>(construct_gnkl(n, k, ell).edge_count()),
                  p.total);
      }
    }
  }
}

TEST(TriangularIdentity, Examples) {
  EXPECT_TRUE(triangular_identity(1));
  EXPECT_TRUE(triangular_identity(3));
  EXPECT_THROW(triangular_identity(0), ParameterError);
}

TEST(TriangularIdentity, UpToOneThousand) {
  for (int n = 1; n <= 1000; ++n) EXPECT_TRUE(triangular_identity(n)) << n;
}

TEST(DirectionCap, HoldsOnGnk) {
  for (int n = 4; n <= 20; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) EXPECT_TRUE(direction_cap_holds(construct_gnk(n, k), k));
  }
}

}  // namespace
}  // namespace cgg
