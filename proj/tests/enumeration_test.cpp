#include "theta/enumeration.hpp"

#include <gtest/gtest.h>

namespace {

using namespace theta;

std::vector<Integer> counts(const CurveModel& m) { return theta_table(m).counts; }

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Independent oracle: plain 64-bit arithmetic and Pascal's triangle.
long long pow2(int e) { return 1LL << e; }

long long pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = next;
  }
  return row[k];
}

TEST(Counts, OddThetaCharacteristics) {
  EXPECT_EQ(n_odd(3), 28);
  EXPECT_EQ(n_odd(4), 120);
  EXPECT_EQ(n_odd(1), 1);
}

TEST(Counts, EvenThetaCharacteristics) {
  EXPECT_EQ(n_even(2), 10);
  EXPECT_EQ(n_even(3), 36);
}

TEST(Counts, OddPlusEvenIsFourToTheG) {
  for (int g = 1; g <= 16; ++g) {
    Integer four_g;
    mpz_ui_pow_ui(four_g.get_mpz_t(), 4, static_cast<unsigned long>(g));
    EXPECT_EQ(n_odd(g) + n_even(g), four_g) << "g=" << g;
  }
}

TEST(Counts, GenusZeroRejected) { EXPECT_THROW(n_odd(0), InvalidInput); }

TEST(Multiplicity, PowersOfTwo) {
  EXPECT_EQ(multiplicity(0), 1);
  EXPECT_EQ(multiplicity(2), 4);
  EXPECT_EQ(multiplicity(3), 8);
}

TEST(ThetaTable, IrreducibleGenus3OneNode) {
  EXPECT_EQ(counts(IrreducibleNodal{3, 1}), ints({16, 6, 0}));
}

TEST(ThetaTable, SplitGenus4) { EXPECT_EQ(counts(Split{4}), ints({0, 20, 0, 10})); }

TEST(ThetaTable, SplitGenus3) { EXPECT_EQ(counts(Split{3}), ints({4, 0, 6})); }

TEST(ThetaTable, CuspidalGenus3OneCusp) { EXPECT_EQ(counts(Cuspidal{3, 1}), ints({10, 6, 0})); }

TEST(ThetaTable, IrreducibleGenus4FourNodes) {
  const auto t = counts(IrreducibleNodal{4, 4});
  EXPECT_EQ(t, ints({8, 16, 12, 4}));
  long long w = 0;
  for (int i = 0; i < 4; ++i) w += pow2(i) * t[i].get_si();
  EXPECT_EQ(w, 120);
}

TEST(ThetaTable, IrreducibleGenus4TwoAndThreeNodes) {
  EXPECT_EQ(counts(IrreducibleNodal{4, 2}), ints({32, 32, 6, 0}));
  EXPECT_EQ(counts(IrreducibleNodal{4, 3}), ints({16, 24, 12, 1}));
}

TEST(ThetaTable, InvalidModels) {
  EXPECT_THROW(theta_table(IrreducibleNodal{2, 0}), InvalidModel);
  EXPECT_THROW(theta_table(IrreducibleNodal{4, 5}), InvalidModel);
  EXPECT_THROW(theta_table(IrreducibleNodal{4, -1}), InvalidModel);
  EXPECT_THROW(theta_table(Split{2}), InvalidModel);
  EXPECT_THROW(theta_table(Cuspidal{4, 0}), InvalidModel);
  EXPECT_THROW(theta_table(Cuspidal{4, 5}), InvalidModel);
}

TEST(ThetaTable, MultiplicitiesNodalOnly) {
  EXPECT_EQ(*theta_table(Split{4}).multiplicities, ints({1, 2, 4, 8}));
  EXPECT_FALSE(theta_table(Cuspidal{4, 1}).multiplicities.has_value());
}

TEST(ThetaTable, IrreducibleMatchesOracle) {
  for (int g = 3; g <= 12; ++g) {
    for (int d = 0; d <= g; ++d) {
      std::vector<long long> expected(static_cast<std::size_t>(g), 0);
      if (d == 0) {
        expected[0] = pow2(g - 1) * (pow2(g) - 1);
      } else {
        for (int i = 0; i < d && i < g; ++i) expected[i] = pascal(d, i) * pow2(2 * g - d - i - 1);
        if (d < g - 1) expected[d] = pow2(g - d - 1) * (pow2(g - d) - 1);
        if (d == g - 1) expected[g - 1] = 1;
        if (d == g) expected[g - 1] = g;
      }
      const auto t = counts(IrreducibleNodal{g, d});
      for (int i = 0; i < g; ++i) EXPECT_EQ(t[i].get_si(), expected[i]) << "g=" << g << " d=" << d << " i=" << i;
    }
  }
}

TEST(WeightedDegree, SplitGenus3) { EXPECT_EQ(weighted_degree(theta_table(Split{3})), 28); }

TEST(WeightedDegree, IrreducibleGenus4TwoNodes) {
  EXPECT_EQ(weighted_degree(theta_table(IrreducibleNodal{4, 2})), 120);
}

TEST(WeightedDegree, SmoothEqualsN) {
  for (int g = 3; g <= 20; ++g) EXPECT_EQ(weighted_degree(theta_table(IrreducibleNodal{g, 0})), n_odd(g));
}

TEST(WeightedDegree, IdentityAllNodalModels) {
  for (int g = 3; g <= 12; ++g) {
    for (int d = 0; d <= g; ++d) EXPECT_EQ(weighted_degree(theta_table(IrreducibleNodal{g, d})), n_odd(g));
    EXPECT_EQ(weighted_degree(theta_table(Split{g})), n_odd(g));
  }
}

TEST(WeightedDegree, CuspidalUnsupported) {
  EXPECT_THROW(weighted_degree(theta_table(Cuspidal{4, 1})), UnsupportedModel);
}

TEST(WeightedDegree, DisplayedSubleadingFormulaWouldFail) {
  // Replacing t_{g-2} at g=4, delta=3 by C(3,2) 2^{g-delta} 2^{delta-(g-2)-1}
  // = 3 * 2 * 1 = 6 gives 16 + 2*24 + 4*6 + 8*1 = 96.
  const auto t = counts(IrreducibleNodal{4, 3});
  EXPECT_EQ(t[2], 12);
  EXPECT_EQ(16 + 2 * 24 + 4 * 6 + 8 * 1, 96);
}

TEST(Split, ParityVanishing) {
  for (int g = 3; g <= 12; ++g) {
    const auto t = counts(Split{g});
    for (int j = 0; j < g; ++j) {
      if ((j - g) % 2 == 0) {
        EXPECT_EQ(t[j], 0);
      } else {
        EXPECT_EQ(t[j].get_si(), pascal(g + 1, j) * pow2(g - j - 1));
      }
    }
  }
}

TEST(Split, TopStratumIsChoose2) {
  for (int g = 3; g <= 12; ++g) EXPECT_EQ(counts(Split{g})[g - 1].get_si(), pascal(g + 1, 2));
}

TEST(Cuspidal, TotalGenus3) {
  EXPECT_EQ(cuspidal_total(3, 1), 16);
  const auto t = counts(Cuspidal{3, 1});
  EXPECT_EQ(t[0] + t[1], 16);
}

TEST(Cuspidal, Genus5TwoCuspsSumsTo128) {
  // h = 3: N_3 = 28, N_3^+ = 36. Types 0 and 2 share gamma's parity.
  const long long oracle = 1 * 28 + 2 * 36 + 1 * 28;
  const auto t = counts(Cuspidal{5, 2});
  Integer sum = 0;
  for (const auto& x : t) sum += x;
  EXPECT_EQ(sum.get_si(), oracle);
  EXPECT_EQ(cuspidal_total(5, 2).get_si(), oracle);
  EXPECT_EQ(oracle, pow2(2 * 5 - 2 - 1));
}

TEST(Cuspidal, TotalsMatchTablesExhaustively) {
  for (int g = 3; g <= 12; ++g) {
    for (int c = 1; c <= g - 2; ++c) {
      Integer sum = 0;
      for (const auto& x : counts(Cuspidal{g, c})) sum += x;
      EXPECT_EQ(sum, cuspidal_total(g, c)) << "g=" << g << " gamma=" << c;
      EXPECT_EQ(sum.get_si(), pow2(2 * g - c - 1));
    }
  }
}

TEST(Cuspidal, TotalOutOfRange) {
  EXPECT_THROW(cuspidal_total(5, 4), InvalidModel);
  EXPECT_THROW(cuspidal_total(5, 0), InvalidModel);
}

TEST(Cuspidal, FullyCuspidalTopEntries) {
  EXPECT_EQ(counts(Cuspidal{4, 3})[3], 1);
  EXPECT_EQ(counts(Cuspidal{4, 4})[3], 4);
}

TEST(Recursion, FirstStratumFromProjection) {
  for (int g = 4; g <= 12; ++g) {
    for (int d = 1; d <= g; ++d) {
      EXPECT_EQ(irreducible_count(g, d, 1), Integer(d) * irreducible_count(g - 1, d - 1, 0)) << g << " " << d;
    }
  }
}

TEST(Recursion, AllStrataFromProjection) {
  for (int g = 3; g <= 12; ++g) {
    for (int d = 1; d <= g; ++d) {
      for (int i = 0; i < d; ++i) {
        EXPECT_EQ(irreducible_count(g, d, i), binomial(d, i) * irreducible_count(g - i, d - i, 0))
            << "g=" << g << " d=" << d << " i=" << i;
      }
    }
  }
}

}  // namespace
