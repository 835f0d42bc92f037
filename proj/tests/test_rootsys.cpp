#include <gtest/gtest.h>

#include "qsp/rootsys.hpp"

using namespace qsp;

namespace {

RootDatum datum(const std::string& t) { return RootDatum::build({parse_cartan_type(t)}, Normalization::ShortNorm2); }

}  // namespace

TEST(RootDatum, WeylOrders) {
  const std::vector<std::pair<std::string, long>> want = {{"A1", 2},   {"A2", 6},    {"A3", 24},    {"B2", 8},
                                                          {"B3", 48},  {"C3", 48},   {"D4", 192},   {"G2", 12},
                                                          {"F4", 1152}, {"E6", 51840}, {"E7", 2903040}};
  for (const auto& [t, n] : want) EXPECT_EQ(datum(t).weyl_order(), n) << t;
  EXPECT_EQ(datum("E8").weyl_order(), mpz_class("696729600"));
}

TEST(RootDatum, PositiveRootCounts) {
  const std::vector<std::pair<std::string, std::size_t>> want = {
      {"A3", 6}, {"B3", 9}, {"C4", 16}, {"D4", 12}, {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [t, n] : want) EXPECT_EQ(datum(t).positive_roots().size(), n) << t;
}

TEST(RootDatum, BourbakiNumbering) {
  // B2: alpha_1 long; C2: alpha_2 long; G2: alpha_2 long.
  RootDatum b2 = datum("B2"), c2 = datum("C2"), g2 = datum("G2");
  EXPECT_GT(b2.gram()[0][0], b2.gram()[1][1]);
  EXPECT_GT(c2.gram()[1][1], c2.gram()[0][0]);
  EXPECT_EQ(g2.gram()[1][1], 3 * g2.gram()[0][0]);
  // cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
  EXPECT_EQ(b2.cartan()[0][1], -2);
  EXPECT_EQ(b2.cartan()[1][0], -1);
  EXPECT_EQ(g2.cartan()[0][1] * g2.cartan()[1][0], 3);
}

TEST(RootDatum, Normalizations) {
  RootDatum s = RootDatum::build({parse_cartan_type("B2")}, Normalization::ShortNorm2);
  RootDatum l = RootDatum::build({parse_cartan_type("B2")}, Normalization::LongNorm2);
  EXPECT_EQ(s.gram()[1][1], 2);
  EXPECT_EQ(l.gram()[0][0], 2);
  EXPECT_EQ(l.gram()[1][1], 1);
}

TEST(RootDatum, WeylCapRefuses) {
  EXPECT_THROW(weyl_elements(datum("E6"), 1000), CapExceeded);
  EXPECT_EQ(weyl_elements(datum("B3"), 48).size(), 48u);
}

TEST(RootDatum, RhoIsHalfSumOfPositiveRoots) {
  for (std::string t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootDatum d = datum(t);
    Weight sum(d.rank(), 0);
    for (std::size_t k = 0; k < d.positive_roots().size(); ++k)
      for (int i = 0; i < d.rank(); ++i) sum[i] += d.positive_roots()[k][i];
    for (int i = 0; i < d.rank(); ++i) EXPECT_EQ(2 * d.rho()[i], sum[i]) << t;
    // <rho, alpha_i^vee> = 1
    for (int i = 0; i < d.rank(); ++i) EXPECT_EQ(d.coroot_pairing(d.rho(), i), 1) << t;
  }
}

TEST(RootDatum, LongestElementNegatesPositiveRoots) {
  for (std::string t : {"A3", "B3", "D4", "G2"}) {
    RootDatum d = datum(t);
    EXPECT_EQ(d.w0_word().size(), d.positive_roots().size()) << t;
    for (std::size_t k = 0; k < d.positive_roots().size(); ++k) {
      Weight img = d.apply_w0(d.root(static_cast<int>(k)));
      std::vector<int> neg;
      for (const auto& v : img) neg.push_back(-static_cast<int>(v.get_num().get_si()));
      EXPECT_GE(d.positive_root_index(neg), 0) << t;
    }
  }
}

TEST(RootDatum, DominanceAndLowerIdeal) {
  RootDatum a2 = datum("A2");
  // 2 rho = 2 alpha_1 + 2 alpha_2 dominates rho, theta = alpha_1 + alpha_2 and 0.
  Weight two_rho = {2, 2}, theta = {1, 1}, zero = {0, 0};
  EXPECT_TRUE(dominance_leq(a2, theta, two_rho));
  EXPECT_TRUE(dominance_leq(a2, zero, theta));
  EXPECT_FALSE(dominance_leq(a2, two_rho, theta));
  auto ideal = dominant_lower_ideal(a2, two_rho, 1);
  EXPECT_EQ(ideal.front(), two_rho);
  for (const auto& mu : ideal) {
    EXPECT_TRUE(a2.is_dominant(mu));
    EXPECT_TRUE(dominance_leq(a2, mu, two_rho));
  }
}

TEST(RootDatumProperty, WeylElementsPreserveTheForm) {
  for (std::string t : {"A3", "B3", "C3", "D4", "G2", "B2"}) {
    RootDatum d = datum(t);
    const int n = d.rank();
    auto W = weyl_elements(d);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(W.size())), d.weyl_order());
    long even = 0;
    for (const auto& w : W) {
      even += w.sign() > 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Rational g = 0;
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
              g += w.root_matrix[k * n + i] * d.gram()[k][l] * w.root_matrix[l * n + j];
          ASSERT_EQ(g, d.gram()[i][j]) << t;
        }
    }
    EXPECT_EQ(2 * even, static_cast<long>(W.size())) << t;
  }
}

TEST(RootDatumProperty, OrbitOfAFundamentalWeightHasIndexSize) {
  // |W omega_1| = |W| / |W_{omega_1}|: A3 -> 4, B3 -> 6, D4 -> 8, G2 -> 6.
  const std::vector<std::pair<std::string, std::size_t>> want = {{"A3", 4}, {"B3", 6}, {"D4", 8}, {"G2", 6}};
  for (const auto& [t, n] : want) {
    RootDatum d = datum(t);
    EXPECT_EQ(weyl_orbit(d, d.fundamental_weights()[0]).size(), n) << t;
  }
}
