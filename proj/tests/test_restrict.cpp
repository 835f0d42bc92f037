#include <gtest/gtest.h>

#include <algorithm>

#include "qsp/restrict.hpp"

using namespace qsp;

namespace {

SymmetricPair pair(const std::string& label) { return build_pair(parse_pair_label(label)); }
FieldElem q(const Rational& e) { return FieldElem::q_power(e); }

}  // namespace

TEST(PairLabel, RoundTrip) {
  for (std::string l : {"AI(2)", "BI(4,2)", "CaseI(B,2)", "EII", "DIII1(4)"}) EXPECT_EQ(parse_pair_label(l).label(), l);
  EXPECT_THROW(parse_pair_label("BI(4,"), InvalidSpec);
}

TEST(SymmetricPair, TypeAIValues) {
  SymmetricPair p = pair("AI(2)");
  EXPECT_EQ(p.sigma.type_label, "A2");
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(p.sigma.a[i], q(4));
    EXPECT_EQ(p.sigma.g[i], q(2));
  }
}

TEST(SymmetricPair, TypeBIShortRootG) {
  SymmetricPair p = pair("BI(4,2)");
  EXPECT_EQ(p.sigma.type_label, "B2");
  const int k = p.sigma.sigma_index(2);
  ASSERT_GE(k, 0);
  EXPECT_EQ(p.sigma.g[k], q(5));
  EXPECT_EQ(p.sigma.mult[k], 5);
}

TEST(SymmetricPair, ExceptionalTypes) {
  EXPECT_EQ(pair("EII").sigma.type_label, "F4");
  EXPECT_EQ(pair("EIV").sigma.type_label, "A2");
  EXPECT_EQ(pair("G").sigma.type_label, "G2");
  EXPECT_EQ(pair("DI3(4)").sigma.type_label, "D4");
}

TEST(SymmetricPair, ConstraintViolationsAreRejected) {
  EXPECT_THROW(pair("AI(0)"), InvalidSpec);
  EXPECT_THROW(pair("BI(3,4)"), InvalidSpec);
  EXPECT_THROW(build_pair(parse_pair_label("ZZ(3)")), InvalidSpec);
}

TEST(SymmetricPair, TabulatedThetaForBIIsCorrected) {
  // As tabulated, Theta(alpha_r) for BI and Theta(alpha_1) for BII do not square to the identity.
  for (std::string l : {"BI(3,2)", "BII(3)"}) {
    SymmetricPair p = pair(l);
    EXPECT_TRUE(p.theta_corrected) << l;
    EXPECT_FALSE(p.correction.empty()) << l;
  }
  EXPECT_FALSE(pair("AI(3)").theta_corrected);
}

TEST(SymmetricPair, MinusculeData) {
  auto w = special_weights(pair("BI(4,2)"));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].kind, SpecialKind::Minuscule);
  EXPECT_EQ(w[0].label, 2);
  ASSERT_TRUE(w[0].lift.has_value());
  EXPECT_EQ(*w[0].lift, 4);
  auto f = special_weights(pair("EII"));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].kind, SpecialKind::Pseudominuscule);
}

TEST(SymmetricPair, IntrinsicMinusculeTests) {
  RootDatum d4 = RootDatum::build({parse_cartan_type("D4")}, Normalization::ShortNorm2);
  EXPECT_TRUE(is_minuscule_weight(d4, 0));
  EXPECT_FALSE(is_minuscule_weight(d4, 1));
  EXPECT_TRUE(is_minuscule_weight(d4, 2));
  EXPECT_TRUE(is_minuscule_weight(d4, 3));
  RootDatum g2 = RootDatum::build({parse_cartan_type("G2")}, Normalization::ShortNorm2);
  EXPECT_FALSE(is_minuscule_weight(g2, 0));
  EXPECT_FALSE(is_minuscule_weight(g2, 1));
  std::vector<int> hs = g2.highest_short_root();
  EXPECT_TRUE(is_pseudominuscule_weight(g2, Weight(hs.begin(), hs.end())));
}

// Over every desk pair: multiplicities add up to the roots moved by Theta,
// and a = q^{2 (alpha~, alpha~)}.
TEST(SymmetricPairProperty, MultiplicitiesCountMovedRoots) {
  for (const auto& s : desk_pairs()) {
    SymmetricPair p = build_pair(s);
    long moved = 0;
    for (std::size_t k = 0; k < p.ambient.positive_roots().size(); ++k) {
      Weight r = p.restrict_weight(p.ambient.root(static_cast<int>(k)));
      moved += std::any_of(r.begin(), r.end(), [](const Rational& v) { return v != 0; });
    }
    long total = 0;
    for (long m : p.sigma.mult_positive) total += m;
    EXPECT_EQ(total, moved) << s.label();
    for (int i = 0; i < p.sigma.rank(); ++i) {
      const Weight& a = p.sigma.simple_restricted[i];
      EXPECT_EQ(p.sigma.a[i], q(2 * p.ambient.inner(a, a))) << s.label();
      EXPECT_EQ(p.multiplicity(a), p.sigma.mult[i]) << s.label();
    }
  }
}

TEST(Reconcile, FixtureListsEveryMismatch) {
  std::vector<std::string> got;
  for (const auto& s : reconcile_pairs())
    for (const auto& f : reconcile_appendix(build_pair(s)).mismatches()) got.push_back(s.label() + " " + f);
  std::vector<std::string> want = builtin_reconcile_fixture();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}
