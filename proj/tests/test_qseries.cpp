#include <gtest/gtest.h>

#include "qsp/qseries.hpp"

using namespace qsp;

namespace {

FieldElem q(const Rational& e) { return FieldElem::q_power(e); }
MacdonaldParams params(const std::string& label) { return MacdonaldParams::from_pair(build_pair(parse_pair_label(label))); }

ConePoint e(int i, int k = 1) {
  ConePoint c{};
  c[i] = k;
  return c;
}

}  // namespace

TEST(TruncSeries, PochhammerMatchesFiniteProduct) {
  // (c x; a)_inf = (1 - c x) (c a x; a)_inf
  const int N = 6;
  FieldElem a = q(2), c = q(1);
  TruncSeries closed = poch_inf_trunc(1, e(0), a, N, -1, c);
  TruncSeries shifted = poch_inf_trunc(1, e(0), a, N, -1, c * a);
  TruncSeries lin = TruncSeries::one(1, N);
  lin.add_term(e(0), -c);
  EXPECT_EQ(closed, lin * shifted);
  // Coefficient of x: -c / (1 - a).
  EXPECT_EQ(closed.coefficient(e(0)), -c / (FieldElem(1L) - a));
}

TEST(TruncSeries, ReciprocalAndInverse) {
  const int N = 8;
  FieldElem a = q(4), g = q(2);
  TruncSeries p = poch_inf_trunc(2, e(1), a, N, -1, g);
  TruncSeries r = poch_inf_recip_trunc(2, e(1), a, N, -1, g);
  EXPECT_EQ(p * r, TruncSeries::one(2, N));
  EXPECT_EQ(p * p.inverse(), TruncSeries::one(2, N));
  TruncSeries zero(2, N);
  EXPECT_THROW(zero.inverse(), DivisionByZero);
  EXPECT_THROW(poch_inf_recip_trunc(1, e(0), FieldElem(1L), N), PoleError);
}

TEST(TruncSeries, RankOneP) {
  // p = (g x; a)_inf / (x; a)_inf; coefficient of x is (1 - g) / (1 - a).
  MacdonaldParams P = params("AI(1)");
  TruncSeries p = build_p(P, 6);
  FieldElem a = q(4), g = q(2);
  EXPECT_EQ(p.coefficient(e(0)), (FieldElem(1L) - g) / (FieldElem(1L) - a));
  EXPECT_EQ(p.coefficient(ConePoint{}), FieldElem(1L));
}

TEST(TruncSeries, RootOrderDoesNotMatter) {
  MacdonaldParams P = params("BI(3,2)");
  const int n = static_cast<int>(P.sigma.positive_roots().size());
  std::vector<int> rev;
  for (int k = n - 1; k >= 0; --k) rev.push_back(k);
  EXPECT_EQ(build_p(P, 6), build_p(P, 6, rev));
}

TEST(TruncSeries, FromCharRejectsTheOtherCone) {
  MacdonaldParams P = params("AI(1)");
  auto L = std::make_shared<const WeightLattice>(P.sigma);
  CharElem f = CharElem::monomial(L, L->from_vector({2}));
  EXPECT_THROW(TruncSeries::from_char(f, 4, -1), DomainError);
  EXPECT_NO_THROW(TruncSeries::from_char(f, 4, +1));
}

TEST(Identities, RankOnePairsAtOrderTwelve) {
  for (std::string l : {"AI(1)", "CaseI(A,1)", "AII(3)", "BII(2)", "BII(3)", "BII(4)", "DII(4)"}) {
    auto reps = verify_rank_one_identities(params(l), 12);
    ASSERT_EQ(reps.size(), 3u);
    for (const auto& r : reps) EXPECT_TRUE(r.pass) << l << " " << r.identity;
  }
}

TEST(Identities, PerturbedGFailsAtTheFirstCoefficient) {
  auto reps = verify_rank_one_identities(params("AI(1)"), 12, q(1));
  bool any_fail = false;
  for (const auto& r : reps)
    if (!r.pass) {
      any_fail = true;
      ASSERT_TRUE(r.first_mismatch.has_value());
    }
  EXPECT_TRUE(any_fail);
  EXPECT_FALSE(reps[0].pass);
  EXPECT_EQ(reps[0].first_mismatch->exponent, "-(1)");
}

TEST(Identities, BridgeForSmallRanks) {
  for (std::string l : {"AI(1)", "AI(2)", "BI(3,2)", "CII2(4)", "G", "EIV"}) {
    IdentityReport r = verify_bridge(params(l), 8);
    EXPECT_TRUE(r.pass) << l;
  }
}

TEST(Identities, WSubstituteNeedsASignedPermutation) {
  MacdonaldParams P = params("AI(2)");
  auto W = weyl_elements(P.sigma);
  TruncSeries p = build_p(P, 4);
  int refused = 0;
  for (const auto& w : W) {
    if (w.length == 0 || w.length == static_cast<int>(P.sigma.positive_roots().size())) continue;
    try {
      w_substitute(w, p);
    } catch (const DomainError&) {
      ++refused;
    }
  }
  EXPECT_EQ(refused, 4);
}

TEST(Identities, CompareReportsLowestMismatch) {
  TruncSeries a = TruncSeries::one(2, 5), b = TruncSeries::one(2, 5);
  a.add_term(e(0, 3), q(1));
  a.add_term(e(1, 2), q(2));
  b.add_term(e(0, 3), q(1));
  IdentityReport r = compare_series("x", "y", a, b);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.first_mismatch.has_value());
  EXPECT_EQ(r.first_mismatch->lhs, "q^2");
  EXPECT_EQ(r.first_mismatch->rhs, "0");
}
