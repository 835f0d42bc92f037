#include <gtest/gtest.h>

#include <cmath>

#include "qsp/appendix.hpp"
#include "qsp/macdonald.hpp"
#include "qsp/suites.hpp"

using namespace qsp;

namespace {

FieldElem q(const Rational& e) { return FieldElem::q_power(e); }
MacdonaldParams params(const std::string& label) { return MacdonaldParams::from_pair(build_pair(parse_pair_label(label))); }

// (x; a)_k
FieldElem poch(const FieldElem& x, const FieldElem& a, long k) {
  FieldElem r(1L), ai(1L);
  for (long i = 0; i < k; ++i, ai *= a) r *= FieldElem(1L) - x * ai;
  return r;
}

// Rank one: P_n is the monic Rogers polynomial
//   sum_k (g;a)_k (g;a)_{n-k} / ((a;a)_k (a;a)_{n-k}) x^{n-2k}
// so the coefficient of m_{n-2k} is that ratio divided by the k = 0 term.
FieldElem rogers(const FieldElem& a, const FieldElem& g, long n, long k) {
  auto term = [&](long j) { return poch(g, a, j) * poch(g, a, n - j) / (poch(a, a, j) * poch(a, a, n - j)); };
  return term(k) / term(0);
}

}  // namespace

TEST(Operator, AIOneOnConstant) {
  MacdonaldSystem sys(params("AI(1)"));
  auto ops = sys.operator_set();
  ASSERT_EQ(ops.size(), 1u);
  EXPECT_EQ(ops[0].kind, OperatorKind::D);
  CharElem one = CharElem::monomial(sys.lattice(), LatticePoint{});
  CharElem f = sys.apply_operator_F(ops[0], one);
  // 1 + g with g = q^2
  EXPECT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f.coefficient(LatticePoint{}), FieldElem(1L) + q(2));
}

TEST(Operator, RejectsNonInvariantInput) {
  MacdonaldSystem sys(params("AI(2)"));
  CharElem f = CharElem::monomial(sys.lattice(), sys.lattice()->from_vector({1, 0}));
  EXPECT_THROW(sys.apply_operator_F(sys.operator_set()[0], f), DomainError);
}

TEST(Operator, SetsFollowTheType) {
  EXPECT_EQ(MacdonaldSystem(params("DI3(4)")).operator_set().size(), 2u);
  auto g = MacdonaldSystem(params("G")).operator_set();
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].kind, OperatorKind::E);
  auto f4 = MacdonaldSystem(params("EII")).operator_set();
  EXPECT_EQ(f4[0].kind, OperatorKind::E);
  EXPECT_EQ(MacdonaldSystem(params("BI(3,2)")).operator_set()[0].kind, OperatorKind::D);
}

TEST(Operator, RatioIsFiniteForMinusculeBeta) {
  MacdonaldSystem sys(params("AI(1)"));
  RatioA r = sys.coefficient_ratio_A(sys.operator_set()[0].beta);
  EXPECT_FALSE(r.numerator.is_zero());
  EXPECT_FALSE(r.denominator.is_zero());
  EXPECT_THROW(sys.coefficient_ratio_A(sys.lattice()->from_vector({3})), ShapeError);
}

TEST(Solver, RankOneMatchesRogersPolynomials) {
  for (std::string l : {"AI(1)", "AII(3)", "BII(3)", "DII(4)", "CaseI(A,1)"}) {
    MacdonaldParams P = params(l);
    MacdonaldSystem sys(P);
    const FieldElem a = P.a[0], g = P.g[0];
    for (long n = 0; n <= 6; ++n) {
      PolyResult r = sys.macdonald_poly(sys.lattice()->from_vector({n}));
      for (long k = 0; 2 * k <= n; ++k)
        EXPECT_EQ(r.coefficient(sys.lattice()->from_vector({n - 2 * k})), rogers(a, g, n, k)) << l << " n=" << n;
    }
  }
}

TEST(Solver, TwoTermExample) {
  MacdonaldSystem sys(params("AI(1)"));
  PolyResult r = sys.macdonald_poly(sys.lattice()->from_vector({2}));
  ASSERT_EQ(r.coefficients.size(), 2u);
  EXPECT_EQ(r.coefficient(sys.lattice()->from_vector({0})), (q(4) + 1) / (q(4) + q(2) + 1));
  EXPECT_EQ(r.eigenvalues[0].second, q(6) + q(-4));
}

TEST(Solver, NonDominantLambdaIsRejected) {
  MacdonaldSystem sys(params("AI(2)"));
  EXPECT_THROW(sys.macdonald_poly(sys.lattice()->from_vector({2, -1})), DomainError);
}

TEST(Solver, CapRefusesBeforeWork) {
  MacdonaldSystem e8(params("EVIII"));
  EXPECT_THROW(e8.macdonald_poly(LatticePoint{}), CapExceeded);
  MacdonaldSystem small(params("AI(3)"), 10);
  EXPECT_THROW(small.macdonald_poly(LatticePoint{}), CapExceeded);
}

TEST(Solver, ExplicitParameters) {
  auto P = MacdonaldParams::explicit_params("A1", {q(4)}, {FieldElem(1L)});
  MacdonaldSystem sys(P);
  PolyResult r = sys.macdonald_poly(sys.lattice()->from_vector({4}));
  ASSERT_EQ(r.coefficients.size(), 1u);
  EXPECT_TRUE(r.coefficient(sys.lattice()->from_vector({4})).is_one());
  EXPECT_THROW(MacdonaldParams::explicit_params("A2", {q(4), q(2)}, {q(2), q(2)}), InvalidSpec);
  EXPECT_THROW(MacdonaldParams::explicit_params("B2", {q(4), q(4), q(4)}, {q(2)}), ShapeError);
}

TEST(Solver, SingleSpinOperatorCannotSeparateD4) {
  MacdonaldSystem sys(params("DI3(4)"));
  auto ops = sys.operator_set();
  const LatticePoint lam = sys.lattice()->from_vector({2, 0, 0, 0});
  PolyOptions joint;
  joint.spectral_separation = true;
  EXPECT_NO_THROW(sys.macdonald_poly(lam, joint));
  for (const auto& op : ops) {
    PolyOptions one = joint;
    one.operators = std::vector<LatticePoint>{op.beta};
    EXPECT_THROW(sys.macdonald_poly(lam, one), CollisionError);
  }
}

TEST(SolverProperty, DegenerationsOnSmallSystems) {
  for (std::string t : {"A2", "B2", "G2"}) {
    auto P = MacdonaldParams::explicit_params(t, {q(2)}, {FieldElem(1L)});
    MacdonaldSystem one(P.with_g_one()), ga(P.with_g_equal_a());
    for (const auto& l : one.lattice()->dominant_up_to_height(3)) {
      EXPECT_EQ(one.expand(one.macdonald_poly(l)), m_lambda(one.lattice(), l)) << t;
      EXPECT_EQ(ga.expand(ga.macdonald_poly(l)), ga.weyl_character(l)) << t;
    }
  }
}

TEST(SolverProperty, EigenAndTriangularityOnPairs) {
  for (std::string l : {"AI(2)", "BI(3,2)", "CII2(4)", "G"}) {
    MacdonaldSystem sys(params(l));
    for (const auto& lam : sys.lattice()->dominant_up_to_height(3)) {
      PolyOptions po;
      po.check_eigen = false;
      PolyResult r = sys.macdonald_poly(lam, po);
      bool pass = false;
      verify_poly(sys, r, {}, pass);
      EXPECT_TRUE(pass) << l << " " << sys.lattice()->to_string(lam);
    }
  }
}

TEST(SolverProperty, ShuffledWeylOrderAndWorkersGiveTheSameResult) {
  MacdonaldSystem base(params("BI(3,2)"));
  const LatticePoint lam = base.lattice()->from_vector({1, 1});
  const std::string want = poly_json(base.macdonald_poly(lam)).dump();
  for (std::uint64_t seed : {1ULL, 99ULL, 123456789ULL})
    for (unsigned workers : {1u, 2u, 3u}) {
      MacdonaldSystem sys(params("BI(3,2)"));
      PolyOptions po;
      po.apply = {workers, seed};
      EXPECT_EQ(poly_json(sys.macdonald_poly(lam, po)).dump(), want);
    }
}

TEST(InnerProduct, TrivialDensityAtGOne) {
  // g = 1: Delta = 1, so <m_mu, m_mu> = |W mu| and distinct orbits are orthogonal.
  MacdonaldSystem sys(params("AI(2)").with_g_one());
  auto L = sys.lattice();
  CharElem m10 = m_lambda(L, L->from_vector({1, 0})), m11 = m_lambda(L, L->from_vector({1, 1}));
  auto G = sys.gram_numeric({m10, m11, CharElem::monomial(L, LatticePoint{})}, 0.5L);
  EXPECT_NEAR(static_cast<double>(G[0][0]), 3.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(G[1][1]), 6.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(G[2][2]), 1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(G[0][1]), 0.0, 1e-12);
}

TEST(InnerProduct, RankOneOrthogonality) {
  MacdonaldSystem sys(params("AI(1)"));
  std::vector<CharElem> ps;
  for (long n = 0; n <= 5; ++n) ps.push_back(sys.expand(sys.macdonald_poly(sys.lattice()->from_vector({n}))));
  auto G = sys.gram_numeric(ps, 0.5L);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_GT(G[i][i], 0);
    for (std::size_t j = 0; j < i; ++j) EXPECT_LE(std::fabs(static_cast<double>(G[i][j])), 1e-10);
  }
  EXPECT_THROW(sys.gram_numeric(ps, 1.5L), DomainError);
}

TEST(OperatorForm, RankOneCones) {
  for (std::string l : {"AI(1)", "BII(2)"}) {
    MacdonaldSystem sys(params(l));
    auto reps = verify_operator_form(sys, sys.operator_set()[0].beta, 12);
    ASSERT_EQ(reps.size(), 2u);
    for (const auto& r : reps) EXPECT_TRUE(r.pass) << l << " " << r.identity;
  }
}
