#include <gtest/gtest.h>

#include "qsp/charring.hpp"

using namespace qsp;

namespace {

LatticePtr lattice(const std::string& t) {
  return std::make_shared<const WeightLattice>(RootDatum::build({parse_cartan_type(t)}, Normalization::ShortNorm2));
}

}  // namespace

TEST(WeightLattice, CoordinatesOfDoubledRoots) {
  auto L = lattice("A2");
  // 2 alpha_i has coordinates equal to row i of the Cartan matrix.
  EXPECT_EQ(L->to_string(L->doubled_root(L->datum().positive_root_index({1, 0}))), "(2, -1)");
  EXPECT_EQ(L->to_string(L->doubled_root(L->datum().positive_root_index({0, 1}))), "(-1, 2)");
  EXPECT_EQ(L->to_string(L->rho()), "(1, 1)");
  EXPECT_EQ(L->height(L->from_vector({2, 1})), 3);
  EXPECT_THROW(L->from_vector({1}), ShapeError);
}

TEST(WeightLattice, RootCoordinatesRoundTrip) {
  auto L = lattice("B3");
  for (const auto& p : L->dominant_up_to_height(3)) EXPECT_EQ(L->from_root_coords(L->to_root_coords(p)), p);
  // A root itself is only half of a lattice point.
  EXPECT_THROW(L->from_root_coords({1, 0, 0}), DomainError);
}

TEST(WeightLattice, OrbitsAndLowerIdeal) {
  auto L = lattice("A2");
  EXPECT_EQ(L->orbit(L->from_vector({1, 1})).size(), 6u);
  EXPECT_EQ(L->orbit(L->from_vector({1, 0})).size(), 3u);
  auto ideal = L->lower_ideal(L->from_vector({2, 2}));
  std::vector<std::string> got;
  for (const auto& p : ideal) got.push_back(L->to_string(p));
  EXPECT_EQ(got, (std::vector<std::string>{"(2, 2)", "(3, 0)", "(0, 3)", "(1, 1)", "(0, 0)"}));
}

TEST(CharElem, MonomialSymmetricFunctions) {
  auto L = lattice("B2");
  CharElem m = m_lambda(L, L->from_vector({1, 0}));
  EXPECT_EQ(m.terms().size(), L->orbit(L->from_vector({1, 0})).size());
  EXPECT_TRUE(is_invariant(m));
  EXPECT_FALSE(is_invariant(CharElem::monomial(L, L->from_vector({1, 0}))));
  EXPECT_EQ(symmetrize(CharElem::monomial(L, L->from_vector({0, 0}))).coefficient(L->from_vector({0, 0})),
            FieldElem(8L));
}

TEST(CharElem, ExactDivision) {
  auto L = lattice("A2");
  CharElem a = m_lambda(L, L->from_vector({1, 0})) + CharElem::monomial(L, L->from_vector({0, 0}));
  CharElem b = m_lambda(L, L->from_vector({0, 1}));
  EXPECT_EQ((a * b).exact_div(b), a);
  EXPECT_THROW(a.exact_div(b), DivisibilityError);
}

TEST(CharElem, ShiftActsByQPowers) {
  auto L = lattice("A1");
  CharElem f = CharElem::monomial(L, L->from_vector({2}));
  CharElem g = t_shift(L->from_vector({1}), f);
  // beta = 2 omega = alpha, nu = 2 alpha, (alpha, alpha) = 2.
  EXPECT_EQ(g.coefficient(L->from_vector({2})), FieldElem::q_power(4));
}

TEST(CharElemProperty, WeylActionIsAnAction) {
  auto L = lattice("G2");
  auto W = weyl_elements(L->datum());
  CharElem f = CharElem::monomial(L, L->from_vector({2, 1}), FieldElem::q_power(1)) +
               CharElem::monomial(L, L->from_vector({-1, 3}));
  CharElem sum(L);
  for (const auto& w : W) {
    CharElem g = apply_weyl(w, f);
    EXPECT_EQ(g.terms().size(), f.terms().size());
    sum += g;
  }
  EXPECT_TRUE(is_invariant(sum));
  EXPECT_EQ(sum, symmetrize(f));
}

TEST(CharElemProperty, RingLaws) {
  auto L = lattice("B2");
  std::vector<CharElem> xs;
  for (const auto& p : L->dominant_up_to_height(2)) xs.push_back(m_lambda(L, p).scaled(FieldElem::q_power(L->height(p))));
  for (const auto& a : xs)
    for (const auto& b : xs) {
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE(is_invariant(a * b));
      for (const auto& c : xs) EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}
