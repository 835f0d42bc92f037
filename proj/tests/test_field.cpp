#include <gtest/gtest.h>

#include <random>

#include "qsp/field.hpp"

using qsp::FieldElem;
using qsp::Rational;

namespace {

FieldElem q(const Rational& e) { return FieldElem::q_power(e); }

// Random element built from small Laurent polynomials in q^{1/2} and q^{1/3}.
FieldElem random_elem(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-4, 4), den(1, 3);
  auto poly = [&] {
    FieldElem p;
    for (int t = 0; t < 3; ++t) p += FieldElem(static_cast<long>(coef(rng))) * q(Rational(ex(rng), den(rng)));
    return p;
  };
  FieldElem d = poly();
  while (d.is_zero()) d = poly();
  return poly() / d;
}

}  // namespace

TEST(FieldElem, CanonicalText) {
  EXPECT_EQ((q(2) + 1).to_string(), "q^2 + 1");
  EXPECT_EQ((q(6) + q(-4)).to_string(), "q^6 + q^{-4}");
  EXPECT_EQ(q(Rational(1, 2)).to_string(), "q^{1/2}");
  EXPECT_EQ(FieldElem(1L).to_string(), "1");
  EXPECT_EQ(FieldElem().to_string(), "0");
}

TEST(FieldElem, CancelsCommonFactors) {
  FieldElem x = (FieldElem(1L) - q(2)) / (FieldElem(1L) - q(1));
  EXPECT_TRUE(x.is_polynomial());
  EXPECT_EQ(x, q(1) + 1);
  EXPECT_EQ(x.to_string(), "q + 1");
}

TEST(FieldElem, ScaleIsMinimal) {
  FieldElem x = q(Rational(1, 2)) + q(Rational(1, 3));
  EXPECT_EQ(x.scale(), 6);
  FieldElem y = (q(Rational(1, 2)) + q(1)) - q(Rational(1, 2));
  EXPECT_EQ(y.scale(), 1);
  EXPECT_EQ(y, q(1));
}

TEST(FieldElem, MonomialExponent) {
  EXPECT_EQ(*q(Rational(3, 2)).q_monomial_exponent(), Rational(3, 2));
  EXPECT_FALSE((q(1) + 1).q_monomial_exponent().has_value());
  EXPECT_FALSE((FieldElem(2L) * q(1)).q_monomial_exponent().has_value());
}

TEST(FieldElem, Evaluation) {
  EXPECT_NEAR(static_cast<double>((q(2) + 1).eval(0.5L)), 1.25, 1e-15);
  EXPECT_EQ(q(Rational(1, 2)).eval_exact(Rational(1, 4)), Rational(1, 2));
  FieldElem r = (q(4) + 1) / (q(4) + q(2) + 1);
  EXPECT_EQ(r.eval_exact(Rational(1, 2)), Rational(17, 21));
}

TEST(FieldElem, DivisionByZeroThrows) {
  EXPECT_THROW(FieldElem(1L) / FieldElem(), qsp::DivisionByZero);
  EXPECT_THROW(FieldElem().inverse(), qsp::DivisionByZero);
}

TEST(FieldElem, ParsesMonomialProducts) {
  EXPECT_EQ(qsp::parse_field_elem("q^4"), q(4));
  EXPECT_EQ(qsp::parse_field_elem("2*q^{1/2}"), FieldElem(2L) * q(Rational(1, 2)));
  EXPECT_EQ(qsp::parse_field_elem("-q^(3/2)*q"), -q(Rational(5, 2)));
  EXPECT_EQ(qsp::parse_field_elem("1"), FieldElem(1L));
  EXPECT_THROW(qsp::parse_field_elem("q^"), qsp::ParseError);
  EXPECT_THROW(qsp::parse_field_elem("x^2"), qsp::ParseError);
}

TEST(FieldElemProperty, FieldAxioms) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    FieldElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    EXPECT_TRUE((x - x).is_zero());
    if (!y.is_zero()) {
      EXPECT_EQ((x / y) * y, x);
      EXPECT_TRUE((y * y.inverse()).is_one());
    }
    if (x == y) EXPECT_EQ(x.hash(), y.hash());
  }
}

TEST(FieldElemProperty, EqualValuesShareTextAndHash) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    FieldElem x = random_elem(rng), y = random_elem(rng);
    if (y.is_zero()) continue;
    FieldElem a = (x * y) / y, b = x;
    EXPECT_EQ(a.to_string(), b.to_string());
    EXPECT_EQ(a.hash(), b.hash());
  }
}

TEST(FieldElemProperty, PowMatchesRepeatedProduct) {
  FieldElem x = (q(1) + 2) / (q(Rational(1, 2)) - 1);
  FieldElem acc(1L);
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(x.pow(k), acc);
    EXPECT_EQ(x.pow(-k), acc.inverse());
    acc *= x;
  }
}
