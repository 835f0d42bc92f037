// Exact coefficient field Q(q^{1/D}).
//
// A FieldElem is a quotient of Laurent polynomials in u = q^{1/D}, where D
// (the scale) is carried per element and kept minimal.  Binary operations
// lift both operands to the lcm of their scales.  Elements are always stored
// reduced, so structural equality is field equality.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "qsp/detail/zpoly.hpp"
#include "qsp/errors.hpp"

namespace qsp {

using Rational = mpq_class;
using Integer = mpz_class;

class FieldElem {
 public:
  FieldElem();  // zero
  FieldElem(long v);  // NOLINT(google-explicit-constructor)
  FieldElem(const Rational& v);  // NOLINT(google-explicit-constructor)

  // q^e for any rational e.
  static FieldElem q_power(const Rational& e);
  // num / den with num, den in Z[u, 1/u], u = q^{1/scale}.
  static FieldElem from_parts(long scale, detail::ZPoly num, detail::ZPoly den);

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem pow(long k) const;
  FieldElem inverse() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_one(); }
  // True when the element is exactly q^e with coefficient 1.
  std::optional<Rational> q_monomial_exponent() const;

  long scale() const { return scale_; }
  const detail::ZPoly& numerator() const { return num_; }
  const detail::ZPoly& denominator() const { return den_; }

  // Evaluation at a rational q needs an exact scale-th root of q.
  Rational eval_exact(const Rational& q) const;
  long double eval(long double q) const;

  // Canonical text, exponents descending, e.g. "q^{3/2} - 2q + 1".
  std::string to_string() const;
  std::size_t hash() const;

 private:
  void normalize(bool coprime);
  void lift_to(long scale);

  long scale_ = 1;
  detail::ZPoly num_;
  detail::ZPoly den_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

// Accepts products of integers and q-powers: "q^4", "2*q^{1/2}", "-q^(3/2)*q".
FieldElem parse_field_elem(const std::string& text);

// A fixed fractional-power context: only q^r with r in (1/D)Z is admitted.
class QContext {
 public:
  explicit QContext(long D);
  long D() const { return D_; }
  FieldElem q_power(const Rational& r) const;

 private:
  long D_;
};

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

}  // namespace qsp
