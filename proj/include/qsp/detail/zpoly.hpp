// Dense Laurent polynomials in one variable with integer coefficients.
// Backing store for FieldElem numerators and denominators.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace qsp::detail {

struct ZPoly {
  long low = 0;                // exponent of c[0]
  std::vector<mpz_class> c;    // empty means zero; front and back nonzero

  bool is_zero() const { return c.empty(); }
  long high() const { return low + static_cast<long>(c.size()) - 1; }
  std::size_t length() const { return c.size(); }
  bool is_constant() const { return c.size() == 1 && low == 0; }
  bool is_one() const { return is_constant() && c[0] == 1; }
  const mpz_class& lead() const { return c.back(); }

  void trim();

  static ZPoly constant(const mpz_class& v);
  static ZPoly monomial(const mpz_class& v, long e);

  bool operator==(const ZPoly& o) const { return low == o.low && c == o.c; }
  bool operator!=(const ZPoly& o) const { return !(*this == o); }
};

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly neg(ZPoly a);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(ZPoly a, const mpz_class& k);
ZPoly shift(ZPoly a, long k);

// Positive gcd of the coefficients; zero for the zero polynomial.
mpz_class content(const ZPoly& a);
ZPoly divide_content(ZPoly a, const mpz_class& k);

// Exact quotient a / b in Z[u, 1/u]. Returns false when b does not divide a.
bool exact_quotient(const ZPoly& a, const ZPoly& b, ZPoly* q);

// Gcd over Q[u, 1/u], returned primitive with low == 0 and positive constant
// term. gcd(0, 0) is 1.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// gcd of the support exponents (0 for a constant at exponent 0).
long exponent_gcd(const ZPoly& a);
ZPoly compress(const ZPoly& a, long k);  // u^{e} -> u^{e/k}
ZPoly expand(const ZPoly& a, long k);    // u^{e} -> u^{e*k}

mpq_class eval(const ZPoly& a, const mpq_class& u);
long double eval(const ZPoly& a, long double u);

}  // namespace qsp::detail
