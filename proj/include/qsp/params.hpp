// Macdonald parameters (a, g) on the positive roots of a reduced system.
#pragma once

#include <string>
#include <vector>

#include "qsp/field.hpp"
#include "qsp/restrict.hpp"
#include "qsp/rootsys.hpp"

namespace qsp {

struct MacdonaldParams {
  enum class Source { FromPair, Explicit };

  RootDatum sigma;
  std::vector<FieldElem> a, g;  // indexed like sigma.positive_roots()
  Source source = Source::Explicit;
  std::string label;

  static MacdonaldParams from_pair(const SymmetricPair& pair);
  // Values per positive root; validated.
  static MacdonaldParams from_positive(RootDatum sigma, std::vector<FieldElem> a, std::vector<FieldElem> g,
                                       Source source, std::string label);
  // Values per simple root, extended along W-orbits.
  static MacdonaldParams from_simple(RootDatum sigma, const std::vector<FieldElem>& a,
                                     const std::vector<FieldElem>& g, Source source, std::string label);
  // Sigma given by type; its Gram is read off the a-exponents.  A single a
  // is the value on short simple roots, a single g applies to every root.
  static MacdonaldParams explicit_params(const std::string& sigma_type, const std::vector<FieldElem>& a,
                                         const std::vector<FieldElem>& g);

  // a_alpha = q^{2(alpha, alpha)}, q-monomials, constant on W-orbits.
  void validate() const;

  MacdonaldParams with_g_one() const;
  MacdonaldParams with_g_equal_a() const;

  int rank() const { return sigma.rank(); }
  Rational a_exponent(int k) const;
  Rational g_exponent(int k) const;
  // lcm of the denominators of all a and g exponents.
  long exponent_scale() const;
};

// Index of the positive root equal to the simple root alpha_i.
int simple_positive_index(const RootDatum& d, int i);

}  // namespace qsp
