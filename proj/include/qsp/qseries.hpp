// Truncated power series in the cone variables x_i = z^{-2 alpha~_i} (or
// z^{+2 alpha~_i} for the positive cone), truncated by total height.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/charring.hpp"
#include "qsp/field.hpp"
#include "qsp/params.hpp"

namespace qsp {

// k with exponent sign * sum_i k_i 2 alpha~_i, all k_i >= 0.
using ConePoint = std::array<std::int32_t, kMaxRank>;

long cone_height(const ConePoint& k);

class TruncSeries {
 public:
  using Terms = std::map<ConePoint, FieldElem>;

  // sign = -1 is the cone of p, +1 the cone of Delta+.
  TruncSeries(int rank, int order, int sign = -1);
  static TruncSeries one(int rank, int order, int sign = -1);

  int rank() const { return rank_; }
  int order() const { return order_; }
  int sign() const { return sign_; }
  const Terms& terms() const { return terms_; }
  FieldElem coefficient(const ConePoint& k) const;
  // Terms above the order are dropped.
  void add_term(const ConePoint& k, const FieldElem& c);

  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries scaled(const FieldElem& c) const;
  // DivisionByZero when the constant term vanishes.
  TruncSeries inverse() const;
  bool operator==(const TruncSeries& o) const { return terms_ == o.terms_; }

  // Exponent of a cone point as a lattice point of P(2 Sigma).
  LatticePoint lattice_point(const ConePoint& k, const WeightLattice& lattice) const;
  CharElem to_char(const LatticePtr& lattice) const;
  // DomainError when some exponent is outside the cone.
  static TruncSeries from_char(const CharElem& f, int order, int sign);

  std::string render() const;

 private:
  void check_compatible(const TruncSeries& o) const;

  int rank_;
  int order_;
  int sign_;
  Terms terms_;
};

// (c x; a)_inf with x the cone monomial of k, coefficient of x^j
// (-1)^j a^{j(j-1)/2} c^j / (a; a)_j.
TruncSeries poch_inf_trunc(int rank, const ConePoint& x, const FieldElem& a, int order, int sign = -1,
                           const FieldElem& c = FieldElem(1L));
// 1 / (c x; a)_inf, coefficient of x^j equal to c^j / (a; a)_j.
TruncSeries poch_inf_recip_trunc(int rank, const ConePoint& x, const FieldElem& a, int order, int sign = -1,
                                 const FieldElem& c = FieldElem(1L));

// p = prod over positive roots of (g z^{-2 alpha}; a)_inf / (z^{-2 alpha}; a)_inf.
TruncSeries build_p(const MacdonaldParams& params, int order);
// The same product taken in the given root order.
TruncSeries build_p(const MacdonaldParams& params, int order, const std::vector<int>& root_order);
// Delta+ = prod of (z^{2 alpha}; a)_inf / (g z^{2 alpha}; a)_inf, positive cone.
TruncSeries build_delta_plus(const MacdonaldParams& params, int order);

// Applies w to the exponents.  w must send every simple direction in the
// support to plus or minus a simple direction, all with one sign; otherwise
// the image leaves the cone and DomainError is raised.
TruncSeries w_substitute(const WeylElement& w, const TruncSeries& s);
// z^nu -> q^{(beta, nu)} z^nu.
TruncSeries t_shift(const LatticePoint& beta, const TruncSeries& s, const WeightLattice& lattice);

struct Mismatch {
  std::string exponent;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string identity;
  std::string subject;
  int order = 0;
  bool pass = false;
  std::optional<Mismatch> first_mismatch;
};

// Coefficientwise comparison up to the smaller order; the first mismatch is
// the lowest one in (height, lexicographic) order.
IdentityReport compare_series(const std::string& identity, const std::string& subject, const TruncSeries& lhs,
                              const TruncSeries& rhs);

// Rank one.  Identity (i): with sigma scaling x^k by a^k, sigma(p^{-1}) p
// equals (1 - g x)/(1 - x).  Identity (ii): the two-term radial component,
// one report per shift direction.  g_factor perturbs the g used to build p.
std::vector<IdentityReport> verify_rank_one_identities(const MacdonaldParams& params, int order,
                                                       const FieldElem& g_factor = FieldElem(1L));

// w0 applied to p^{-1} against the independent expansion of Delta+.
IdentityReport verify_bridge(const MacdonaldParams& params, int order);

}  // namespace qsp
