// The group ring of the restricted weight lattice P(2 Sigma).
//
// Lattice points are integer coordinates in the basis 2 omega'_i of
// fundamental weights of 2 Sigma, so c_j = <x, alpha~_j^vee> / 2.  In these
// coordinates s_i(c)_j = c_j - c_i A_ij, 2 alpha~_i has coordinates equal to
// row i of the Cartan matrix, and rho of 2 Sigma is (1, ..., 1).
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qsp/field.hpp"
#include "qsp/rootsys.hpp"

namespace qsp {

constexpr int kMaxRank = 8;
using LatticePoint = std::array<std::int32_t, kMaxRank>;

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int32_t v : p) h = (h ^ static_cast<std::uint32_t>(v)) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

class WeightLattice {
 public:
  explicit WeightLattice(RootDatum sigma);

  const RootDatum& datum() const { return sigma_; }
  int rank() const { return sigma_.rank(); }

  // Throws DomainError when x is not in P(2 Sigma).
  LatticePoint from_root_coords(const Weight& x) const;
  Weight to_root_coords(const LatticePoint& p) const;
  LatticePoint from_vector(const std::vector<long>& c) const;

  LatticePoint reflect(int i, const LatticePoint& p) const;
  // w acts through its fundamental-weight matrix.
  LatticePoint apply(const WeylElement& w, const LatticePoint& p) const;
  // 2 alpha for the positive root of the given index.
  LatticePoint doubled_root(int positive_index) const;
  LatticePoint rho() const;

  // (x, y) for lattice points, in the Gram form of Sigma.
  Rational inner(const LatticePoint& x, const LatticePoint& y) const;
  // Smallest D with every (x, y) in (1/D) Z.
  long q_scale() const { return q_scale_; }

  bool is_dominant(const LatticePoint& p) const;
  // lambda - mu in N{alpha~_i}.
  bool leq(const LatticePoint& mu, const LatticePoint& lambda) const;
  std::vector<LatticePoint> orbit(const LatticePoint& p) const;
  // Dominant points below lambda, lambda first, deeper points later.
  std::vector<LatticePoint> lower_ideal(const LatticePoint& lambda) const;
  // Sum of coordinates.
  long height(const LatticePoint& p) const;
  std::vector<LatticePoint> dominant_up_to_height(long h) const;

  std::string to_string(const LatticePoint& p) const;

 private:
  RootDatum sigma_;
  RatMatrix fund_gram_;  // (2 omega'_i, 2 omega'_j)
  long q_scale_ = 1;
};

using LatticePtr = std::shared_ptr<const WeightLattice>;

class CharElem {
 public:
  using Terms = std::map<LatticePoint, FieldElem>;

  CharElem() = default;
  explicit CharElem(LatticePtr lattice) : lattice_(std::move(lattice)) {}
  static CharElem monomial(LatticePtr lattice, const LatticePoint& p, const FieldElem& c = FieldElem(1L));

  const LatticePtr& lattice() const { return lattice_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coefficient(const LatticePoint& p) const;
  void add_term(const LatticePoint& p, const FieldElem& c);

  CharElem& operator+=(const CharElem& o);
  CharElem& operator-=(const CharElem& o);
  CharElem operator*(const CharElem& o) const;
  CharElem scaled(const FieldElem& c) const;
  friend CharElem operator+(CharElem a, const CharElem& b) { return a += b; }
  friend CharElem operator-(CharElem a, const CharElem& b) { return a -= b; }
  bool operator==(const CharElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const CharElem& o) const { return !(*this == o); }

  // The g with g * h == *this; DivisibilityError when none exists.
  CharElem exact_div(const CharElem& h) const;

  // "{(0, 0): 1, (1, 0): q^2}" with points in lexicographic order.
  std::string render() const;

 private:
  LatticePtr lattice_;
  Terms terms_;
};

// Orbit sum of z^lambda, each term with coefficient 1.
CharElem m_lambda(const LatticePtr& lattice, const LatticePoint& lambda);
// z^gamma -> q^{(beta, gamma)} z^gamma.
CharElem t_shift(const LatticePoint& beta, const CharElem& f);
CharElem apply_weyl(const WeylElement& w, const CharElem& f);
// Sum over all of W of w . f.
CharElem symmetrize(const CharElem& f, std::size_t cap = kDefaultWeylCap);
bool is_invariant(const CharElem& f);

}  // namespace qsp
