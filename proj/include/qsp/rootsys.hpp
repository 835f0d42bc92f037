// Finite root systems in the simple-root basis.
//
// Simple roots follow Bourbaki numbering: B_n has alpha_n short, C_n has
// alpha_n long, E_n attaches alpha_2 to alpha_4, F_4 has alpha_1, alpha_2
// long, G_2 has alpha_1 short.  Products are block diagonal.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qsp/field.hpp"

namespace qsp {

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;
using Weight = RatVec;  // coordinates in the simple-root basis

struct CartanType {
  char letter = 'A';
  int rank = 1;
  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
  bool operator==(const CartanType& o) const { return letter == o.letter && rank == o.rank; }
};

CartanType parse_cartan_type(const std::string& s);  // "B3", "G2"
// B2 ~ C2 and A3 ~ D3 compare equal.
bool same_type_label(const std::string& a, const std::string& b);
// Cartan matrix of the type in Bourbaki order, same convention as RootDatum.
std::vector<std::vector<int>> standard_cartan_matrix(const CartanType& t);

enum class Normalization { ShortNorm2, LongNorm2 };
const char* normalization_name(Normalization n);

RatMatrix rat_inverse(const RatMatrix& m);

class RootDatum {
 public:
  static RootDatum build(const std::vector<CartanType>& components, Normalization norm);
  // Arbitrary (symmetric, valid) Gram matrix; components are identified.
  static RootDatum from_gram(const RatMatrix& gram);

  int rank() const { return rank_; }
  const RatMatrix& gram() const { return gram_; }
  // cartan()[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<CartanType>& components() const { return components_; }
  // For each component, its local node indices in Bourbaki order.
  const std::vector<std::vector<int>>& component_nodes() const { return component_nodes_; }
  std::string type_label() const;
  bool simply_laced() const;

  // Positive roots, integral root coordinates, sorted by height then lex.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  int positive_root_index(const std::vector<int>& coords) const;  // -1 if absent
  bool is_root(const std::vector<int>& coords) const;
  Weight root(int index) const;
  Weight simple_root(int i) const;

  Rational inner(const Weight& x, const Weight& y) const;
  Rational coroot_pairing(const Weight& x, int i) const;  // <x, alpha_i^vee>
  Weight reflect(int i, Weight x) const;
  bool is_dominant(const Weight& x) const;
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
  const Weight& rho() const { return rho_; }
  // Word (application order) of the longest element.
  const std::vector<int>& w0_word() const { return w0_word_; }
  Weight apply_w0(Weight x) const;
  mpz_class weyl_order() const;
  // Highest short root (highest root when simply laced), dominant.
  std::vector<int> highest_short_root() const;

 private:
  void finish();

  int rank_ = 0;
  RatMatrix gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<CartanType> components_;
  std::vector<std::vector<int>> component_nodes_;
  std::vector<std::vector<int>> positive_;
  std::vector<Weight> fundamental_;
  Weight rho_;
  std::vector<int> w0_word_;
};

// A Weyl group element: integer matrices in the simple-root basis (column j
// is the image of alpha_j) and in the fundamental-weight basis.
struct WeylElement {
  std::vector<int> root_matrix;
  std::vector<int> weight_matrix;
  int length = 0;
  int sign() const { return (length % 2) ? -1 : 1; }
};

constexpr std::size_t kDefaultWeylCap = 1000000;

// Breadth-first enumeration; refuses when |W| exceeds the cap.
std::vector<WeylElement> weyl_elements(const RootDatum& d, std::size_t cap = kDefaultWeylCap);
Weight apply(const WeylElement& w, const Weight& x);

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& x);

// Membership of x in scale * P: every <x, alpha_j^vee> / scale is an integer.
bool in_weight_lattice(const RootDatum& d, const Weight& x, const Rational& scale);
bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda);
// Dominant mu in scale * P with lambda - mu in N{alpha_i}; lambda first, then
// by total depth and lexicographically.
std::vector<Weight> dominant_lower_ideal(const RootDatum& d, const Weight& lambda, const Rational& scale);

std::string weight_to_string(const Weight& x);

}  // namespace qsp
