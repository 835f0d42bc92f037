// Symmetric pairs: the involution Theta on the ambient roots, the restricted
// root system Sigma, multiplicities and the Macdonald parameters (a, g).
//
// Ambient indices are 1-based simple-root labels throughout the public
// interface; Sigma's own datum is indexed 0..rank-1 in the order of pi_star.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsp/appendix.hpp"
#include "qsp/field.hpp"
#include "qsp/rootsys.hpp"

namespace qsp {

struct RestrictedRootSystem {
  std::vector<int> labels;              // ambient label of each simple restricted root
  std::vector<Weight> simple_restricted;  // alpha~_i as ambient weights
  RatMatrix gram;
  RootDatum datum;  // Sigma, indexed like `labels`
  std::string type_label;
  std::vector<long> mult;          // per simple restricted root
  std::vector<long> mult_positive;  // per positive root of `datum`
  std::vector<FieldElem> a, g;      // per simple restricted root
  std::vector<FieldElem> a_positive, g_positive;
  // Index of the simple root of Sigma in the W-orbit of each positive root.
  std::vector<int> orbit_rep;

  int rank() const { return datum.rank(); }
  // Sigma coordinates -> ambient weight.
  Weight to_ambient(const Weight& sigma_coords) const;
  int sigma_index(int ambient_label) const;  // -1 if not in pi_star
};

struct SymmetricPair {
  SymmetricPairSpec spec;
  BoundRecord bound;
  Normalization normalization = Normalization::ShortNorm2;
  RootDatum ambient;
  RatMatrix theta;          // column j-1 is Theta(alpha_j)
  RatMatrix theta_literal;  // as tabulated
  bool theta_corrected = false;
  std::string correction;  // human-readable description when corrected
  std::vector<int> pi_theta;
  std::vector<int> pi_star;
  std::vector<int> p_perm;  // p_perm[i-1] = p(i); identity on pi_theta
  RestrictedRootSystem sigma;

  Weight theta_apply(const Weight& x) const;
  // (x - Theta x) / 2
  Weight restrict_weight(const Weight& x) const;
  // Number of ambient roots restricting to the given restricted root.
  long multiplicity(const Weight& restricted_root) const;
};

// Builds with the normalization that reproduces the tabulated a-values.
SymmetricPair build_pair(const SymmetricPairSpec& spec, const AppendixData& data = AppendixData::builtin());
SymmetricPair build_pair(const SymmetricPairSpec& spec, Normalization norm,
                         const AppendixData& data = AppendixData::builtin());

enum class SpecialKind { Minuscule, Pseudominuscule };
const char* special_kind_name(SpecialKind k);

struct SpecialWeight {
  SpecialKind kind = SpecialKind::Minuscule;
  int sigma_index = 0;  // fundamental weight omega'_j of Sigma
  int label = 0;        // ambient label of alpha~_j
  Weight restricted;    // ambient coordinates
  std::optional<int> lift;  // ambient fundamental weight restricting to it
};

// Minuscule fundamental weights of Sigma, read off from the ambient
// minuscule data and the restriction, or the
// pseudominuscule weight when Sigma has no minuscule weight.
std::vector<SpecialWeight> special_weights(const SymmetricPair& pair);

// Intrinsic tests on a root datum, in its own coordinates.
bool is_minuscule_weight(const RootDatum& d, int j);
bool is_pseudominuscule_weight(const RootDatum& d, const Weight& beta);

enum class FieldStatus { Match, Mismatch, NotListed };
const char* field_status_name(FieldStatus s);

struct FieldReport {
  std::string field;  // "theta_involution", "sigma_type", "a[3]", ...
  FieldStatus status = FieldStatus::Match;
  std::string computed;
  std::string tabulated;
  std::string note;
};

struct DiscrepancyReport {
  std::string pair;  // pair label
  std::string normalization;
  std::vector<FieldReport> fields;
  std::vector<std::string> mismatches() const;  // field names
};

DiscrepancyReport reconcile_appendix(const SymmetricPair& pair);

// Instantiations used by the structural and reconciliation suites.
std::vector<SymmetricPairSpec> desk_pairs();
// desk_pairs() plus the E7 and E8 pairs.
std::vector<SymmetricPairSpec> reconcile_pairs();

// Expected mismatch lines "LABEL FIELD" from the frozen fixture.
std::vector<std::string> builtin_reconcile_fixture();

}  // namespace qsp
