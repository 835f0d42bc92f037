// Macdonald difference operators on C[P(2 Sigma)]^W and the triangular
// eigen-solver for P_lambda(a, g).
//
// Lattice points are coordinates in the basis 2 omega'_i (see charring.hpp).
// Operators are applied exactly: every term of the W-sum is brought over
// the common denominator prod_{alpha > 0} (1 - z^{2 alpha}), the numerators
// are summed in Z[u, 1/u] with u = q^{1/D}, and the denominator is removed
// by exact division at the end.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qsp/charring.hpp"
#include "qsp/params.hpp"
#include "qsp/qseries.hpp"
#include "qsp/restrict.hpp"

namespace qsp {

constexpr std::size_t kDefaultSolverCap = 51840;

enum class OperatorKind { D, E };
const char* operator_kind_name(OperatorKind k);

struct RatioA {
  CharElem numerator;
  CharElem denominator;
};

struct OperatorF {
  LatticePoint beta{};
  OperatorKind kind = OperatorKind::D;
  std::vector<int> s_beta;  // positive roots with (beta, alpha) > 0
  std::vector<int> level;   // q^{(beta, 2 alpha)} = a_alpha^level, per positive root
  RatioA ratio;
};

struct ApplyOptions {
  unsigned workers = 1;
  std::uint64_t shuffle_seed = 0;  // 0 keeps the breadth-first order of W
};

struct PolyOptions {
  ApplyOptions apply;
  // Operator weights to use instead of the default set.
  std::optional<std::vector<LatticePoint>> operators;
  bool check_eigen = true;
  // Also require d_lambda to differ from d_mu for every other dominant mu in
  // the coset of lambda with height(mu) <= height(lambda), not only mu < lambda.
  bool spectral_separation = false;
};

struct PolyResult {
  LatticePoint lambda{};
  int rank = 0;
  // Dominant mu with nonzero coefficient, in lexicographic order.
  std::vector<std::pair<LatticePoint, FieldElem>> coefficients;
  std::vector<std::pair<LatticePoint, FieldElem>> eigenvalues;  // (beta, d_lambda(beta))
  std::vector<LatticePoint> operators;

  FieldElem coefficient(const LatticePoint& mu) const;
};

class MacdonaldSystem {
 public:
  explicit MacdonaldSystem(MacdonaldParams params, std::size_t weyl_cap = kDefaultSolverCap);

  const MacdonaldParams& params() const { return params_; }
  const LatticePtr& lattice() const { return lattice_; }
  const RootDatum& sigma() const { return params_.sigma; }
  // D with u = q^{1/D}.
  long u_scale() const { return D_; }
  // CapExceeded when |W| is above the cap.
  const std::vector<WeylElement>& weyl() const;
  const WeylElement& longest() const;

  // T_beta(Delta+) / Delta+ as a finite ratio; ShapeError when beta does not
  // have the minuscule or pseudominuscule exponent pattern.
  RatioA coefficient_ratio_A(const LatticePoint& beta) const;
  OperatorF make_operator(const LatticePoint& beta) const;
  // One D-operator, both minuscule D-operators for type D, or the
  // E-operator for E8, F4 and G2; one set per component.
  std::vector<OperatorF> operator_set() const;

  // f must be W-invariant with coefficients in Q(q^{1/D}).
  CharElem apply_operator_F(const OperatorF& op, const CharElem& f, const ApplyOptions& opt = {}) const;

  PolyResult macdonald_poly(const LatticePoint& lambda, const PolyOptions& opt = {}) const;
  CharElem expand(const PolyResult& r) const;

  // Alternant ratio for the root system 2 Sigma.
  CharElem weyl_character(const LatticePoint& lambda) const;

  // Constant term of f * conj(h) * Delta at numeric q in (0, 1).
  long double inner_product_numeric(const CharElem& f, const CharElem& h, long double q,
                                    long double tol = 1e-14L) const;
  // All pairwise inner products of fs on one quadrature grid.
  std::vector<std::vector<long double>> gram_numeric(const std::vector<CharElem>& fs, long double q,
                                                     long double tol = 1e-14L) const;

 private:
  CharElem apply_kernel(const OperatorF& op, const CharElem& f, const ApplyOptions& opt) const;
  // F m_mu, cached per (beta, mu).
  CharElem column(const OperatorF& op, const LatticePoint& mu, const ApplyOptions& opt) const;

  MacdonaldParams params_;
  LatticePtr lattice_;
  long D_ = 1;
  std::size_t cap_;
  mutable std::once_flag weyl_once_;
  mutable std::vector<WeylElement> weyl_;
  mutable std::string weyl_error_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<LatticePoint, LatticePoint>, CharElem> column_cache_;
};

// Free-function forms.
RatioA coefficient_ratio_A(const MacdonaldSystem& sys, const LatticePoint& beta);
CharElem apply_operator_F(const MacdonaldSystem& sys, const OperatorF& op, const CharElem& f,
                          const ApplyOptions& opt = {});
PolyResult macdonald_poly(const MacdonaldSystem& sys, const LatticePoint& lambda, const PolyOptions& opt = {});
CharElem weyl_character(const MacdonaldSystem& sys, const LatticePoint& lambda);
PolyResult spherical_function(const SymmetricPair& pair, const LatticePoint& lambda, const PolyOptions& opt = {});

// T_{w0 beta}(p^{-1}) p against the telescoped ratio, in both cones.
std::vector<IdentityReport> verify_operator_form(const MacdonaldSystem& sys, const LatticePoint& beta, int order);

}  // namespace qsp
