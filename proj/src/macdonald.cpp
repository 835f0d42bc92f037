#include "qsp/macdonald.hpp"

#include <algorithm>
#include <set>

#include "qsp/detail/kernel.hpp"

namespace qsp {

using detail::Binomial;
using detail::KernelPlan;
using detail::OperatorKernel;
using detail::UPoly;
using detail::ZMap;

const char* operator_kind_name(OperatorKind k) { return k == OperatorKind::D ? "D" : "E"; }

FieldElem PolyResult::coefficient(const LatticePoint& mu) const {
  for (const auto& [p, c] : coefficients)
    if (p == mu) return c;
  return FieldElem();
}

MacdonaldSystem::MacdonaldSystem(MacdonaldParams params, std::size_t weyl_cap)
    : params_(std::move(params)), cap_(weyl_cap) {
  params_.validate();
  lattice_ = std::make_shared<const WeightLattice>(params_.sigma);
  mpz_class l = lattice_->q_scale();
  mpz_class e = params_.exponent_scale();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_mpz_t());
  D_ = l.get_si();
}

const std::vector<WeylElement>& MacdonaldSystem::weyl() const {
  std::call_once(weyl_once_, [this] {
    try {
      weyl_ = weyl_elements(params_.sigma, cap_);
    } catch (const CapExceeded& e) {
      weyl_error_ = std::string(e.what()) + "; the operator sums over all of W and refuses above the cap";
    }
  });
  if (!weyl_error_.empty()) throw CapExceeded(weyl_error_);
  return weyl_;
}

const WeylElement& MacdonaldSystem::longest() const {
  const auto& W = weyl();
  const WeylElement* best = &W.front();
  for (const auto& w : W)
    if (w.length > best->length) best = &w;
  return *best;
}

namespace {

// Level k with q^{(beta, 2 alpha)} = a_alpha^k, per positive root.
std::vector<int> exponent_levels(const MacdonaldParams& P, const WeightLattice& L, const LatticePoint& beta) {
  std::vector<int> level;
  int top = 0;
  for (std::size_t k = 0; k < P.sigma.positive_roots().size(); ++k) {
    Rational pairing = L.inner(beta, L.doubled_root(static_cast<int>(k)));
    Rational ratio = pairing / P.a_exponent(static_cast<int>(k));
    if (ratio.get_den() != 1 || ratio < 0 || ratio > 2)
      throw ShapeError("beta = " + L.to_string(beta) + " fails the minuscule pattern at the root " +
                       weight_to_string(P.sigma.root(static_cast<int>(k))) + ": q^{(beta, 2 alpha)} = q^" +
                       rational_to_string(pairing) + " is not 1, a or a^2");
    int lv = static_cast<int>(ratio.get_num().get_si());
    if (lv == 2) ++top;
    level.push_back(lv);
  }
  if (top > 1)
    throw ShapeError("beta = " + L.to_string(beta) + " reaches a^2 on more than one root");
  return level;
}

CharElem binomial_elem(const LatticePtr& L, const LatticePoint& v, const FieldElem& c) {
  CharElem e = CharElem::monomial(L, LatticePoint{});
  e.add_term(v, -c);
  return e;
}

template <class T>
UPoly<T> to_upoly(const FieldElem& x, long D) {
  if (!x.is_polynomial()) throw InvariantViolation("kernel input is not a polynomial in u");
  if (D % x.scale() != 0) throw ContextError("coefficient needs u = q^{1/" + std::to_string(x.scale()) + "}");
  detail::ZPoly p = detail::expand(x.numerator(), D / x.scale());
  UPoly<T> r;
  r.low = static_cast<std::int32_t>(p.low);
  for (const auto& v : p.c) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      if (!v.fits_slong_p()) throw OverflowError("coefficient exceeds 64 bits");
      r.c.push_back(v.get_si());
    } else {
      r.c.push_back(v);
    }
  }
  r.trim();
  return r;
}

template <class T>
FieldElem from_upoly(const UPoly<T>& p, long D) {
  detail::ZPoly z;
  z.low = p.low;
  for (const auto& v : p.c) z.c.push_back(mpz_class(v));
  z.trim();
  return FieldElem::from_parts(D, std::move(z), detail::ZPoly::constant(1));
}

template <class T>
CharElem run_kernel(const KernelPlan& plan, const CharElem& f, long D, const LatticePtr& L, const ApplyOptions& opt) {
  ZMap<T> in;
  for (const auto& [x, c] : f.terms()) in[x] = to_upoly<T>(c, D);
  OperatorKernel<T> kernel(plan);
  ZMap<T> out = kernel.apply(in, opt.workers, opt.shuffle_seed);
  CharElem r(L);
  for (const auto& [x, c] : out) r.add_term(x, from_upoly(c, D));
  return r;
}

bool same_coset(const WeightLattice& L, const LatticePoint& a, const LatticePoint& b) {
  LatticePoint d{};
  for (int i = 0; i < L.rank(); ++i) d[i] = a[i] - b[i];
  for (const auto& v : L.to_root_coords(d))
    if (v.get_den() != 1 || v.get_num() % 2 != 0) return false;
  return true;
}

}  // namespace

RatioA MacdonaldSystem::coefficient_ratio_A(const LatticePoint& beta) const {
  std::vector<int> level = exponent_levels(params_, *lattice_, beta);
  RatioA r{CharElem::monomial(lattice_, LatticePoint{}), CharElem::monomial(lattice_, LatticePoint{})};
  for (std::size_t k = 0; k < level.size(); ++k) {
    LatticePoint v = lattice_->doubled_root(static_cast<int>(k));
    FieldElem aj(1L);
    for (int j = 0; j < level[k]; ++j) {
      r.numerator = r.numerator * binomial_elem(lattice_, v, params_.g[k] * aj);
      r.denominator = r.denominator * binomial_elem(lattice_, v, aj);
      aj *= params_.a[k];
    }
  }
  return r;
}

OperatorF MacdonaldSystem::make_operator(const LatticePoint& beta) const {
  // Refuse before expanding the ratio, which is as large as W for big systems.
  weyl();
  OperatorF op;
  op.beta = beta;
  op.level = exponent_levels(params_, *lattice_, beta);
  op.kind = std::count(op.level.begin(), op.level.end(), 2) ? OperatorKind::E : OperatorKind::D;
  for (std::size_t k = 0; k < op.level.size(); ++k)
    if (op.level[k] > 0) op.s_beta.push_back(static_cast<int>(k));
  op.ratio = coefficient_ratio_A(beta);
  return op;
}

std::vector<OperatorF> MacdonaldSystem::operator_set() const {
  const RootDatum& S = params_.sigma;
  std::vector<OperatorF> ops;
  for (std::size_t c = 0; c < S.components().size(); ++c) {
    const CartanType& t = S.components()[c];
    const auto& nodes = S.component_nodes()[c];
    auto unit = [](int j) {
      LatticePoint p{};
      p[j] = 1;
      return p;
    };
    if (t.letter == 'D' && t.rank >= 4) {
      ops.push_back(make_operator(unit(nodes[t.rank - 2])));
      ops.push_back(make_operator(unit(nodes[t.rank - 1])));
    } else if ((t.letter == 'E' && t.rank == 8) || t.letter == 'F' || t.letter == 'G') {
      std::set<int> in(nodes.begin(), nodes.end());
      int best = -1;
      Rational best_len;
      int best_height = -1;
      for (std::size_t k = 0; k < S.positive_roots().size(); ++k) {
        const auto& r = S.positive_roots()[k];
        bool inside = true;
        int h = 0;
        for (int i = 0; i < S.rank(); ++i) {
          if (r[i] != 0 && !in.count(i)) inside = false;
          h += r[i];
        }
        if (!inside) continue;
        Weight w = S.root(static_cast<int>(k));
        Rational len = S.inner(w, w);
        if (best < 0 || len < best_len || (len == best_len && h > best_height)) {
          best = static_cast<int>(k);
          best_len = len;
          best_height = h;
        }
      }
      ops.push_back(make_operator(lattice_->doubled_root(best)));
    } else {
      std::vector<int> sorted = nodes;
      std::sort(sorted.begin(), sorted.end());
      bool found = false;
      for (int j : sorted)
        if (is_minuscule_weight(S, j)) {
          ops.push_back(make_operator(unit(j)));
          found = true;
          break;
        }
      if (!found) throw InvariantViolation(t.label() + " has no minuscule weight");
    }
  }
  return ops;
}

CharElem MacdonaldSystem::apply_kernel(const OperatorF& op, const CharElem& f, const ApplyOptions& opt) const {
  const int n = lattice_->rank();
  KernelPlan plan;
  plan.rank = n;
  plan.beta = op.beta;
  plan.e_kind = op.kind == OperatorKind::E;
  plan.weyl = &weyl();
  for (int j = 0; j < n; ++j) {
    LatticePoint ej{};
    ej[j] = 1;
    Rational v = lattice_->inner(op.beta, ej) * D_;
    if (v.get_den() != 1) throw ContextError("(beta, 2 omega') outside (1/D)Z");
    plan.beta_pairing.push_back(v.get_num().get_si());
  }
  auto scaled = [this](const Rational& e) {
    Rational v = e * D_;
    if (v.get_den() != 1) throw ContextError("parameter exponent outside (1/D)Z");
    return static_cast<std::int32_t>(v.get_num().get_si());
  };
  int theta = -1;
  for (std::size_t k = 0; k < op.level.size(); ++k) {
    LatticePoint v = lattice_->doubled_root(static_cast<int>(k));
    plan.denominator.push_back({v, 0});
    const std::int32_t ge = scaled(params_.g_exponent(static_cast<int>(k)));
    const std::int32_t ae = scaled(params_.a_exponent(static_cast<int>(k)));
    if (op.level[k] == 0) {
      plan.numerator.push_back({v, 0});
    } else {
      for (int j = 0; j < op.level[k]; ++j) plan.numerator.push_back({v, ge + j * ae});
    }
    if (op.level[k] == 2) theta = static_cast<int>(k);
  }
  if (theta >= 0) {
    LatticePoint vt = lattice_->doubled_root(theta);
    const std::int32_t ae = scaled(params_.a_exponent(theta));
    for (const LatticePoint& gamma : lattice_->orbit(vt)) {
      plan.denominator.push_back({gamma, ae});
      if (gamma != vt) plan.numerator.push_back({gamma, ae});
    }
  }
  try {
    return run_kernel<std::int64_t>(plan, f, D_, lattice_, opt);
  } catch (const OverflowError&) {
    return run_kernel<mpz_class>(plan, f, D_, lattice_, opt);
  }
}

CharElem MacdonaldSystem::apply_operator_F(const OperatorF& op, const CharElem& f, const ApplyOptions& opt) const {
  if (!is_invariant(f)) throw DomainError("the operator is applied to W-invariant elements only");
  // Clear denominators so the kernel sees Laurent polynomials in u.
  FieldElem clear(1L);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [x, c] : f.terms()) {
      FieldElem t = c * clear;
      if (!t.is_polynomial()) {
        clear *= FieldElem::from_parts(t.scale(), t.denominator(), detail::ZPoly::constant(1));
        changed = true;
      }
    }
  }
  CharElem g = clear.is_one() ? f : f.scaled(clear);
  CharElem r = apply_kernel(op, g, opt);
  return clear.is_one() ? r : r.scaled(clear.inverse());
}

CharElem MacdonaldSystem::column(const OperatorF& op, const LatticePoint& mu, const ApplyOptions& opt) const {
  const auto key = std::make_pair(op.beta, mu);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = column_cache_.find(key);
    if (it != column_cache_.end()) return it->second;
  }
  CharElem col = apply_kernel(op, m_lambda(lattice_, mu), opt);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  column_cache_.emplace(key, col);
  return col;
}

PolyResult MacdonaldSystem::macdonald_poly(const LatticePoint& lambda, const PolyOptions& opt) const {
  if (!lattice_->is_dominant(lambda)) throw DomainError(lattice_->to_string(lambda) + " is not dominant");
  std::vector<OperatorF> ops;
  if (opt.operators) {
    for (const auto& b : *opt.operators) ops.push_back(make_operator(b));
  } else {
    ops = operator_set();
  }
  const std::vector<LatticePoint> ideal = lattice_->lower_ideal(lambda);
  const std::size_t n = ideal.size();
  std::map<LatticePoint, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[ideal[i]] = i;

  // M[o][nu][mu] = coefficient of m_nu in F_o m_mu.
  std::vector<std::vector<std::map<std::size_t, FieldElem>>> M(ops.size(), std::vector<std::map<std::size_t, FieldElem>>(n));
  for (std::size_t o = 0; o < ops.size(); ++o)
    for (std::size_t mu = 0; mu < n; ++mu) {
      const CharElem col = column(ops[o], ideal[mu], opt.apply);
      for (const auto& [x, c] : col.terms()) {
        if (!lattice_->is_dominant(x)) continue;
        if (!lattice_->leq(x, ideal[mu]))
          throw InvariantViolation("F m_mu leaves the lower ideal: " + lattice_->to_string(x) + " in F m_" +
                                   lattice_->to_string(ideal[mu]));
        M[o][pos.at(x)][mu] = c;
      }
    }
  auto diag = [&M](std::size_t o, std::size_t i) {
    auto it = M[o][i].find(i);
    return it == M[o][i].end() ? FieldElem() : it->second;
  };

  std::vector<FieldElem> c(n);
  c[0] = FieldElem(1L);
  for (std::size_t nu = 1; nu < n; ++nu) {
    int sep = -1;
    for (std::size_t o = 0; o < ops.size() && sep < 0; ++o)
      if (diag(o, 0) != diag(o, nu)) sep = static_cast<int>(o);
    auto rhs = [&](std::size_t o) {
      FieldElem s;
      for (const auto& [mu, v] : M[o][nu])
        if (mu < nu && !c[mu].is_zero()) s += c[mu] * v;
      return s;
    };
    if (sep < 0) {
      if (same_coset(*lattice_, lambda, ideal[nu])) {
        std::string betas;
        for (const auto& op : ops) betas += (betas.empty() ? "" : ", ") + lattice_->to_string(op.beta);
        throw CollisionError("mu = " + lattice_->to_string(ideal[nu]) + " shares every eigenvalue with lambda = " +
                             lattice_->to_string(lambda) + " for the operators " + betas);
      }
      for (std::size_t o = 0; o < ops.size(); ++o)
        if (!rhs(o).is_zero()) throw InvariantViolation("nonzero coefficient outside the coset of lambda");
      continue;
    }
    c[nu] = rhs(sep) / (diag(sep, 0) - diag(sep, nu));
  }

  if (opt.spectral_separation) {
    for (const auto& mu : lattice_->dominant_up_to_height(lattice_->height(lambda))) {
      if (mu == lambda || !same_coset(*lattice_, lambda, mu)) continue;
      bool separated = false;
      for (std::size_t o = 0; o < ops.size() && !separated; ++o)
        separated = column(ops[o], mu, opt.apply).coefficient(mu) != diag(o, 0);
      if (!separated) {
        std::string betas;
        for (const auto& op : ops) betas += (betas.empty() ? "" : ", ") + lattice_->to_string(op.beta);
        throw CollisionError("mu = " + lattice_->to_string(mu) + " shares every eigenvalue with lambda = " +
                             lattice_->to_string(lambda) + " for the operators " + betas);
      }
    }
  }

  PolyResult r;
  r.lambda = lambda;
  r.rank = lattice_->rank();
  for (std::size_t i = 0; i < n; ++i)
    if (!c[i].is_zero()) r.coefficients.emplace_back(ideal[i], c[i]);
  std::sort(r.coefficients.begin(), r.coefficients.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t o = 0; o < ops.size(); ++o) {
    r.eigenvalues.emplace_back(ops[o].beta, diag(o, 0));
    r.operators.push_back(ops[o].beta);
  }

  if (opt.check_eigen) {
    CharElem P = expand(r);
    for (std::size_t o = 0; o < ops.size(); ++o) {
      CharElem lhs = apply_operator_F(ops[o], P, opt.apply);
      if (lhs != P.scaled(diag(o, 0)))
        throw InvariantViolation("F_beta P_lambda != d_lambda P_lambda for beta = " + lattice_->to_string(ops[o].beta));
    }
  }
  return r;
}

CharElem MacdonaldSystem::expand(const PolyResult& r) const {
  CharElem P(lattice_);
  for (const auto& [mu, c] : r.coefficients) P += m_lambda(lattice_, mu).scaled(c);
  return P;
}

CharElem MacdonaldSystem::weyl_character(const LatticePoint& lambda) const {
  if (!lattice_->is_dominant(lambda)) throw DomainError(lattice_->to_string(lambda) + " is not dominant");
  LatticePoint rho = lattice_->rho(), shifted = lambda;
  for (int i = 0; i < lattice_->rank(); ++i) shifted[i] += rho[i];
  CharElem num(lattice_), den(lattice_);
  for (const auto& w : weyl()) {
    FieldElem s(static_cast<long>(w.sign()));
    num.add_term(lattice_->apply(w, shifted), s);
    den.add_term(lattice_->apply(w, rho), s);
  }
  return num.exact_div(den);
}

RatioA coefficient_ratio_A(const MacdonaldSystem& sys, const LatticePoint& beta) {
  return sys.coefficient_ratio_A(beta);
}

CharElem apply_operator_F(const MacdonaldSystem& sys, const OperatorF& op, const CharElem& f, const ApplyOptions& opt) {
  return sys.apply_operator_F(op, f, opt);
}

PolyResult macdonald_poly(const MacdonaldSystem& sys, const LatticePoint& lambda, const PolyOptions& opt) {
  return sys.macdonald_poly(lambda, opt);
}

CharElem weyl_character(const MacdonaldSystem& sys, const LatticePoint& lambda) { return sys.weyl_character(lambda); }

PolyResult spherical_function(const SymmetricPair& pair, const LatticePoint& lambda, const PolyOptions& opt) {
  MacdonaldSystem sys(MacdonaldParams::from_pair(pair));
  return sys.macdonald_poly(lambda, opt);
}

std::vector<IdentityReport> verify_operator_form(const MacdonaldSystem& sys, const LatticePoint& beta, int order) {
  const auto& L = sys.lattice();
  const WeylElement& w0 = sys.longest();
  LatticePoint gamma = L->apply(w0, beta);
  TruncSeries p = build_p(sys.params(), order);
  TruncSeries conj = t_shift(gamma, p.inverse(), *L) * p;
  RatioA ratio = sys.coefficient_ratio_A(beta);
  const std::string who = sys.params().label + " beta=" + L->to_string(beta);

  TruncSeries pos = TruncSeries::from_char(ratio.numerator, order, 1) *
                    TruncSeries::from_char(ratio.denominator, order, 1).inverse();
  std::vector<IdentityReport> out;
  out.push_back(compare_series("operator_form_positive", who, w_substitute(w0, conj), pos));

  TruncSeries neg = TruncSeries::from_char(apply_weyl(w0, ratio.numerator), order, -1) *
                    TruncSeries::from_char(apply_weyl(w0, ratio.denominator), order, -1).inverse();
  out.push_back(compare_series("operator_form_negative", who, conj, neg));
  return out;
}

}  // namespace qsp
