#include "qsp/restrict.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qsp {

namespace embedded {
extern const std::string_view fixture_text;
}

namespace {

RatMatrix identity(std::size_t n) {
  RatMatrix m(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, RatVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RatMatrix transpose(const RatMatrix& a) {
  RatMatrix t(a.empty() ? 0 : a[0].size(), RatVec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Weight mat_apply(const RatMatrix& m, const Weight& x) {
  Weight y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0) y[i] += m[i][j] * x[j];
  return y;
}

bool is_zero(const Weight& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
}

bool column_is_unit(const RatMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// The literal table formula can omit the -alpha_j term on a column whose
// other entries all lie on fixed roots; restoring it is the only correction.
bool correct_theta(RatMatrix& theta, std::string& what) {
  const std::size_t n = theta.size();
  std::vector<bool> fixed(n);
  for (std::size_t j = 0; j < n; ++j) fixed[j] = column_is_unit(theta, j);
  bool changed = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (fixed[j] || theta[j][j] != 0) continue;
    bool on_fixed = true;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j && theta[i][j] != 0 && !fixed[i]) on_fixed = false;
    if (!on_fixed) continue;
    theta[j][j] = -1;
    what += (what.empty() ? "" : "; ") + std::string("added -alpha_") + std::to_string(j + 1) + " to Theta(alpha_" +
            std::to_string(j + 1) + ")";
    changed = true;
  }
  return changed;
}

[[noreturn]] void violation(const SymmetricPairSpec& spec, const std::string& what) {
  throw InvariantViolation(spec.label() + ": " + what);
}

}  // namespace

Weight RestrictedRootSystem::to_ambient(const Weight& c) const {
  Weight x(simple_restricted.empty() ? 0 : simple_restricted[0].size(), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += c[k] * simple_restricted[k][i];
  return x;
}

int RestrictedRootSystem::sigma_index(int label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return static_cast<int>(k);
  return -1;
}

Weight SymmetricPair::theta_apply(const Weight& x) const { return mat_apply(theta, x); }

Weight SymmetricPair::restrict_weight(const Weight& x) const {
  Weight t = theta_apply(x);
  for (std::size_t i = 0; i < x.size(); ++i) t[i] = (x[i] - t[i]) / 2;
  return t;
}

long SymmetricPair::multiplicity(const Weight& r) const {
  long count = 0;
  for (int k = 0; k < static_cast<int>(ambient.positive_roots().size()); ++k) {
    Weight b = ambient.root(k);
    Weight rb = restrict_weight(b);
    if (rb == r) ++count;
    for (auto& v : rb) v = -v;
    if (rb == r) ++count;
  }
  if (count == 0) throw DomainError(spec.label() + ": " + weight_to_string(r) + " is not a restricted root");
  return count;
}

SymmetricPair build_pair(const SymmetricPairSpec& spec, Normalization norm, const AppendixData& data) {
  SymmetricPair P;
  P.spec = spec;
  P.bound = data.bind(spec);
  P.normalization = norm;
  P.ambient = RootDatum::build(P.bound.ambient, norm);
  const int n = P.ambient.rank();
  const RootDatum& A = P.ambient;

  P.theta_literal = P.bound.theta_literal;
  P.theta = P.theta_literal;
  const RatMatrix id = identity(n);
  if (matmul(P.theta, P.theta) != id) {
    RatMatrix fixed = P.theta;
    std::string what;
    if (!correct_theta(fixed, what) || matmul(fixed, fixed) != id)
      violation(spec, "the tabulated Theta is not an involution and admits no correction");
    P.theta = fixed;
    P.theta_corrected = true;
    P.correction = what;
  }
  if (matmul(matmul(transpose(P.theta), A.gram()), P.theta) != A.gram()) violation(spec, "Theta is not an isometry");
  for (int k = 0; k < static_cast<int>(A.positive_roots().size()); ++k) {
    Weight img = P.theta_apply(A.root(k));
    std::vector<int> c(n);
    bool integral = true;
    for (int i = 0; i < n; ++i) {
      if (img[i].get_den() != 1) integral = false;
      c[i] = static_cast<int>(img[i].get_num().get_si());
    }
    if (!integral || !A.is_root(c)) violation(spec, "Theta does not permute the roots");
  }

  std::vector<bool> fixed(n);
  for (int j = 0; j < n; ++j) {
    fixed[j] = column_is_unit(P.theta, j);
    if (fixed[j]) P.pi_theta.push_back(j + 1);
  }
  P.p_perm.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (fixed[i]) {
      P.p_perm[i] = i + 1;
      continue;
    }
    int target = -1;
    for (int k = 0; k < n; ++k) {
      Rational v = -P.theta[k][i];
      if (fixed[k]) {
        if (v < 0 || v.get_den() != 1) violation(spec, "-Theta(alpha_" + std::to_string(i + 1) + ") leaves the cone");
      } else if (v == 1 && target < 0) {
        target = k;
      } else if (v != 0) {
        violation(spec, "-Theta(alpha_" + std::to_string(i + 1) + ") is not alpha_p(i) plus fixed roots");
      }
    }
    if (target < 0) violation(spec, "no p(" + std::to_string(i + 1) + ")");
    P.p_perm[i] = target + 1;
  }
  for (int i = 0; i < n; ++i)
    if (P.p_perm[P.p_perm[i] - 1] != i + 1) violation(spec, "p is not an involution");
  for (int i = 0; i < n; ++i)
    if (!fixed[i] && i + 1 <= P.p_perm[i]) P.pi_star.push_back(i + 1);

  RestrictedRootSystem& S = P.sigma;
  S.labels = P.pi_star;
  const int m = static_cast<int>(S.labels.size());
  if (m == 0) violation(spec, "Theta fixes every simple root");
  for (int l : S.labels) S.simple_restricted.push_back(P.restrict_weight(A.simple_root(l - 1)));
  S.gram.assign(m, RatVec(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) S.gram[i][j] = A.inner(S.simple_restricted[i], S.simple_restricted[j]);
  try {
    S.datum = RootDatum::from_gram(S.gram);
  } catch (const InvalidSpec& e) {
    violation(spec, std::string("restricted Cartan matrix is not of finite type: ") + e.what());
  }
  S.type_label = S.datum.type_label();

  // rep[j]: Sigma index of the restriction of alpha_j (-1 when fixed).
  std::vector<int> rep(n, -1);
  for (int j = 0; j < n; ++j) {
    if (fixed[j]) continue;
    int l = std::min(j + 1, P.p_perm[j]);
    rep[j] = S.sigma_index(l);
    if (P.restrict_weight(A.simple_root(j)) != S.simple_restricted[rep[j]])
      violation(spec, "restriction of alpha_" + std::to_string(j + 1) + " differs from that of alpha_p(j)");
  }
  for (int j : P.pi_theta)
    if (!is_zero(P.restrict_weight(A.simple_root(j - 1)))) violation(spec, "a fixed root restricts to nonzero");

  std::map<std::vector<int>, long> counts;
  for (const auto& b : A.positive_roots()) {
    std::vector<int> c(m, 0);
    bool nonzero = false;
    for (int j = 0; j < n; ++j)
      if (rep[j] >= 0 && b[j] != 0) {
        c[rep[j]] += b[j];
        nonzero = true;
      }
    if (nonzero) ++counts[c];
  }
  for (const auto& [c, cnt] : counts) {
    std::vector<int> twice = c;
    for (int& v : twice) v *= 2;
    if (counts.count(twice)) violation(spec, "Sigma is not reduced");
  }
  if (counts.size() != S.datum.positive_roots().size()) violation(spec, "restricted roots do not form Sigma");
  for (const auto& r : S.datum.positive_roots()) {
    auto it = counts.find(r);
    if (it == counts.end()) violation(spec, "restricted roots do not form Sigma");
    S.mult_positive.push_back(it->second);
  }

  const Weight& rho = A.rho();
  for (int i = 0; i < m; ++i) {
    const Weight& at = S.simple_restricted[i];
    std::vector<int> unit(m, 0);
    unit[i] = 1;
    long mult = S.mult_positive[S.datum.positive_root_index(unit)];
    S.mult.push_back(mult);
    Rational formula = 2 * A.inner(rho, at) / A.inner(at, at);
    if (formula != mult)
      violation(spec, "mult(alpha~_" + std::to_string(S.labels[i]) + ") = " + std::to_string(mult) +
                          " but 2(rho,alpha~)/(alpha~,alpha~) = " + formula.get_str());
    const int l = S.labels[i];
    const Weight al = A.simple_root(l - 1);
    const Rational len = A.inner(al, al);
    if (len != A.inner(A.simple_root(P.p_perm[l - 1] - 1), A.simple_root(P.p_perm[l - 1] - 1)))
      violation(spec, "alpha_i and alpha_p(i) have different lengths");
    Rational cross = -A.inner(al, P.theta_apply(al));
    if (cross != 0 && cross != len) violation(spec, "(alpha_i, -Theta alpha_i) is neither 0 nor (alpha_i, alpha_i)");
    Rational norm_t = A.inner(at, at);
    S.a.push_back(FieldElem::q_power(2 * norm_t));
    Rational g_rho = len * A.inner(rho, at);
    Rational g_mult = Rational(mult) * norm_t * len / 2;
    if (g_rho != g_mult) violation(spec, "the two g formulas disagree");
    S.g.push_back(FieldElem::q_power(g_rho));
  }

  // Orbit representatives by descending reflections.
  for (const auto& r : S.datum.positive_roots()) {
    Weight x(r.begin(), r.end());
    while (true) {
      int simple = -1, nz = 0;
      for (int k = 0; k < m; ++k)
        if (x[k] != 0) {
          ++nz;
          simple = k;
        }
      if (nz == 1 && x[simple] == 1) break;
      int j = 0;
      while (j < m && S.datum.coroot_pairing(x, j) <= 0) ++j;
      if (j == m) violation(spec, "orbit descent failed");
      x = S.datum.reflect(j, x);
    }
    int k = 0;
    while (x[k] == 0) ++k;
    S.orbit_rep.push_back(k);
  }
  for (std::size_t k = 0; k < S.orbit_rep.size(); ++k) {
    int rk = S.orbit_rep[k];
    if (S.mult_positive[k] != S.mult[rk]) violation(spec, "mult is not W-invariant");
    S.a_positive.push_back(S.a[rk]);
    S.g_positive.push_back(S.g[rk]);
  }
  // Simple roots in one orbit must carry equal parameters.
  for (int i = 0; i < m; ++i) {
    Weight ei(m, 0);
    ei[i] = 1;
    for (const Weight& y : weyl_orbit(S.datum, ei)) {
      for (int j = 0; j < m; ++j) {
        Weight ej(m, 0);
        ej[j] = 1;
        if (y == ej && (S.a[i] != S.a[j] || S.g[i] != S.g[j] || S.mult[i] != S.mult[j]))
          violation(spec, "parameters are not W-invariant");
      }
    }
  }
  return P;
}

SymmetricPair build_pair(const SymmetricPairSpec& spec, const AppendixData& data) {
  SymmetricPair first = build_pair(spec, Normalization::ShortNorm2, data);
  auto reproduces = [](const SymmetricPair& P) {
    for (const auto& [label, value] : P.bound.a_values(P.ambient)) {
      int l = static_cast<int>(label);
      if (l < 1 || l > P.ambient.rank()) return false;
      int s = P.sigma.sigma_index(std::min(l, P.p_perm[l - 1]));
      if (s < 0 || P.sigma.a[s] != value) return false;
    }
    return true;
  };
  if (reproduces(first) || first.ambient.simply_laced()) return first;
  SymmetricPair second = build_pair(spec, Normalization::LongNorm2, data);
  if (reproduces(second)) return second;
  return first;
}

const char* special_kind_name(SpecialKind k) { return k == SpecialKind::Minuscule ? "minuscule" : "pseudominuscule"; }

bool is_minuscule_weight(const RootDatum& d, int j) {
  const Weight& w = d.fundamental_weights()[j];
  for (int k = 0; k < static_cast<int>(d.positive_roots().size()); ++k) {
    Weight a = d.root(k);
    Rational v = 2 * d.inner(w, a) / d.inner(a, a);
    if (v < 0 || v > 1) return false;
  }
  return dominant_lower_ideal(d, w, 1).size() == 1;
}

bool is_pseudominuscule_weight(const RootDatum& d, const Weight& beta) {
  if (!d.is_dominant(beta)) return false;
  std::vector<int> c(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i].get_den() != 1) return false;
    c[i] = static_cast<int>(beta[i].get_num().get_si());
  }
  if (!d.is_root(c)) return false;
  for (int k = 0; k < static_cast<int>(d.positive_roots().size()); ++k) {
    Weight a = d.root(k);
    if (a == beta) continue;
    Rational v = 2 * d.inner(beta, a) / d.inner(a, a);
    if (v < 0 || v > 1) return false;
  }
  auto ideal = dominant_lower_ideal(d, beta, 1);
  return ideal.size() == 2 && is_zero(ideal[1]);
}

std::vector<SpecialWeight> special_weights(const SymmetricPair& P) {
  const RootDatum& D = P.sigma.datum;
  const int m = D.rank();
  std::vector<SpecialWeight> out;
  auto find_lift = [&P](const Weight& amb) -> std::optional<int> {
    for (int k = 0; k < P.ambient.rank(); ++k)
      if (P.restrict_weight(P.ambient.fundamental_weights()[k]) == amb) return k + 1;
    return std::nullopt;
  };
  for (int j = 0; j < m; ++j) {
    if (!is_minuscule_weight(D, j)) continue;
    SpecialWeight s;
    s.kind = SpecialKind::Minuscule;
    s.sigma_index = j;
    s.label = P.sigma.labels[j];
    s.restricted = P.sigma.to_ambient(D.fundamental_weights()[j]);
    s.lift = find_lift(s.restricted);
    out.push_back(s);
  }
  if (!out.empty()) return out;
  std::vector<int> hs = D.highest_short_root();
  Weight beta(hs.begin(), hs.end());
  if (!is_pseudominuscule_weight(D, beta)) throw InvariantViolation(P.spec.label() + ": no special weight");
  for (int j = 0; j < m; ++j) {
    if (D.fundamental_weights()[j] != beta) continue;
    SpecialWeight s;
    s.kind = SpecialKind::Pseudominuscule;
    s.sigma_index = j;
    s.label = P.sigma.labels[j];
    s.restricted = P.sigma.to_ambient(beta);
    s.lift = find_lift(s.restricted);
    out.push_back(s);
  }
  if (out.empty()) throw InvariantViolation(P.spec.label() + ": pseudominuscule weight is not fundamental");
  return out;
}

const char* field_status_name(FieldStatus s) {
  switch (s) {
    case FieldStatus::Match:
      return "MATCH";
    case FieldStatus::Mismatch:
      return "MISMATCH";
    default:
      return "NOT_LISTED";
  }
}

std::vector<std::string> DiscrepancyReport::mismatches() const {
  std::vector<std::string> v;
  for (const auto& f : fields)
    if (f.status == FieldStatus::Mismatch) v.push_back(f.field);
  return v;
}

DiscrepancyReport reconcile_appendix(const SymmetricPair& P) {
  DiscrepancyReport R;
  R.pair = P.spec.label();
  R.normalization = normalization_name(P.normalization);
  const RestrictedRootSystem& S = P.sigma;
  const BoundRecord& B = P.bound;
  const int n = P.ambient.rank();

  {
    FieldReport f;
    f.field = "theta_involution";
    f.tabulated = P.theta_corrected ? "Theta^2 != id" : "Theta^2 = id";
    f.computed = "Theta^2 = id";
    f.status = P.theta_corrected ? FieldStatus::Mismatch : FieldStatus::Match;
    f.note = P.correction;
    R.fields.push_back(f);
  }
  {
    FieldReport f;
    f.field = "sigma_type";
    f.computed = S.type_label;
    f.tabulated = B.sigma_label;
    if (B.sigma_label.empty())
      f.status = FieldStatus::NotListed;
    else
      f.status = same_type_label(B.sigma_label, S.type_label) ? FieldStatus::Match : FieldStatus::Mismatch;
    R.fields.push_back(f);
  }
  {
    FieldReport f;
    f.field = "sigma_roots";
    std::vector<int> given(B.sigma_indices.begin(), B.sigma_indices.end());
    f.computed = join_ints(S.labels);
    f.tabulated = join_ints(given);
    std::vector<int> sorted = given;
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted == S.labels;
    if (ok && !B.sigma_label.empty() && same_type_label(B.sigma_label, S.type_label)) {
      const int m = S.rank();
      std::vector<std::vector<int>> a(m, std::vector<int>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          a[i][j] = S.datum.cartan()[S.sigma_index(given[i])][S.sigma_index(given[j])];
      std::vector<CartanType> types{parse_cartan_type(B.sigma_label)};
      if (S.datum.components().size() == 1) types.push_back(S.datum.components()[0]);
      bool labelled = false;
      for (const auto& t : types)
        if (t.rank == m && standard_cartan_matrix(t) == a) labelled = true;
      if (!labelled) {
        ok = false;
        f.note = "listed order is not a standard labelling";
      }
    }
    f.status = ok ? FieldStatus::Match : FieldStatus::Mismatch;
    R.fields.push_back(f);
  }

  auto value_fields = [&](const char* key, const std::map<long, FieldElem>& tab, const std::vector<FieldElem>& comp) {
    std::set<long> labels;
    for (const auto& kv : tab) labels.insert(kv.first);
    for (int l : S.labels) labels.insert(l);
    for (long l : labels) {
      FieldReport f;
      f.field = std::string(key) + "[" + std::to_string(l) + "]";
      int s = -1;
      if (l >= 1 && l <= n && P.p_perm[l - 1] != l) s = S.sigma_index(std::min<int>(l, P.p_perm[l - 1]));
      if (l >= 1 && l <= n && P.p_perm[l - 1] == l) s = S.sigma_index(static_cast<int>(l));
      f.computed = s >= 0 ? comp[s].to_string() : "none";
      auto it = tab.find(l);
      if (it == tab.end()) {
        f.status = FieldStatus::NotListed;
      } else {
        f.tabulated = it->second.to_string();
        f.status = (s >= 0 && comp[s] == it->second) ? FieldStatus::Match : FieldStatus::Mismatch;
        if (s < 0) f.note = "alpha_" + std::to_string(l) + " is fixed by Theta";
      }
      R.fields.push_back(f);
    }
  };
  value_fields("a", B.a_values(P.ambient), S.a);
  value_fields("g", B.g_values(P.ambient), S.g);

  std::vector<SpecialWeight> specials = special_weights(P);
  std::string computed_specials;
  for (const auto& s : specials) {
    if (!computed_specials.empty()) computed_specials += "; ";
    computed_specials += std::string(special_kind_name(s.kind)) + " w'[" + std::to_string(s.label) + "] lift=" +
                         (s.lift ? "w[" + std::to_string(*s.lift) + "]" : std::string("none"));
  }

  std::vector<MinusculeEntry> expected = B.special;
  if (B.special_mode == BoundRecord::Special::FromType) {
    // Special weights of one simple factor, lifted from the same index.
    CartanType t = B.ambient.front();
    RootDatum one = RootDatum::build({t}, Normalization::ShortNorm2);
    expected.clear();
    for (int j = 0; j < one.rank(); ++j)
      if (is_minuscule_weight(one, j)) expected.push_back({"minuscule", j + 1, j + 1});
    if (expected.empty()) {
      std::vector<int> hs = one.highest_short_root();
      Weight beta(hs.begin(), hs.end());
      for (int j = 0; j < one.rank(); ++j)
        if (one.fundamental_weights()[j] == beta) expected.push_back({"pseudo", j + 1, j + 1});
    }
  }
  if (B.special_mode == BoundRecord::Special::None) {
    FieldReport f;
    f.field = "minuscule";
    f.status = FieldStatus::NotListed;
    f.computed = computed_specials;
    f.tabulated = "none";
    R.fields.push_back(f);
  }
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const MinusculeEntry& e = expected[k];
    FieldReport f;
    f.field = "minuscule[" + std::to_string(k + 1) + "]";
    f.tabulated = e.kind + " w'[" + std::to_string(e.restricted) + "] lift=" +
                  (e.lift ? "w[" + std::to_string(*e.lift) + "]" : std::string("none"));
    f.computed = computed_specials;
    int s = S.sigma_index(static_cast<int>(e.restricted));
    bool ok = s >= 0;
    if (!ok) f.note = "alpha_" + std::to_string(e.restricted) + " is not in pi*";
    if (ok) {
      bool kind_ok = e.kind == "minuscule" ? is_minuscule_weight(S.datum, s)
                                           : is_pseudominuscule_weight(S.datum, S.datum.fundamental_weights()[s]);
      if (!kind_ok) {
        ok = false;
        f.note = "omega'_" + std::to_string(e.restricted) + " is not " + e.kind;
      }
    }
    if (ok && e.lift) {
      long l = *e.lift;
      if (l < 1 || l > n ||
          P.restrict_weight(P.ambient.fundamental_weights()[l - 1]) != S.to_ambient(S.datum.fundamental_weights()[s])) {
        ok = false;
        f.note = "omega_" + std::to_string(l) + " does not restrict to omega'_" + std::to_string(e.restricted);
      }
    }
    f.status = ok ? FieldStatus::Match : FieldStatus::Mismatch;
    R.fields.push_back(f);
  }
  return R;
}

std::vector<SymmetricPairSpec> desk_pairs() {
  std::vector<SymmetricPairSpec> v;
  auto add = [&v](std::string id, long n = 0, long r = 0, char type = 0) {
    SymmetricPairSpec s;
    s.case_id = std::move(id);
    s.n = n;
    s.r = r;
    s.type = type;
    v.push_back(s);
  };
  for (auto [t, n] : std::vector<std::pair<char, long>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'D', 4}, {'G', 2}})
    add("CaseI", n, 0, t);
  for (long n = 1; n <= 4; ++n) add("AI", n);
  for (long n : {3L, 5L}) add("AII", n);
  for (long n : {3L, 5L}) add("AIII2", n);
  for (long n = 2; n <= 4; ++n)
    for (long r = 2; r <= n; ++r) add("BI", n, r);
  for (long n = 2; n <= 4; ++n) add("BII", n);
  for (long n = 2; n <= 4; ++n) add("CI", n);
  add("CII2", 4);
  add("DI1", 4, 2);
  add("DI2", 4);
  add("DI3", 4);
  add("DII", 4);
  add("DIII1", 4);
  for (const char* e : {"EI", "EII", "EIV", "EVI", "FI", "G"}) add(e);
  return v;
}

std::vector<SymmetricPairSpec> reconcile_pairs() {
  std::vector<SymmetricPairSpec> v = desk_pairs();
  for (const char* e : {"EV", "EVII", "EVIII", "EIX"}) {
    SymmetricPairSpec s;
    s.case_id = e;
    v.push_back(s);
  }
  return v;
}

std::vector<std::string> builtin_reconcile_fixture() {
  std::vector<std::string> out;
  std::istringstream in{std::string(embedded::fixture_text)};
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string a, b;
    if (ls >> a >> b) out.push_back(a + " " + b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qsp
