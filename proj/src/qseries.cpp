#include "qsp/qseries.hpp"

#include <algorithm>
#include <functional>

namespace qsp {

long cone_height(const ConePoint& k) {
  long h = 0;
  for (auto v : k) h += v;
  return h;
}

namespace {

std::string cone_to_string(const ConePoint& k, int rank, int sign) {
  std::string s = sign < 0 ? "-(" : "+(";
  for (int i = 0; i < rank; ++i) s += (i ? ", " : "") + std::to_string(k[i]);
  return s + ")";
}

// All cone points of height <= order, by height then lexicographically.
std::vector<ConePoint> cone_points(int rank, int order) {
  std::vector<ConePoint> out;
  ConePoint p{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank) {
      out.push_back(p);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      p[i] = v;
      rec(i + 1, left - v);
    }
    p[i] = 0;
  };
  rec(0, order);
  std::stable_sort(out.begin(), out.end(),
                   [](const ConePoint& a, const ConePoint& b) { return cone_height(a) < cone_height(b); });
  return out;
}

TruncSeries truncate_to(const TruncSeries& s, int order) {
  TruncSeries r(s.rank(), std::min(order, s.order()), s.sign());
  for (const auto& [k, c] : s.terms()) r.add_term(k, c);
  return r;
}

bool cone_less(const ConePoint& a, const ConePoint& b) {
  long ha = cone_height(a), hb = cone_height(b);
  return ha != hb ? ha < hb : a < b;
}

ConePoint root_cone_point(const RootDatum& d, int k) {
  ConePoint c{};
  const auto& r = d.positive_roots()[k];
  for (int i = 0; i < d.rank(); ++i) c[i] = r[i];
  return c;
}

}  // namespace

TruncSeries::TruncSeries(int rank, int order, int sign) : rank_(rank), order_(order), sign_(sign) {
  if (rank < 1 || rank > kMaxRank) throw ShapeError("series rank out of range");
  if (order < 0) throw ShapeError("negative truncation order");
  if (sign != 1 && sign != -1) throw ShapeError("cone sign must be +1 or -1");
}

TruncSeries TruncSeries::one(int rank, int order, int sign) {
  TruncSeries s(rank, order, sign);
  s.add_term(ConePoint{}, FieldElem(1L));
  return s;
}

FieldElem TruncSeries::coefficient(const ConePoint& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? FieldElem() : it->second;
}

void TruncSeries::add_term(const ConePoint& k, const FieldElem& c) {
  if (c.is_zero() || cone_height(k) > order_) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (rank_ != o.rank_) throw ShapeError("series of different rank");
  if (sign_ != o.sign_) throw ShapeError("series in opposite cones");
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_compatible(o);
  TruncSeries r(rank_, std::min(order_, o.order_), sign_);
  for (const auto& [k, c] : terms_) {
    long hk = cone_height(k);
    if (hk > r.order_) continue;
    for (const auto& [k2, c2] : o.terms_) {
      if (hk + cone_height(k2) > r.order_) continue;
      ConePoint s;
      for (int i = 0; i < kMaxRank; ++i) s[i] = k[i] + k2[i];
      r.add_term(s, c * c2);
    }
  }
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_compatible(o);
  order_ = std::min(order_, o.order_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = cone_height(it->first) > order_ ? terms_.erase(it) : std::next(it);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  TruncSeries neg = o.scaled(FieldElem(-1L));
  return *this += neg;
}

TruncSeries TruncSeries::scaled(const FieldElem& c) const {
  TruncSeries r(rank_, order_, sign_);
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

TruncSeries TruncSeries::inverse() const {
  FieldElem c0 = coefficient(ConePoint{});
  if (c0.is_zero()) throw DivisionByZero("series with zero constant term is not invertible");
  FieldElem inv0 = c0.inverse();
  TruncSeries g(rank_, order_, sign_);
  g.terms_.emplace(ConePoint{}, inv0);
  // g_t = -c0^{-1} sum_{u != 0} f_u g_{t-u}, in increasing height.
  for (const ConePoint& t : cone_points(rank_, order_)) {
    if (cone_height(t) == 0) continue;
    FieldElem acc;
    for (const auto& [u, fu] : terms_) {
      if (cone_height(u) == 0) continue;
      ConePoint d;
      bool inside = true;
      for (int i = 0; i < kMaxRank && inside; ++i) {
        d[i] = t[i] - u[i];
        inside = d[i] >= 0;
      }
      if (!inside) continue;
      auto it = g.terms_.find(d);
      if (it != g.terms_.end()) acc += fu * it->second;
    }
    if (!acc.is_zero()) g.terms_.emplace(t, -(acc * inv0));
  }
  return g;
}

LatticePoint TruncSeries::lattice_point(const ConePoint& k, const WeightLattice& lattice) const {
  LatticePoint p{};
  const auto& a = lattice.datum().cartan();
  for (int i = 0; i < rank_; ++i)
    if (k[i] != 0)
      for (int j = 0; j < rank_; ++j) p[j] += sign_ * k[i] * a[i][j];
  return p;
}

CharElem TruncSeries::to_char(const LatticePtr& lattice) const {
  CharElem e(lattice);
  for (const auto& [k, c] : terms_) e.add_term(lattice_point(k, *lattice), c);
  return e;
}

TruncSeries TruncSeries::from_char(const CharElem& f, int order, int sign) {
  const auto& lattice = f.lattice();
  if (!lattice) throw ShapeError("element without a lattice");
  TruncSeries s(lattice->rank(), order, sign);
  for (const auto& [p, c] : f.terms()) {
    Weight x = lattice->to_root_coords(p);
    ConePoint k{};
    for (int i = 0; i < lattice->rank(); ++i) {
      Rational v = x[i] * sign / 2;
      if (v < 0 || v.get_den() != 1)
        throw DomainError("exponent " + lattice->to_string(p) + " is outside the cone");
      k[i] = static_cast<std::int32_t>(v.get_num().get_si());
    }
    s.add_term(k, c);
  }
  return s;
}

std::string TruncSeries::render() const {
  std::vector<std::pair<ConePoint, FieldElem>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return cone_less(a.first, b.first); });
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + cone_to_string(v[i].first, rank_, sign_) + ": " + v[i].second.to_string();
  return s + "}";
}

TruncSeries poch_inf_trunc(int rank, const ConePoint& x, const FieldElem& a, int order, int sign,
                           const FieldElem& c) {
  if (a.is_one()) throw PoleError("(x; a)_inf with a = 1");
  TruncSeries s(rank, order, sign);
  long hx = cone_height(x);
  if (hx <= 0) throw DomainError("Pochhammer variable must have positive height");
  FieldElem coef(1L), apow(1L);  // apow = a^j
  for (long j = 0; j * hx <= order; ++j) {
    ConePoint k;
    for (int i = 0; i < kMaxRank; ++i) k[i] = static_cast<std::int32_t>(x[i] * j);
    s.add_term(k, coef);
    // coef_{j+1} = coef_j * (-c a^j) / (1 - a^{j+1})
    apow *= a;
    coef = coef * (-(c * (apow / a))) / (FieldElem(1L) - apow);
  }
  return s;
}

TruncSeries poch_inf_recip_trunc(int rank, const ConePoint& x, const FieldElem& a, int order, int sign,
                                 const FieldElem& c) {
  if (a.is_one()) throw PoleError("(x; a)_inf with a = 1");
  TruncSeries s(rank, order, sign);
  long hx = cone_height(x);
  if (hx <= 0) throw DomainError("Pochhammer variable must have positive height");
  FieldElem coef(1L), apow(1L);
  for (long j = 0; j * hx <= order; ++j) {
    ConePoint k;
    for (int i = 0; i < kMaxRank; ++i) k[i] = static_cast<std::int32_t>(x[i] * j);
    s.add_term(k, coef);
    apow *= a;
    coef = coef * c / (FieldElem(1L) - apow);
  }
  return s;
}

TruncSeries build_p(const MacdonaldParams& params, int order, const std::vector<int>& root_order) {
  const int m = params.rank();
  TruncSeries p = TruncSeries::one(m, order, -1);
  for (int k : root_order) {
    ConePoint x = root_cone_point(params.sigma, k);
    p = p * poch_inf_trunc(m, x, params.a[k], order, -1, params.g[k]);
    p = p * poch_inf_recip_trunc(m, x, params.a[k], order, -1);
  }
  return p;
}

TruncSeries build_p(const MacdonaldParams& params, int order) {
  std::vector<int> idx(params.sigma.positive_roots().size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  return build_p(params, order, idx);
}

TruncSeries build_delta_plus(const MacdonaldParams& params, int order) {
  const int m = params.rank();
  TruncSeries d = TruncSeries::one(m, order, 1);
  for (std::size_t k = 0; k < params.sigma.positive_roots().size(); ++k) {
    ConePoint x = root_cone_point(params.sigma, static_cast<int>(k));
    d = d * poch_inf_trunc(m, x, params.a[k], order, 1);
    d = d * poch_inf_recip_trunc(m, x, params.a[k], order, 1, params.g[k]);
  }
  return d;
}

TruncSeries w_substitute(const WeylElement& w, const TruncSeries& s) {
  const int m = s.rank();
  if (static_cast<int>(w.root_matrix.size()) != m * m) throw ShapeError("Weyl element of the wrong rank");
  std::vector<bool> used(m, false);
  for (const auto& [k, c] : s.terms())
    for (int i = 0; i < m; ++i)
      if (k[i] != 0) used[i] = true;
  // Image of each used simple direction: +-e_j.
  std::vector<int> target(m, -1);
  int image_sign = 0;
  for (int i = 0; i < m; ++i) {
    if (!used[i]) continue;
    int nz = 0, j0 = -1, v0 = 0;
    for (int j = 0; j < m; ++j) {
      int v = w.root_matrix[j * m + i];
      if (v != 0) ++nz, j0 = j, v0 = v;
    }
    if (nz != 1 || (v0 != 1 && v0 != -1))
      throw DomainError("w does not map the support of the series into a single cone");
    if (image_sign != 0 && v0 != image_sign)
      throw DomainError("w splits the support of the series across both cones");
    image_sign = v0;
    target[i] = j0;
  }
  if (image_sign == 0) image_sign = 1;
  TruncSeries r(m, s.order(), s.sign() * image_sign);
  for (const auto& [k, c] : s.terms()) {
    ConePoint t{};
    for (int i = 0; i < m; ++i)
      if (k[i] != 0) t[target[i]] += k[i];
    r.add_term(t, c);
  }
  return r;
}

TruncSeries t_shift(const LatticePoint& beta, const TruncSeries& s, const WeightLattice& lattice) {
  TruncSeries r(s.rank(), s.order(), s.sign());
  for (const auto& [k, c] : s.terms()) r.add_term(k, c * FieldElem::q_power(lattice.inner(beta, s.lattice_point(k, lattice))));
  return r;
}

IdentityReport compare_series(const std::string& identity, const std::string& subject, const TruncSeries& lhs,
                              const TruncSeries& rhs) {
  IdentityReport rep;
  rep.identity = identity;
  rep.subject = subject;
  rep.order = std::min(lhs.order(), rhs.order());
  if (lhs.rank() != rhs.rank() || lhs.sign() != rhs.sign()) {
    rep.first_mismatch = Mismatch{"(cone)", lhs.sign() < 0 ? "negative" : "positive",
                                  rhs.sign() < 0 ? "negative" : "positive"};
    return rep;
  }
  std::vector<ConePoint> keys;
  for (const auto& t : lhs.terms()) keys.push_back(t.first);
  for (const auto& t : rhs.terms()) keys.push_back(t.first);
  std::sort(keys.begin(), keys.end(), cone_less);
  for (const auto& k : keys) {
    if (cone_height(k) > rep.order) break;
    FieldElem l = lhs.coefficient(k), r = rhs.coefficient(k);
    if (l != r) {
      rep.first_mismatch = Mismatch{cone_to_string(k, lhs.rank(), lhs.sign()), l.to_string(), r.to_string()};
      return rep;
    }
  }
  rep.pass = true;
  return rep;
}

std::vector<IdentityReport> verify_rank_one_identities(const MacdonaldParams& params, int order,
                                                       const FieldElem& g_factor) {
  if (params.rank() != 1) throw ShapeError("rank-one identities need a rank-one system");
  const FieldElem a = params.a[0], g = params.g[0];
  const Rational ge = params.g_exponent(0);
  const FieldElem G = FieldElem::q_power(ge / 2);  // q_i^{(rho, alpha~)}
  ConePoint x1{};
  x1[0] = 1;
  const int inner_order = order + 1;

  TruncSeries p = poch_inf_trunc(1, x1, a, inner_order, -1, g * g_factor) *
                  poch_inf_recip_trunc(1, x1, a, inner_order, -1);
  TruncSeries pinv = p.inverse();
  TruncSeries sigma_pinv(1, inner_order, -1);  // x^k -> a^k x^k
  for (const auto& [k, c] : pinv.terms()) sigma_pinv.add_term(k, c * a.pow(k[0]));
  TruncSeries B = sigma_pinv * p;

  TruncSeries one_minus_x = TruncSeries::one(1, inner_order, -1);
  one_minus_x.add_term(x1, FieldElem(-1L));
  TruncSeries one_minus_gx = TruncSeries::one(1, inner_order, -1);
  one_minus_gx.add_term(x1, -g);

  std::vector<IdentityReport> out;
  const std::string who = params.label;
  out.push_back(compare_series("conjugation", who, truncate_to(B, order),
                               truncate_to(one_minus_gx * one_minus_x.inverse(), order)));

  // Two-term formula, numerators over the common denominator 1 - x.
  TruncSeries Bx = B * one_minus_x;
  TruncSeries lhs_minus(1, order, -1);
  lhs_minus.add_term(ConePoint{}, G * g.inverse());
  lhs_minus.add_term(x1, -G);
  TruncSeries rhs_minus(1, order, -1);
  for (const auto& [k, c] : Bx.terms()) rhs_minus.add_term(k, c * G.inverse());
  out.push_back(compare_series("radial_component_inverse_shift", who, lhs_minus, rhs_minus));

  // s(B (1 - x)) needs B (1 - x) to be the polynomial c0 + c1 x.
  TruncSeries lhs_plus(1, order, -1);
  lhs_plus.add_term(ConePoint{}, G.inverse() * g);
  lhs_plus.add_term(x1, -G.inverse());
  TruncSeries rhs_plus(1, order, -1);
  bool finite = true;
  for (const auto& [k, c] : Bx.terms())
    if (k[0] >= 2 && k[0] <= order) finite = false;
  if (finite) {
    // -x (c0 + c1 x^{-1}) = -c1 - c0 x
    rhs_plus.add_term(ConePoint{}, -(G.inverse() * Bx.coefficient(x1)));
    rhs_plus.add_term(x1, -(G.inverse() * Bx.coefficient(ConePoint{})));
    out.push_back(compare_series("radial_component_shift", who, lhs_plus, rhs_plus));
  } else {
    IdentityReport rep;
    rep.identity = "radial_component_shift";
    rep.subject = who;
    rep.order = order;
    for (const auto& [k, c] : Bx.terms())
      if (k[0] >= 2) {
        rep.first_mismatch = Mismatch{cone_to_string(k, 1, -1), "0", c.to_string()};
        break;
      }
    out.push_back(rep);
  }
  return out;
}

IdentityReport verify_bridge(const MacdonaldParams& params, int order) {
  auto elements = weyl_elements(params.sigma);
  const WeylElement* w0 = &elements.front();
  for (const auto& w : elements)
    if (w.length > w0->length) w0 = &w;
  TruncSeries lhs = w_substitute(*w0, build_p(params, order).inverse());
  return compare_series("bridge", params.label, lhs, build_delta_plus(params, order));
}

}  // namespace qsp
