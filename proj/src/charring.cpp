#include "qsp/charring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace qsp {

WeightLattice::WeightLattice(RootDatum sigma) : sigma_(std::move(sigma)) {
  const int n = sigma_.rank();
  if (n > kMaxRank) throw InvalidSpec("restricted rank above " + std::to_string(kMaxRank));
  fund_gram_.assign(n, RatVec(n, 0));
  mpz_class lcm = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      fund_gram_[i][j] = 4 * sigma_.inner(sigma_.fundamental_weights()[i], sigma_.fundamental_weights()[j]);
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), fund_gram_[i][j].get_den_mpz_t());
    }
  q_scale_ = lcm.get_si();
}

LatticePoint WeightLattice::from_root_coords(const Weight& x) const {
  LatticePoint p{};
  for (int j = 0; j < rank(); ++j) {
    Rational c = sigma_.coroot_pairing(x, j) / 2;
    if (c.get_den() != 1) throw DomainError(weight_to_string(x) + " is not in P(2 Sigma)");
    p[j] = static_cast<std::int32_t>(c.get_num().get_si());
  }
  return p;
}

Weight WeightLattice::to_root_coords(const LatticePoint& p) const {
  Weight x(rank(), 0);
  for (int j = 0; j < rank(); ++j)
    if (p[j] != 0)
      for (int i = 0; i < rank(); ++i) x[i] += 2 * p[j] * sigma_.fundamental_weights()[j][i];
  return x;
}

LatticePoint WeightLattice::from_vector(const std::vector<long>& c) const {
  if (static_cast<int>(c.size()) != rank())
    throw ShapeError("expected " + std::to_string(rank()) + " lattice coordinates, got " + std::to_string(c.size()));
  LatticePoint p{};
  for (int j = 0; j < rank(); ++j) p[j] = static_cast<std::int32_t>(c[j]);
  return p;
}

LatticePoint WeightLattice::reflect(int i, const LatticePoint& p) const {
  LatticePoint r = p;
  const auto& a = sigma_.cartan();
  for (int j = 0; j < rank(); ++j) r[j] -= p[i] * a[i][j];
  return r;
}

LatticePoint WeightLattice::apply(const WeylElement& w, const LatticePoint& p) const {
  const int n = rank();
  LatticePoint r{};
  for (int i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < n; ++j) s += static_cast<std::int64_t>(w.weight_matrix[i * n + j]) * p[j];
    r[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

LatticePoint WeightLattice::doubled_root(int k) const {
  const auto& root = sigma_.positive_roots()[k];
  LatticePoint r{};
  const auto& a = sigma_.cartan();
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) r[j] += root[i] * a[i][j];
  return r;
}

LatticePoint WeightLattice::rho() const {
  LatticePoint r{};
  for (int i = 0; i < rank(); ++i) r[i] = 1;
  return r;
}

Rational WeightLattice::inner(const LatticePoint& x, const LatticePoint& y) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (y[j] != 0) s += fund_gram_[i][j] * x[i] * y[j];
  }
  return s;
}

bool WeightLattice::is_dominant(const LatticePoint& p) const {
  for (int i = 0; i < rank(); ++i)
    if (p[i] < 0) return false;
  return true;
}

bool WeightLattice::leq(const LatticePoint& mu, const LatticePoint& lambda) const {
  LatticePoint d{};
  for (int i = 0; i < rank(); ++i) d[i] = lambda[i] - mu[i];
  Weight x = to_root_coords(d);
  for (const auto& v : x)
    if (v < 0 || v.get_den() != 1) return false;
  return true;
}

std::vector<LatticePoint> WeightLattice::orbit(const LatticePoint& p) const {
  std::set<LatticePoint> seen{p};
  std::vector<LatticePoint> stack{p};
  while (!stack.empty()) {
    LatticePoint v = stack.back();
    stack.pop_back();
    for (int i = 0; i < rank(); ++i) {
      LatticePoint u = reflect(i, v);
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<LatticePoint> WeightLattice::lower_ideal(const LatticePoint& lambda) const {
  if (!is_dominant(lambda)) throw DomainError(to_string(lambda) + " is not dominant");
  std::vector<LatticePoint> out;
  for (const Weight& mu : dominant_lower_ideal(sigma_, to_root_coords(lambda), 2)) out.push_back(from_root_coords(mu));
  return out;
}

long WeightLattice::height(const LatticePoint& p) const {
  long h = 0;
  for (int i = 0; i < rank(); ++i) h += p[i];
  return h;
}

std::vector<LatticePoint> WeightLattice::dominant_up_to_height(long h) const {
  std::vector<LatticePoint> out;
  LatticePoint p{};
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == rank()) {
      out.push_back(p);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      p[i] = static_cast<std::int32_t>(v);
      rec(i + 1, left - v);
    }
    p[i] = 0;
  };
  rec(0, h);
  std::sort(out.begin(), out.end(), [this](const LatticePoint& a, const LatticePoint& b) {
    long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

std::string WeightLattice::to_string(const LatticePoint& p) const {
  std::string s = "(";
  for (int i = 0; i < rank(); ++i) s += (i ? ", " : "") + std::to_string(p[i]);
  return s + ")";
}

CharElem CharElem::monomial(LatticePtr lattice, const LatticePoint& p, const FieldElem& c) {
  CharElem e(std::move(lattice));
  e.add_term(p, c);
  return e;
}

FieldElem CharElem::coefficient(const LatticePoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? FieldElem() : it->second;
}

void CharElem::add_term(const LatticePoint& p, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CharElem& CharElem::operator+=(const CharElem& o) {
  if (!lattice_) lattice_ = o.lattice_;
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

CharElem& CharElem::operator-=(const CharElem& o) {
  if (!lattice_) lattice_ = o.lattice_;
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

CharElem CharElem::operator*(const CharElem& o) const {
  CharElem r(lattice_ ? lattice_ : o.lattice_);
  for (const auto& [p, c] : terms_)
    for (const auto& [p2, c2] : o.terms_) {
      LatticePoint s;
      for (int i = 0; i < kMaxRank; ++i) s[i] = p[i] + p2[i];
      r.add_term(s, c * c2);
    }
  return r;
}

CharElem CharElem::scaled(const FieldElem& c) const {
  CharElem r(lattice_);
  if (c.is_zero()) return r;
  for (const auto& [p, v] : terms_) r.terms_.emplace(p, v * c);
  return r;
}

CharElem CharElem::exact_div(const CharElem& h) const {
  if (h.is_zero()) throw DivisionByZero("exact_div by the zero element");
  CharElem q(lattice_ ? lattice_ : h.lattice_);
  if (is_zero()) return q;
  // Quotient exponents live in the box [min f - min h, max f - max h].
  LatticePoint lo, hi;
  for (int i = 0; i < kMaxRank; ++i) {
    std::int32_t fmin = INT32_MAX, fmax = INT32_MIN, hmin = INT32_MAX, hmax = INT32_MIN;
    for (const auto& t : terms_) fmin = std::min(fmin, t.first[i]), fmax = std::max(fmax, t.first[i]);
    for (const auto& t : h.terms_) hmin = std::min(hmin, t.first[i]), hmax = std::max(hmax, t.first[i]);
    lo[i] = fmin - hmin;
    hi[i] = fmax - hmax;
  }
  const auto& [hlead, hcoef] = *h.terms_.rbegin();
  CharElem r = *this;
  auto fail = [&r]() {
    const auto& [p, c] = *r.terms_.rbegin();
    std::string where = "(";
    for (int i = 0; i < (r.lattice_ ? r.lattice_->rank() : kMaxRank); ++i) where += (i ? ", " : "") + std::to_string(p[i]);
    throw DivisibilityError("inexact division; remainder leads with " + c.to_string() + " z^" + where + ")");
  };
  while (!r.is_zero()) {
    const auto& [rlead, rcoef] = *r.terms_.rbegin();
    LatticePoint t;
    for (int i = 0; i < kMaxRank; ++i) {
      t[i] = rlead[i] - hlead[i];
      if (t[i] < lo[i] || t[i] > hi[i]) fail();
    }
    FieldElem c = rcoef / hcoef;
    q.add_term(t, c);
    for (const auto& [p, v] : h.terms_) {
      LatticePoint s;
      for (int i = 0; i < kMaxRank; ++i) s[i] = p[i] + t[i];
      r.add_term(s, -(c * v));
    }
  }
  return q;
}

std::string CharElem::render() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) s += ", ";
    first = false;
    s += (lattice_ ? lattice_->to_string(p) : std::string("?")) + ": " + c.to_string();
  }
  return s + "}";
}

CharElem m_lambda(const LatticePtr& lattice, const LatticePoint& lambda) {
  if (!lattice->is_dominant(lambda)) throw DomainError(lattice->to_string(lambda) + " is not dominant");
  CharElem e(lattice);
  for (const auto& p : lattice->orbit(lambda)) e.add_term(p, FieldElem(1L));
  return e;
}

CharElem t_shift(const LatticePoint& beta, const CharElem& f) {
  CharElem r(f.lattice());
  for (const auto& [p, c] : f.terms()) r.add_term(p, c * FieldElem::q_power(f.lattice()->inner(beta, p)));
  return r;
}

CharElem apply_weyl(const WeylElement& w, const CharElem& f) {
  CharElem r(f.lattice());
  for (const auto& [p, c] : f.terms()) r.add_term(f.lattice()->apply(w, p), c);
  return r;
}

CharElem symmetrize(const CharElem& f, std::size_t cap) {
  CharElem r(f.lattice());
  if (!f.lattice()) return r;
  for (const auto& w : weyl_elements(f.lattice()->datum(), cap)) r += apply_weyl(w, f);
  return r;
}

bool is_invariant(const CharElem& f) {
  if (!f.lattice()) return true;
  for (int i = 0; i < f.lattice()->rank(); ++i) {
    CharElem r(f.lattice());
    for (const auto& [p, c] : f.terms()) r.add_term(f.lattice()->reflect(i, p), c);
    if (r != f) return false;
  }
  return true;
}

}  // namespace qsp
