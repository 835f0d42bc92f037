#include "qsp/detail/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsp::detail {

void ZPoly::trim() {
  std::size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  if (first == c.size()) {
    c.clear();
    low = 0;
    return;
  }
  std::size_t last = c.size();
  while (c[last - 1] == 0) --last;
  if (first > 0 || last < c.size()) {
    c = std::vector<mpz_class>(c.begin() + first, c.begin() + last);
    low += static_cast<long>(first);
  }
}

ZPoly ZPoly::constant(const mpz_class& v) { return monomial(v, 0); }

ZPoly ZPoly::monomial(const mpz_class& v, long e) {
  ZPoly p;
  if (v != 0) {
    p.low = e;
    p.c.push_back(v);
  }
  return p;
}

namespace {

ZPoly combine(const ZPoly& a, const ZPoly& b, bool subtract) {
  if (a.is_zero()) return subtract ? neg(b) : b;
  if (b.is_zero()) return a;
  ZPoly r;
  r.low = std::min(a.low, b.low);
  long hi = std::max(a.high(), b.high());
  r.c.assign(static_cast<std::size_t>(hi - r.low + 1), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[a.low - r.low + i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    if (subtract)
      r.c[b.low - r.low + i] -= b.c[i];
    else
      r.c[b.low - r.low + i] += b.c[i];
  }
  r.trim();
  return r;
}

}  // namespace

ZPoly add(const ZPoly& a, const ZPoly& b) { return combine(a, b, false); }
ZPoly sub(const ZPoly& a, const ZPoly& b) { return combine(a, b, true); }

ZPoly neg(ZPoly a) {
  for (auto& x : a.c) x = -x;
  return a;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ZPoly r;
  r.low = a.low + b.low;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    const mpz_srcptr ai = a.c[i].get_mpz_t();
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      mpz_addmul(r.c[i + j].get_mpz_t(), ai, b.c[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

ZPoly scale(ZPoly a, const mpz_class& k) {
  if (k == 0) return {};
  for (auto& x : a.c) x *= k;
  return a;
}

ZPoly shift(ZPoly a, long k) {
  if (!a.is_zero()) a.low += k;
  return a;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly divide_content(ZPoly a, const mpz_class& k) {
  if (k == 1) return a;
  for (auto& x : a.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return a;
}

bool exact_quotient(const ZPoly& a, const ZPoly& b, ZPoly* q) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    *q = {};
    return true;
  }
  if (a.c.size() < b.c.size()) return false;
  std::vector<mpz_class> rem = a.c;
  const std::size_t n = a.c.size(), m = b.c.size();
  std::vector<mpz_class> quo(n - m + 1);
  const mpz_class& lb = b.c.back();
  for (std::size_t k = n - m + 1; k-- > 0;) {
    mpz_class& top = rem[k + m - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(quo[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < m; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), quo[k].get_mpz_t(), b.c[j].get_mpz_t());
  }
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (rem[i] != 0) return false;
  q->low = a.low - b.low;
  q->c = std::move(quo);
  q->trim();
  return true;
}

long exponent_gcd(const ZPoly& a) {
  long g = 0;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != 0) g = std::gcd(g, std::labs(a.low + static_cast<long>(i)));
  return g;
}

ZPoly compress(const ZPoly& a, long k) {
  if (k == 1 || a.is_zero()) return a;
  ZPoly r;
  r.low = a.low / k;
  r.c.assign((a.c.size() - 1) / static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < a.c.size(); i += static_cast<std::size_t>(k)) r.c[i / k] = a.c[i];
  return r;
}

ZPoly expand(const ZPoly& a, long k) {
  if (k == 1 || a.is_zero()) return a;
  ZPoly r;
  r.low = a.low * k;
  r.c.assign((a.c.size() - 1) * static_cast<std::size_t>(k) + 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * k] = a.c[i];
  return r;
}

mpq_class eval(const ZPoly& a, const mpq_class& u) {
  mpq_class acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * u + mpq_class(a.c[i]);
  if (a.low != 0 && acc != 0) {
    mpq_class p = 1;
    mpq_class base = a.low > 0 ? u : mpq_class(1) / u;
    for (long k = std::labs(a.low); k > 0; --k) p *= base;
    acc *= p;
  }
  return acc;
}

long double eval(const ZPoly& a, long double u) {
  long double acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * u + static_cast<long double>(a.c[i].get_d());
  return acc * std::pow(u, static_cast<long double>(a.low));
}

namespace {

// Polynomials below are ordinary (low == 0) with nonzero constant term.

ZPoly primitive_part(const ZPoly& a) {
  ZPoly r = divide_content(a, content(a));
  if (!r.is_zero() && r.c[0] < 0) r = neg(std::move(r));
  return r;
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> r = a.c;
  const std::size_t m = b.c.size();
  const mpz_class& lb = b.c.back();
  while (r.size() >= m) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    mpz_class t = r.back();
    std::size_t off = r.size() - m;
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j < m; ++j) mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), b.c[j].get_mpz_t());
    r.pop_back();
  }
  ZPoly out;
  out.c = std::move(r);
  out.trim();
  return out;
}

ZPoly gcd_prs(ZPoly a, ZPoly b) {
  if (a.c.size() < b.c.size()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.is_zero()) break;
    if (r.low != 0) r = shift(std::move(r), -r.low);
    b = primitive_part(r);
  }
  a = primitive_part(a);
  if (a.low != 0) a = shift(std::move(a), -a.low);
  return a;
}

mpz_class max_norm(const ZPoly& a) {
  mpz_class m = 0;
  for (const auto& x : a.c) {
    mpz_class ax = abs(x);
    if (ax > m) m = ax;
  }
  return m;
}

mpz_class eval_at(const ZPoly& a, const mpz_class& xi) {
  mpz_class acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    acc *= xi;
    acc += a.c[i];
  }
  return acc;
}

bool divides(const ZPoly& g, const ZPoly& a) {
  ZPoly q;
  return exact_quotient(a, g, &q);
}

// Heuristic gcd by evaluation at a large integer, falling back to a
// primitive remainder sequence.
ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b) {
  if (a.c.size() == 1 || b.c.size() == 1) return ZPoly::constant(1);
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const std::size_t deg = std::max(a.c.size(), b.c.size());
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 400000) break;
    mpz_class ga = eval_at(a, xi), gb = eval_at(b, xi);
    mpz_class gam;
    mpz_gcd(gam.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    ZPoly g;
    mpz_class half = xi / 2;
    while (gam != 0) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), gam.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      g.c.push_back(r);
      gam -= r;
      mpz_divexact(gam.get_mpz_t(), gam.get_mpz_t(), xi.get_mpz_t());
    }
    g.trim();
    if (!g.is_zero()) {
      if (g.low != 0) g = shift(std::move(g), -g.low);
      g = primitive_part(g);
      if (divides(g, a) && divides(g, b)) return g;
    }
    xi = (xi * 73794) / 27011;
  }
  return gcd_prs(a, b);
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) return ZPoly::constant(1);
  if (a0.is_zero()) return primitive_part(shift(b0, -b0.low));
  if (b0.is_zero()) return primitive_part(shift(a0, -a0.low));
  ZPoly a = shift(a0, -a0.low), b = shift(b0, -b0.low);
  long k = std::gcd(exponent_gcd(a), exponent_gcd(b));
  if (k == 0) return ZPoly::constant(1);
  a = primitive_part(compress(a, k));
  b = primitive_part(compress(b, k));
  ZPoly g = gcd_primitive(a, b);
  return expand(g, k);
}

}  // namespace qsp::detail
