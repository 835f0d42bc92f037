#include "qsp/field.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

namespace qsp {

using detail::ZPoly;

namespace {

ZPoly one_poly() { return ZPoly::constant(1); }

ZPoly quotient_or_throw(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!detail::exact_quotient(a, b, &q)) throw InvariantViolation("field: inexact cancellation");
  return q;
}

}  // namespace

FieldElem::FieldElem() : den_(one_poly()) {}

FieldElem::FieldElem(long v) : num_(ZPoly::constant(v)), den_(one_poly()) {}

FieldElem::FieldElem(const Rational& v)
    : num_(ZPoly::constant(v.get_num())), den_(ZPoly::constant(v.get_den())) {
  normalize(true);
}

FieldElem FieldElem::q_power(const Rational& e) {
  FieldElem r;
  r.scale_ = e.get_den().get_si();
  r.num_ = ZPoly::monomial(1, e.get_num().get_si());
  r.normalize(true);
  return r;
}

FieldElem FieldElem::from_parts(long scale, ZPoly num, ZPoly den) {
  if (scale <= 0) throw InvalidSpec("field: scale must be positive");
  if (den.is_zero()) throw DivisionByZero("field: zero denominator");
  FieldElem r;
  r.scale_ = scale;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize(false);
  return r;
}

void FieldElem::normalize(bool coprime) {
  if (num_.is_zero()) {
    scale_ = 1;
    num_ = {};
    den_ = one_poly();
    return;
  }
  if (den_.low != 0) {
    num_.low -= den_.low;
    den_.low = 0;
  }
  if (den_.c[0] < 0) {
    num_ = detail::neg(std::move(num_));
    den_ = detail::neg(std::move(den_));
  }
  if (!coprime && den_.length() > 1) {
    ZPoly g = detail::gcd(num_, den_);
    if (g.length() > 1) {
      num_ = quotient_or_throw(num_, g);
      den_ = quotient_or_throw(den_, g);
    }
  }
  mpz_class k;
  mpz_class cn = detail::content(num_), cd = detail::content(den_);
  mpz_gcd(k.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (k != 1) {
    num_ = detail::divide_content(std::move(num_), k);
    den_ = detail::divide_content(std::move(den_), k);
  }
  long e = std::gcd(scale_, std::gcd(detail::exponent_gcd(num_), detail::exponent_gcd(den_)));
  if (e > 1) {
    num_ = detail::compress(num_, e);
    den_ = detail::compress(den_, e);
    scale_ /= e;
  }
}

void FieldElem::lift_to(long scale) {
  if (scale == scale_) return;
  long k = scale / scale_;
  num_ = detail::expand(num_, k);
  den_ = detail::expand(den_, k);
  scale_ = scale;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.num_ = detail::neg(std::move(r.num_));
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long L = std::lcm(scale_, o.scale_);
  FieldElem b = o;
  lift_to(L);
  b.lift_to(L);
  if (den_ == b.den_) {
    num_ = detail::add(num_, b.num_);
    normalize(den_.is_one());
  } else if (den_.is_one()) {
    num_ = detail::add(detail::mul(num_, b.den_), b.num_);
    den_ = std::move(b.den_);
    normalize(true);
  } else if (b.den_.is_one()) {
    num_ = detail::add(num_, detail::mul(b.num_, den_));
    normalize(true);
  } else {
    ZPoly g = detail::gcd(den_, b.den_);
    ZPoly d1 = quotient_or_throw(den_, g), d2 = quotient_or_throw(b.den_, g);
    num_ = detail::add(detail::mul(num_, d2), detail::mul(b.num_, d1));
    den_ = detail::mul(den_, d2);
    normalize(false);
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = FieldElem();
  long L = std::lcm(scale_, o.scale_);
  FieldElem b = o;
  lift_to(L);
  b.lift_to(L);
  ZPoly n1 = std::move(num_), d1 = std::move(den_), n2 = std::move(b.num_), d2 = std::move(b.den_);
  if (!d2.is_one()) {
    ZPoly g = detail::gcd(n1, d2);
    if (g.length() > 1) {
      n1 = quotient_or_throw(n1, g);
      d2 = quotient_or_throw(d2, g);
    }
  }
  if (!d1.is_one()) {
    ZPoly g = detail::gcd(n2, d1);
    if (g.length() > 1) {
      n2 = quotient_or_throw(n2, g);
      d1 = quotient_or_throw(d1, g);
    }
  }
  num_ = detail::mul(n1, n2);
  den_ = detail::mul(d1, d2);
  normalize(true);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("field: inverse of zero");
  FieldElem r;
  r.scale_ = scale_;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize(true);
  return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

bool FieldElem::operator==(const FieldElem& o) const {
  return scale_ == o.scale_ && num_ == o.num_ && den_ == o.den_;
}

FieldElem FieldElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElem result(1L), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool FieldElem::is_one() const { return den_.is_one() && num_.is_one(); }

std::optional<Rational> FieldElem::q_monomial_exponent() const {
  if (!den_.is_one() || num_.length() != 1 || num_.c[0] != 1) return std::nullopt;
  Rational e(num_.low, scale_);
  e.canonicalize();
  return e;
}

Rational FieldElem::eval_exact(const Rational& q) const {
  Rational u;
  if (scale_ == 1) {
    u = q;
  } else {
    if (q < 0 && scale_ % 2 == 0) throw DomainError("field: even root of a negative number");
    mpz_class a = abs(q.get_num()), b = q.get_den(), ra, rb;
    bool ea = mpz_root(ra.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(scale_)) != 0;
    bool eb = mpz_root(rb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(scale_)) != 0;
    if (!ea || !eb) throw DomainError("field: q^(1/" + std::to_string(scale_) + ") is not rational at q=" + q.get_str());
    u = Rational(q < 0 ? mpz_class(-ra) : ra, rb);
    u.canonicalize();
  }
  if (u == 0) {
    if (num_.low < 0) throw PoleError("field: pole at q=0");
    Rational n = num_.low == 0 ? Rational(num_.c[0]) : Rational(0);
    return n / Rational(den_.c[0]);
  }
  Rational d = detail::eval(den_, u);
  if (d == 0) throw PoleError("field: pole at q=" + q.get_str());
  return detail::eval(num_, u) / d;
}

long double FieldElem::eval(long double q) const {
  long double u = scale_ == 1 ? q : std::pow(q, 1.0L / static_cast<long double>(scale_));
  long double d = detail::eval(den_, u);
  if (d == 0 || !std::isfinite(d)) throw PoleError("field: pole at q=" + std::to_string(static_cast<double>(q)));
  return detail::eval(num_, u) / d;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("empty rational");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false, digit = false;
  for (; i < t.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      digit = true;
    } else if (t[i] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else {
      throw ParseError("bad rational '" + s + "'");
    }
  }
  if (!digit) throw ParseError("bad rational '" + s + "'");
  if (t[0] == '+') t.erase(0, 1);
  Rational r(t);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

namespace {

std::string exponent_text(const Rational& e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  if (e.get_den() == 1 && e > 0) return "q^" + e.get_str();
  return "q^{" + e.get_str() + "}";
}

// Terms in descending exponent order; coefficients divided by `unit`.
std::string poly_text(const ZPoly& p, long scale, const mpz_class& unit, int* terms) {
  std::string out;
  *terms = 0;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i] == 0) continue;
    Rational c(p.c[i], unit);
    c.canonicalize();
    Rational e(p.low + static_cast<long>(i), scale);
    e.canonicalize();
    bool negative = c < 0;
    Rational ac = abs(c);
    std::string mono = exponent_text(e);
    std::string body;
    if (mono.empty())
      body = ac.get_str();
    else if (ac == 1)
      body = mono;
    else if (ac.get_den() == 1)
      body = ac.get_str() + mono;
    else
      body = "(" + ac.get_str() + ")" + mono;
    if (*terms == 0)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
    ++*terms;
  }
  return out;
}

}  // namespace

std::string FieldElem::to_string() const {
  if (is_zero()) return "0";
  const mpz_class& unit = den_.c[0];
  int nt = 0, dt = 0;
  std::string n = poly_text(num_, scale_, unit, &nt);
  if (den_.length() == 1) return n;
  std::string d = poly_text(den_, scale_, unit, &dt);
  if (nt > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

std::size_t FieldElem::hash() const {
  std::size_t h = std::hash<long>()(scale_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<long>()(num_.low));
  for (const auto& x : num_.c) mix(mpz_get_ui(x.get_mpz_t()) ^ (mpz_sgn(x.get_mpz_t()) < 0 ? 1u : 0u));
  for (const auto& x : den_.c) mix(mpz_get_ui(x.get_mpz_t()));
  return h;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

FieldElem parse_field_elem(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("empty coefficient");
  FieldElem result(1L);
  std::size_t pos = 0;
  if (t[0] == '-' || t[0] == '+') {
    if (t[0] == '-') result = FieldElem(-1L);
    pos = 1;
  }
  while (true) {
    if (pos >= t.size()) throw ParseError("bad coefficient '" + text + "'");
    if (t[pos] == 'q') {
      ++pos;
      Rational e = 1;
      if (pos < t.size() && t[pos] == '^') {
        ++pos;
        if (pos < t.size() && (t[pos] == '{' || t[pos] == '(')) {
          char close = t[pos] == '{' ? '}' : ')';
          std::size_t end = t.find(close, pos);
          if (end == std::string::npos) throw ParseError("unbalanced exponent in '" + text + "'");
          e = rational_from_string(t.substr(pos + 1, end - pos - 1));
          pos = end + 1;
        } else {
          std::size_t start = pos;
          if (pos < t.size() && t[pos] == '-') ++pos;
          while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
          e = rational_from_string(t.substr(start, pos - start));
        }
      }
      result *= FieldElem::q_power(e);
    } else {
      std::size_t start = pos;
      while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/')) ++pos;
      if (start == pos) throw ParseError("bad coefficient '" + text + "'");
      result *= FieldElem(rational_from_string(t.substr(start, pos - start)));
    }
    if (pos == t.size()) break;
    if (t[pos] != '*') throw ParseError("bad coefficient '" + text + "'");
    ++pos;
  }
  return result;
}

QContext::QContext(long D) : D_(D) {
  if (D <= 0) throw InvalidSpec("context: D must be positive");
}

FieldElem QContext::q_power(const Rational& r) const {
  if (D_ % r.get_den().get_si() != 0)
    throw ContextError("context: q^" + r.get_str() + " is outside Q(q^{1/" + std::to_string(D_) + "})");
  return FieldElem::q_power(r);
}

}  // namespace qsp
