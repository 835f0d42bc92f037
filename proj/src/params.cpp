#include "qsp/params.hpp"

#include <numeric>

namespace qsp {

namespace {

// Simple root in the W-orbit of the positive root k, by descent.
int orbit_representative(const RootDatum& d, int k) {
  const auto& r = d.positive_roots()[k];
  Weight x(r.begin(), r.end());
  const int m = d.rank();
  while (true) {
    int simple = -1, nz = 0;
    for (int i = 0; i < m; ++i)
      if (x[i] != 0) ++nz, simple = i;
    if (nz == 1 && x[simple] == 1) return simple;
    int j = 0;
    while (j < m && d.coroot_pairing(x, j) <= 0) ++j;
    if (j == m) throw InvariantViolation("orbit descent failed for " + weight_to_string(x));
    x = d.reflect(j, x);
  }
}

Rational monomial_exponent(const FieldElem& x, const char* what) {
  auto e = x.q_monomial_exponent();
  if (!e) throw InvalidSpec(std::string(what) + " = " + x.to_string() + " is not a power of q");
  return *e;
}

}  // namespace

int simple_positive_index(const RootDatum& d, int i) {
  std::vector<int> unit(d.rank(), 0);
  unit[i] = 1;
  return d.positive_root_index(unit);
}

MacdonaldParams MacdonaldParams::from_pair(const SymmetricPair& pair) {
  return from_positive(pair.sigma.datum, pair.sigma.a_positive, pair.sigma.g_positive, Source::FromPair,
                       pair.spec.label());
}

MacdonaldParams MacdonaldParams::from_positive(RootDatum sigma, std::vector<FieldElem> a, std::vector<FieldElem> g,
                                               Source source, std::string label) {
  MacdonaldParams p;
  p.sigma = std::move(sigma);
  p.a = std::move(a);
  p.g = std::move(g);
  p.source = source;
  p.label = std::move(label);
  p.validate();
  return p;
}

MacdonaldParams MacdonaldParams::from_simple(RootDatum sigma, const std::vector<FieldElem>& a,
                                             const std::vector<FieldElem>& g, Source source, std::string label) {
  const int m = sigma.rank();
  if (static_cast<int>(a.size()) != m || static_cast<int>(g.size()) != m)
    throw ShapeError("expected " + std::to_string(m) + " values of a and g");
  // Simple roots sharing an orbit must agree.
  for (int i = 0; i < m; ++i) {
    Weight ei(m, 0);
    ei[i] = 1;
    for (const Weight& y : weyl_orbit(sigma, ei))
      for (int j = i + 1; j < m; ++j) {
        Weight ej(m, 0);
        ej[j] = 1;
        if (y == ej && (a[i] != a[j] || g[i] != g[j]))
          throw InvalidSpec("parameters differ on alpha_" + std::to_string(i + 1) + " and alpha_" +
                            std::to_string(j + 1) + ", which are W-conjugate");
      }
  }
  std::vector<FieldElem> ap, gp;
  for (std::size_t k = 0; k < sigma.positive_roots().size(); ++k) {
    int rep = orbit_representative(sigma, static_cast<int>(k));
    ap.push_back(a[rep]);
    gp.push_back(g[rep]);
  }
  return from_positive(std::move(sigma), std::move(ap), std::move(gp), source, std::move(label));
}

MacdonaldParams MacdonaldParams::explicit_params(const std::string& sigma_type, const std::vector<FieldElem>& a,
                                                 const std::vector<FieldElem>& g) {
  CartanType t = parse_cartan_type(sigma_type);
  const int m = t.rank;
  auto cartan = standard_cartan_matrix(t);
  RootDatum standard = RootDatum::build({t}, Normalization::ShortNorm2);

  std::vector<Rational> ea;
  if (a.size() == 1) {
    Rational e = monomial_exponent(a[0], "a");
    Rational shortest = standard.gram()[0][0];
    for (int i = 0; i < m; ++i) shortest = std::min(shortest, standard.gram()[i][i]);
    for (int i = 0; i < m; ++i) ea.push_back(e * standard.gram()[i][i] / shortest);
  } else if (static_cast<int>(a.size()) == m) {
    for (const auto& x : a) ea.push_back(monomial_exponent(x, "a"));
  } else {
    throw ShapeError(sigma_type + " needs 1 or " + std::to_string(m) + " values of a, got " +
                     std::to_string(a.size()));
  }
  std::vector<FieldElem> gs;
  if (g.size() == 1) {
    gs.assign(m, g[0]);
  } else if (static_cast<int>(g.size()) == m) {
    gs = g;
  } else {
    throw ShapeError(sigma_type + " needs 1 or " + std::to_string(m) + " values of g, got " +
                     std::to_string(g.size()));
  }

  RatMatrix gram(m, RatVec(m, 0));
  for (int i = 0; i < m; ++i) {
    if (ea[i] <= 0) throw InvalidSpec("a must be a positive power of q");
    gram[i][i] = ea[i] / 2;
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) gram[i][j] = Rational(cartan[i][j]) * gram[j][j] / 2;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i])
        throw InvalidSpec("a-values are inconsistent with the root lengths of " + t.label());

  RootDatum sigma = RootDatum::from_gram(gram);
  std::vector<FieldElem> as;
  for (const auto& e : ea) as.push_back(FieldElem::q_power(e));
  return from_simple(std::move(sigma), as, gs, Source::Explicit, t.label());
}

void MacdonaldParams::validate() const {
  const auto& pos = sigma.positive_roots();
  if (a.size() != pos.size() || g.size() != pos.size())
    throw ShapeError("parameters must be given on every positive root");
  for (std::size_t k = 0; k < pos.size(); ++k) {
    Rational ea = monomial_exponent(a[k], "a");
    monomial_exponent(g[k], "g");
    Weight r = sigma.root(static_cast<int>(k));
    if (ea != 2 * sigma.inner(r, r))
      throw InvalidSpec("a = " + a[k].to_string() + " on " + weight_to_string(r) + " is not q^{2(alpha, alpha)}");
  }
  // Constant on orbits: s_i permutes the positive roots other than alpha_i.
  for (int i = 0; i < sigma.rank(); ++i)
    for (std::size_t k = 0; k < pos.size(); ++k) {
      Weight r = sigma.root(static_cast<int>(k));
      Weight s = sigma.reflect(i, r);
      std::vector<int> sc;
      bool positive = true;
      for (const auto& v : s) {
        sc.push_back(static_cast<int>(v.get_num().get_si()));
        if (v < 0) positive = false;
      }
      if (!positive) continue;
      int k2 = sigma.positive_root_index(sc);
      if (a[k] != a[k2] || g[k] != g[k2])
        throw InvalidSpec("parameters are not W-invariant: " + weight_to_string(r) + " and " +
                          weight_to_string(s) + " carry different values");
    }
}

MacdonaldParams MacdonaldParams::with_g_one() const {
  MacdonaldParams p = *this;
  for (auto& x : p.g) x = FieldElem(1L);
  p.label += " [g=1]";
  return p;
}

MacdonaldParams MacdonaldParams::with_g_equal_a() const {
  MacdonaldParams p = *this;
  p.g = p.a;
  p.label += " [g=a]";
  return p;
}

Rational MacdonaldParams::a_exponent(int k) const { return *a[k].q_monomial_exponent(); }
Rational MacdonaldParams::g_exponent(int k) const { return *g[k].q_monomial_exponent(); }

long MacdonaldParams::exponent_scale() const {
  mpz_class l = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a_exponent(static_cast<int>(k)).get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g_exponent(static_cast<int>(k)).get_den_mpz_t());
  }
  return l.get_si();
}

}  // namespace qsp
