// Numeric Macdonald inner product.
//
// <f, h> is the constant term of f * conj(h) * Delta with
// Delta = prod over all roots of (z^{2 alpha}; a)_inf / (g z^{2 alpha}; a)_inf.
// On the torus |z| = 1 the constant term is the mean value, computed with the
// trapezoidal rule on a uniform grid.  The integrand is analytic, so the rule
// converges geometrically; the grid is doubled until two levels agree.
#include <cmath>
#include <complex>

#include "qsp/macdonald.hpp"

namespace qsp {

namespace {

using Complex = std::complex<long double>;

// (c z; a)_inf, stopping once |c a^i| falls below the tolerance.
Complex pochhammer(Complex z, long double a, long double c, long double tol) {
  Complex r = 1;
  long double ai = c;
  for (int i = 0; i < 100000 && std::fabs(ai) >= tol; ++i) {
    r *= Complex(1) - z * ai;
    ai *= a;
  }
  return r;
}

struct RootFactor {
  LatticePoint v{};
  long double a = 0, g = 0;
  long finite_level = -1;  // g = a^k: the quotient is prod_{j<k} (1 - a^j z)
};

using Terms = std::vector<std::pair<LatticePoint, long double>>;

// Mean of f_i conj(f_j) Delta over an M^rank grid, for all pairs.
std::vector<std::vector<long double>> grid_gram(int rank, int M, const std::vector<Terms>& fs,
                                                const std::vector<RootFactor>& roots, long double tol) {
  const long double two_pi = 2.0L * std::acos(-1.0L);
  const std::size_t n = fs.size();
  std::vector<std::vector<long double>> G(n, std::vector<long double>(n, 0));
  long points = 1;
  for (int i = 0; i < rank; ++i) points *= M;
  std::vector<long double> theta(rank);
  std::vector<Complex> vals(n);
  for (long p = 0; p < points; ++p) {
    long rem = p;
    for (int i = 0; i < rank; ++i) {
      theta[i] = two_pi * static_cast<long double>(rem % M) / M;
      rem /= M;
    }
    auto character = [&](const LatticePoint& x) {
      long double ang = 0;
      for (int i = 0; i < rank; ++i) ang += x[i] * theta[i];
      return Complex(std::cos(ang), std::sin(ang));
    };
    long double delta = 1;
    for (const auto& r : roots) {
      Complex z = character(r.v);
      Complex ratio = 1;
      if (r.finite_level >= 0) {
        long double aj = 1;
        for (long j = 0; j < r.finite_level; ++j, aj *= r.a) ratio *= Complex(1) - z * aj;
      } else {
        ratio = pochhammer(z, r.a, 1, tol) / pochhammer(z, r.a, r.g, tol);
      }
      // alpha and -alpha together give |ratio|^2.
      delta *= std::norm(ratio);
    }
    for (std::size_t i = 0; i < n; ++i) {
      vals[i] = 0;
      for (const auto& [x, c] : fs[i]) vals[i] += c * character(x);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) G[i][j] += (vals[i] * std::conj(vals[j])).real() * delta;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) G[j][i] = G[i][j] /= static_cast<long double>(points);
  return G;
}

}  // namespace

long double MacdonaldSystem::inner_product_numeric(const CharElem& f, const CharElem& h, long double q,
                                                   long double tol) const {
  return gram_numeric({f, h}, q, tol)[0][1];
}

std::vector<std::vector<long double>> MacdonaldSystem::gram_numeric(const std::vector<CharElem>& fs, long double q,
                                                                    long double tol) const {
  if (!(q > 0 && q < 1)) throw DomainError("the numeric inner product needs 0 < q < 1");
  const int rank = lattice_->rank();
  std::vector<RootFactor> roots;
  for (std::size_t k = 0; k < params_.sigma.positive_roots().size(); ++k) {
    RootFactor r;
    r.v = lattice_->doubled_root(static_cast<int>(k));
    Rational ea = params_.a_exponent(static_cast<int>(k)), eg = params_.g_exponent(static_cast<int>(k));
    r.a = std::pow(q, static_cast<long double>(ea.get_d()));
    r.g = std::pow(q, static_cast<long double>(eg.get_d()));
    if (r.a >= 1) throw DomainError("|a| >= 1 at q = " + std::to_string(static_cast<double>(q)));
    Rational level = eg / ea;
    if (level.get_den() == 1 && level >= 0) {
      r.finite_level = level.get_num().get_si();
    } else if (r.g >= 1) {
      throw DomainError("|g| >= 1 makes the density singular on the torus");
    }
    roots.push_back(r);
  }
  std::vector<Terms> vals;
  long span = 1;
  long double scale = 1;
  for (const auto& f : fs) {
    Terms t;
    for (const auto& [x, c] : f.terms()) {
      t.emplace_back(x, c.eval(q));
      scale = std::max(scale, std::fabs(t.back().second));
      for (int i = 0; i < rank; ++i) span = std::max<long>(span, std::labs(x[i]));
    }
    vals.push_back(std::move(t));
  }

  int M = 8;
  while (M < 4 * span + 8) M *= 2;
  auto prev = grid_gram(rank, M, vals, roots, tol);
  const int max_side = rank == 1 ? (1 << 16) : (rank == 2 ? 1024 : 64);
  while (true) {
    const int next = 2 * M;
    if (next > max_side) throw DomainError("inner product quadrature did not converge");
    auto cur = grid_gram(rank, next, vals, roots, tol);
    long double diff = 0;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = 0; j < cur.size(); ++j) diff = std::max(diff, std::fabs(cur[i][j] - prev[i][j]));
    if (diff <= 1e3L * tol * scale * scale) return cur;
    prev = std::move(cur);
    M = next;
  }
}

}  // namespace qsp
