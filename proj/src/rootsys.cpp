#include "qsp/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qsp {

namespace {

struct Shape {
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> is_long;
  int ratio = 1;  // (long, long) / (short, short)
};

Shape shape_of(const CartanType& t) {
  const int n = t.rank;
  Shape s;
  s.is_long.assign(n, true);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) s.edges.emplace_back(i, i + 1);
  };
  switch (t.letter) {
    case 'A':
      if (n < 1) break;
      chain(n);
      return s;
    case 'B':
      if (n < 2) break;
      chain(n);
      s.is_long[n - 1] = false;
      s.ratio = 2;
      return s;
    case 'C':
      if (n < 2) break;
      chain(n);
      for (int i = 0; i + 1 < n; ++i) s.is_long[i] = false;
      s.ratio = 2;
      return s;
    case 'D':
      if (n < 3) break;
      chain(n - 1);
      s.edges.emplace_back(n - 3, n - 1);
      return s;
    case 'E':
      if (n < 6 || n > 8) break;
      s.edges = {{0, 2}, {1, 3}, {2, 3}, {3, 4}};
      for (int i = 4; i + 1 < n; ++i) s.edges.emplace_back(i, i + 1);
      return s;
    case 'F':
      if (n != 4) break;
      chain(4);
      s.is_long[2] = s.is_long[3] = false;
      s.ratio = 2;
      return s;
    case 'G':
      if (n != 2) break;
      s.edges = {{0, 1}};
      s.is_long[0] = false;
      s.ratio = 3;
      return s;
    default:
      break;
  }
  throw InvalidSpec("unknown Cartan type " + t.label());
}

RatMatrix gram_of(const CartanType& t, Normalization norm) {
  Shape s = shape_of(t);
  Rational long_len = norm == Normalization::ShortNorm2 ? Rational(2 * s.ratio) : Rational(2);
  Rational short_len = norm == Normalization::ShortNorm2 ? Rational(2) : Rational(2, s.ratio);
  short_len.canonicalize();
  RatMatrix g(t.rank, RatVec(t.rank, 0));
  for (int i = 0; i < t.rank; ++i) g[i][i] = s.is_long[i] ? long_len : short_len;
  for (auto [i, j] : s.edges) {
    Rational v = -std::max(g[i][i], g[j][j]) / 2;
    g[i][j] = g[j][i] = v;
  }
  return g;
}

std::vector<std::vector<int>> cartan_of_gram(const RatMatrix& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (g[i].size() != g.size()) throw InvalidSpec("gram matrix is not square");
    if (g[i][i] <= 0) throw InvalidSpec("gram matrix has a nonpositive diagonal entry");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (g[i][j] != g[j][i]) throw InvalidSpec("gram matrix is not symmetric");
      Rational v = 2 * g[i][j] / g[j][j];
      if (v.get_den() != 1) throw InvalidSpec("gram matrix gives a non-integral Cartan entry");
      a[i][j] = static_cast<int>(v.get_num().get_si());
      if (i != j && a[i][j] > 0) throw InvalidSpec("gram matrix gives a positive off-diagonal Cartan entry");
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int p = a[i][j] * a[j][i];
      if (p > 3 || ((a[i][j] == 0) != (a[j][i] == 0)))
        throw InvalidSpec("gram matrix is not of finite type");
    }
  return a;
}

std::vector<std::vector<int>> standard_cartan(const CartanType& t) {
  return cartan_of_gram(gram_of(t, Normalization::ShortNorm2));
}

// Bourbaki-ordered node list of `nodes` matching type t, or empty.
std::vector<int> match_nodes(const CartanType& t, const std::vector<int>& nodes,
                             const std::vector<std::vector<int>>& a) {
  auto std_a = standard_cartan(t);
  const int n = t.rank;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(nodes.size(), false);
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == n) return true;
    for (std::size_t c = 0; c < nodes.size(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int l = 0; l < k && ok; ++l)
        ok = std_a[k][l] == a[nodes[c]][perm[l]] && std_a[l][k] == a[perm[l]][nodes[c]];
      if (!ok) continue;
      used[c] = true;
      perm[k] = nodes[c];
      if (place(k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (static_cast<int>(nodes.size()) != n || !place(0)) return {};
  return perm;
}

std::vector<CartanType> candidates(const std::vector<int>& nodes, const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(nodes.size());
  int max_bond = 0, branch = 0;
  for (int x : nodes) {
    int deg = 0;
    for (int y : nodes)
      if (x != y && a[x][y] != 0) {
        ++deg;
        max_bond = std::max(max_bond, a[x][y] * a[y][x]);
      }
    if (deg >= 3) ++branch;
  }
  if (max_bond == 3) return {{'G', 2}};
  if (max_bond == 2) return {{'C', n}, {'B', n}, {'F', 4}};
  if (branch == 0) return {{'A', n}};
  return {{'D', n}, {'E', n}};
}

std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace

CartanType parse_cartan_type(const std::string& s) {
  if (s.size() < 2 || !std::isupper(static_cast<unsigned char>(s[0])))
    throw InvalidSpec("bad Cartan type '" + s + "'");
  CartanType t;
  t.letter = s[0];
  try {
    std::size_t used = 0;
    t.rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw InvalidSpec("bad Cartan type '" + s + "'");
  } catch (const std::logic_error&) {
    throw InvalidSpec("bad Cartan type '" + s + "'");
  }
  shape_of(t);
  return t;
}

bool same_type_label(const std::string& a, const std::string& b) {
  auto canon = [](std::string s) {
    if (s == "C2") return std::string("B2");
    if (s == "D3") return std::string("A3");
    return s;
  };
  return canon(a) == canon(b);
}

std::vector<std::vector<int>> standard_cartan_matrix(const CartanType& t) { return standard_cartan(t); }

const char* normalization_name(Normalization n) {
  return n == Normalization::ShortNorm2 ? "short_norm_2" : "long_norm_2";
}

RatMatrix rat_inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m, inv(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InvalidSpec("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RootDatum RootDatum::build(const std::vector<CartanType>& comps, Normalization norm) {
  if (comps.empty()) throw InvalidSpec("root datum needs at least one component");
  int total = 0;
  for (const auto& c : comps) total += c.rank;
  RootDatum d;
  d.rank_ = total;
  d.gram_.assign(total, RatVec(total, 0));
  int off = 0;
  for (const auto& c : comps) {
    RatMatrix g = gram_of(c, norm);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) d.gram_[off + i][off + j] = g[i][j];
    off += c.rank;
  }
  d.finish();
  return d;
}

RootDatum RootDatum::from_gram(const RatMatrix& gram) {
  if (gram.empty()) throw InvalidSpec("root datum needs positive rank");
  RootDatum d;
  d.rank_ = static_cast<int>(gram.size());
  d.gram_ = gram;
  d.finish();
  return d;
}

void RootDatum::finish() {
  const int n = rank_;
  cartan_ = cartan_of_gram(gram_);

  // Components, in order of their smallest node.
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> groups;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] >= 0) continue;
    std::vector<int> stack{s}, nodes;
    comp_of[s] = static_cast<int>(groups.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      nodes.push_back(x);
      for (int y = 0; y < n; ++y)
        if (y != x && cartan_[x][y] != 0 && comp_of[y] < 0) {
          comp_of[y] = comp_of[s];
          stack.push_back(y);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    groups.push_back(nodes);
  }
  components_.clear();
  component_nodes_.clear();
  for (const auto& nodes : groups) {
    std::vector<int> best;
    CartanType best_type;
    for (const CartanType& t : candidates(nodes, cartan_)) {
      std::vector<int> perm;
      try {
        perm = match_nodes(t, nodes, cartan_);
      } catch (const InvalidSpec&) {
        continue;
      }
      if (perm.empty()) continue;
      if (best.empty() || (perm == nodes && best != nodes)) {
        best = perm;
        best_type = t;
      }
    }
    if (best.empty()) throw InvalidSpec("gram matrix is not of finite type");
    components_.push_back(best_type);
    component_nodes_.push_back(best);
  }

  // Positive roots by string closure.
  std::map<std::vector<int>, int> seen;
  positive_.clear();
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen[e] = i;
    positive_.push_back(e);
  }
  for (std::size_t idx = 0; idx < positive_.size(); ++idx) {
    const std::vector<int> beta = positive_[idx];
    for (int i = 0; i < n; ++i) {
      int height = std::accumulate(beta.begin(), beta.end(), 0);
      if (height == 1 && beta[i] == 1) continue;
      int p = 0;
      for (int j = 0; j < n; ++j) p += beta[j] * cartan_[j][i];
      int r = 0;
      std::vector<int> g = beta;
      while (true) {
        --g[i];
        if (g[i] < 0 || !seen.count(g)) break;
        ++r;
      }
      if (r - p > 0) {
        std::vector<int> up = beta;
        ++up[i];
        if (!seen.count(up)) {
          seen[up] = static_cast<int>(positive_.size());
          positive_.push_back(up);
        }
      }
    }
  }
  std::sort(positive_.begin(), positive_.end(), [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0), hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x < y;
  });

  RatMatrix a(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = cartan_[i][j];
  RatMatrix inv = rat_inverse(a);
  fundamental_.assign(n, Weight(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) fundamental_[i][k] = inv[i][k];

  rho_.assign(n, 0);
  for (const auto& r : positive_)
    for (int k = 0; k < n; ++k) rho_[k] += Rational(r[k], 2);
  for (auto& x : rho_) x.canonicalize();

  w0_word_.clear();
  Weight v = rho_;
  while (true) {
    int found = -1;
    for (int i = 0; i < n && found < 0; ++i)
      if (coroot_pairing(v, i) > 0) found = i;
    if (found < 0) break;
    v = reflect(found, v);
    w0_word_.push_back(found);
  }
}

std::string RootDatum::type_label() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "x";
    s += components_[i].label();
  }
  return s;
}

bool RootDatum::simply_laced() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (cartan_[i][j] < -1) return false;
  return true;
}

int RootDatum::positive_root_index(const std::vector<int>& coords) const {
  auto it = std::lower_bound(positive_.begin(), positive_.end(), coords, [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0), hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x < y;
  });
  if (it != positive_.end() && *it == coords) return static_cast<int>(it - positive_.begin());
  return -1;
}

bool RootDatum::is_root(const std::vector<int>& coords) const {
  if (positive_root_index(coords) >= 0) return true;
  std::vector<int> m(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) m[i] = -coords[i];
  return positive_root_index(m) >= 0;
}

Weight RootDatum::root(int index) const {
  Weight w(rank_);
  for (int k = 0; k < rank_; ++k) w[k] = positive_[index][k];
  return w;
}

Weight RootDatum::simple_root(int i) const {
  Weight w(rank_, 0);
  w[i] = 1;
  return w;
}

Rational RootDatum::inner(const Weight& x, const Weight& y) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (y[j] != 0 && gram_[i][j] != 0) s += x[i] * gram_[i][j] * y[j];
  }
  return s;
}

Rational RootDatum::coroot_pairing(const Weight& x, int i) const {
  Rational s = 0;
  for (int j = 0; j < rank_; ++j)
    if (cartan_[j][i] != 0) s += x[j] * cartan_[j][i];
  return s;
}

Weight RootDatum::reflect(int i, Weight x) const {
  x[i] -= coroot_pairing(x, i);
  return x;
}

bool RootDatum::is_dominant(const Weight& x) const {
  for (int i = 0; i < rank_; ++i)
    if (coroot_pairing(x, i) < 0) return false;
  return true;
}

Weight RootDatum::apply_w0(Weight x) const {
  for (int i : w0_word_) x = reflect(i, std::move(x));
  return x;
}

mpz_class RootDatum::weyl_order() const {
  mpz_class total = 1;
  for (const auto& c : components_) {
    mpz_class f;
    const unsigned long n = static_cast<unsigned long>(c.rank);
    switch (c.letter) {
      case 'A':
        mpz_fac_ui(f.get_mpz_t(), n + 1);
        break;
      case 'B':
      case 'C':
        mpz_fac_ui(f.get_mpz_t(), n);
        f <<= n;
        break;
      case 'D':
        mpz_fac_ui(f.get_mpz_t(), n);
        f <<= (n - 1);
        break;
      case 'E':
        f = n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
        break;
      case 'F':
        f = 1152;
        break;
      default:
        f = 12;
        break;
    }
    total *= f;
  }
  return total;
}

std::vector<int> RootDatum::highest_short_root() const {
  Rational shortest = -1;
  for (const auto& r : positive_) {
    Weight w(r.begin(), r.end());
    Rational nn = inner(w, w);
    if (shortest < 0 || nn < shortest) shortest = nn;
  }
  std::vector<int> best;
  for (const auto& r : positive_) {
    Weight w(r.begin(), r.end());
    if (inner(w, w) == shortest && is_dominant(w)) best = r;
  }
  if (best.empty()) throw InvariantViolation("no dominant short root");
  return best;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

std::vector<WeylElement> weyl_elements(const RootDatum& d, std::size_t cap) {
  mpz_class order = d.weyl_order();
  if (order > mpz_class(static_cast<unsigned long>(cap)))
    throw CapExceeded("Weyl group of " + d.type_label() + " has order " + order.get_str() + ", above the cap " +
                      std::to_string(cap));
  const int n = d.rank();
  const auto& a = d.cartan();
  WeylElement id;
  id.root_matrix.assign(n * n, 0);
  id.weight_matrix.assign(n * n, 0);
  for (int i = 0; i < n; ++i) id.root_matrix[i * n + i] = id.weight_matrix[i * n + i] = 1;
  std::vector<WeylElement> out{id};
  std::unordered_map<std::vector<int>, std::size_t, VecHash> index;
  index.emplace(id.root_matrix, 0);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    for (int i = 0; i < n; ++i) {
      const WeylElement& w = out[idx];
      WeylElement next;
      next.root_matrix = w.root_matrix;
      // s_i = I - e_i a^T with a_j = A[j][i]; only row i changes.
      for (int col = 0; col < n; ++col) {
        int s = 0;
        for (int j = 0; j < n; ++j) s += a[j][i] * w.root_matrix[j * n + col];
        next.root_matrix[i * n + col] -= s;
      }
      if (index.count(next.root_matrix)) continue;
      next.weight_matrix = w.weight_matrix;
      for (int k = 0; k < n; ++k) {
        if (a[i][k] == 0 || k == i) continue;
        for (int col = 0; col < n; ++col) next.weight_matrix[k * n + col] -= a[i][k] * w.weight_matrix[i * n + col];
      }
      for (int col = 0; col < n; ++col) next.weight_matrix[i * n + col] = -w.weight_matrix[i * n + col];
      next.length = w.length + 1;
      index.emplace(next.root_matrix, out.size());
      out.push_back(std::move(next));
    }
  }
  if (mpz_class(static_cast<unsigned long>(out.size())) != order)
    throw InvariantViolation("Weyl enumeration found " + std::to_string(out.size()) + " elements, expected " +
                             order.get_str());
  return out;
}

Weight apply(const WeylElement& w, const Weight& x) {
  const std::size_t n = x.size();
  Weight y(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w.root_matrix[i * n + j] != 0 && x[j] != 0) y[i] += w.root_matrix[i * n + j] * x[j];
  return y;
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& x) {
  std::set<Weight> seen{x};
  std::vector<Weight> stack{x};
  while (!stack.empty()) {
    Weight v = stack.back();
    stack.pop_back();
    for (int i = 0; i < d.rank(); ++i) {
      Weight u = d.reflect(i, v);
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

bool in_weight_lattice(const RootDatum& d, const Weight& x, const Rational& scale) {
  for (int j = 0; j < d.rank(); ++j) {
    Rational c = d.coroot_pairing(x, j) / scale;
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool dominance_leq(const RootDatum& d, const Weight& mu, const Weight& lambda) {
  for (int i = 0; i < d.rank(); ++i) {
    Rational diff = lambda[i] - mu[i];
    if (diff < 0 || diff.get_den() != 1) return false;
  }
  return true;
}

std::vector<Weight> dominant_lower_ideal(const RootDatum& d, const Weight& lambda, const Rational& scale) {
  const int n = d.rank();
  std::vector<long> bound(n);
  for (int i = 0; i < n; ++i) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), lambda[i].get_num_mpz_t(), lambda[i].get_den_mpz_t());
    bound[i] = std::max(0L, f.get_si());
  }
  std::vector<std::pair<std::vector<long>, Weight>> found;
  std::vector<long> k(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Weight mu = lambda;
      for (int j = 0; j < n; ++j) mu[j] -= k[j];
      if (d.is_dominant(mu) && in_weight_lattice(d, mu, scale)) found.emplace_back(k, mu);
      return;
    }
    for (long v = 0; v <= bound[i]; ++v) {
      k[i] = v;
      rec(i + 1);
    }
    k[i] = 0;
  };
  rec(0);
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    long sx = std::accumulate(x.first.begin(), x.first.end(), 0L);
    long sy = std::accumulate(y.first.begin(), y.first.end(), 0L);
    return sx != sy ? sx < sy : x.first < y.first;
  });
  std::vector<Weight> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::string weight_to_string(const Weight& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(x[i]);
  }
  return s + ")";
}

}  // namespace qsp
