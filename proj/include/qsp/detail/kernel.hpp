// Integer kernel for the Macdonald operators.
//
// Coefficients are Laurent polynomials in u with entries of type T
// (std::int64_t with overflow checks, or mpz_class).  Everything the
// operator needs reduces to shifted additions of such polynomials.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <random>
#include <thread>
#include <unordered_map>
#include <vector>

#include "qsp/charring.hpp"
#include "qsp/errors.hpp"
#include "qsp/rootsys.hpp"

namespace qsp::detail {

template <class T>
inline void checked_add(T& dst, const T& v) {
  dst += v;
}
template <>
inline void checked_add<std::int64_t>(std::int64_t& dst, const std::int64_t& v) {
  if (__builtin_add_overflow(dst, v, &dst)) throw OverflowError("64-bit kernel overflow");
}

template <class T>
inline T checked_mul(const T& a, const T& b) {
  return a * b;
}
template <>
inline std::int64_t checked_mul<std::int64_t>(const std::int64_t& a, const std::int64_t& b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit kernel overflow");
  return r;
}

template <class T>
struct UPoly {
  std::int32_t low = 0;
  std::vector<T> c;  // front and back nonzero, empty for zero

  bool zero() const { return c.empty(); }
  void trim() {
    std::size_t b = 0;
    while (b < c.size() && c[b] == 0) ++b;
    if (b == c.size()) {
      c.clear();
      low = 0;
      return;
    }
    std::size_t e = c.size();
    while (c[e - 1] == 0) --e;
    if (b > 0 || e < c.size()) {
      c = std::vector<T>(c.begin() + b, c.begin() + e);
      low += static_cast<std::int32_t>(b);
    }
  }
  static UPoly monomial(std::int32_t e, T v) {
    UPoly p;
    p.low = e;
    p.c.push_back(v);
    return p;
  }
  bool operator==(const UPoly& o) const { return low == o.low && c == o.c; }
};

// dst += sign * u^shift * src
template <class T>
void add_shifted(UPoly<T>& dst, const UPoly<T>& src, std::int32_t shift, int sign) {
  if (src.zero()) return;
  const std::int32_t slow = src.low + shift;
  if (dst.zero()) {
    dst.low = slow;
    dst.c = src.c;
    if (sign < 0)
      for (auto& v : dst.c) v = -v;
    return;
  }
  const std::int32_t lo = std::min(dst.low, slow);
  const std::int32_t hi = std::max<std::int32_t>(dst.low + static_cast<std::int32_t>(dst.c.size()),
                                                 slow + static_cast<std::int32_t>(src.c.size()));
  if (lo < dst.low || hi > dst.low + static_cast<std::int32_t>(dst.c.size())) {
    std::vector<T> grown(hi - lo, T(0));
    std::copy(dst.c.begin(), dst.c.end(), grown.begin() + (dst.low - lo));
    dst.c.swap(grown);
    dst.low = lo;
  }
  const std::size_t off = slow - dst.low;
  for (std::size_t i = 0; i < src.c.size(); ++i) {
    if (sign > 0)
      checked_add(dst.c[off + i], src.c[i]);
    else
      checked_add(dst.c[off + i], T(-src.c[i]));
  }
  dst.trim();
}

template <class T>
UPoly<T> mul(const UPoly<T>& a, const UPoly<T>& b) {
  UPoly<T> r;
  if (a.zero() || b.zero()) return r;
  r.low = a.low + b.low;
  r.c.assign(a.c.size() + b.c.size() - 1, T(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) checked_add(r.c[i + j], checked_mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

template <class T>
using ZMap = std::unordered_map<LatticePoint, UPoly<T>, LatticePointHash>;

// (1 - u^e z^v)
struct Binomial {
  LatticePoint v{};
  std::int32_t e = 0;
};

inline LatticePoint lp_add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T>
ZMap<T> multiply_binomial(const ZMap<T>& f, const Binomial& b) {
  ZMap<T> r = f;
  for (const auto& [x, c] : f) add_shifted(r[lp_add(x, b.v)], c, b.e, -1);
  for (auto it = r.begin(); it != r.end();) it = it->second.zero() ? r.erase(it) : std::next(it);
  return r;
}

// Q with Q (1 - u^e z^v) = f, solved along lines x0 + t v by
// Q(x) = f(x) + u^e Q(x - v).
template <class T>
ZMap<T> divide_binomial(const ZMap<T>& f, const Binomial& b, int rank) {
  int i0 = 0;
  while (i0 < rank && b.v[i0] == 0) ++i0;
  if (i0 == rank) throw DivisibilityError("division by a binomial with zero exponent");
  auto floordiv = [](std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
  };
  struct Entry {
    std::int64_t t;
    const UPoly<T>* c;
  };
  std::unordered_map<LatticePoint, std::vector<Entry>, LatticePointHash> lines;
  for (const auto& [x, c] : f) {
    std::int64_t t = floordiv(x[i0], b.v[i0]);
    LatticePoint base;
    for (int i = 0; i < kMaxRank; ++i) base[i] = static_cast<std::int32_t>(x[i] - t * b.v[i]);
    lines[base].push_back({t, &c});
  }
  ZMap<T> q;
  for (auto& [base, entries] : lines) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b2) { return a.t < b2.t; });
    UPoly<T> acc;
    std::size_t k = 0;
    const std::int64_t tmax = entries.back().t;
    for (std::int64_t t = entries.front().t; t <= tmax; ++t) {
      UPoly<T> next;
      add_shifted(next, acc, b.e, +1);
      if (k < entries.size() && entries[k].t == t) add_shifted(next, *entries[k++].c, 0, +1);
      acc = std::move(next);
      if (t == tmax) break;
      if (!acc.zero()) {
        LatticePoint x;
        for (int i = 0; i < kMaxRank; ++i) x[i] = static_cast<std::int32_t>(base[i] + t * b.v[i]);
        q[x] = acc;
      }
    }
    if (!acc.zero()) {
      LatticePoint x;
      for (int i = 0; i < kMaxRank; ++i) x[i] = static_cast<std::int32_t>(base[i] + tmax * b.v[i]);
      std::string where = "(";
      for (int i = 0; i < rank; ++i) where += (i ? ", " : "") + std::to_string(x[i]);
      throw DivisibilityError("operator numerator is not divisible by the common denominator; residue at " +
                              where + ")");
    }
  }
  return q;
}

// Everything the W-sum needs, with exponents already scaled by D.
struct KernelPlan {
  int rank = 0;
  LatticePoint beta{};
  bool e_kind = false;
  std::vector<std::int64_t> beta_pairing;  // D (beta, 2 omega'_j)
  std::vector<Binomial> numerator;         // N_beta * L / Den, as binomial factors
  std::vector<Binomial> denominator;       // factors of L (or L_E)
  const std::vector<WeylElement>* weyl = nullptr;
};

template <class T>
class OperatorKernel {
 public:
  explicit OperatorKernel(const KernelPlan& plan) : plan_(plan) {
    poly_[LatticePoint{}] = UPoly<T>::monomial(0, T(1));
    for (const auto& b : plan_.numerator) poly_ = multiply_binomial(poly_, b);
  }

  ZMap<T> apply(const ZMap<T>& f, unsigned workers, std::uint64_t seed) const {
    const int n = plan_.rank;
    // Y = poly * T_beta f   (or poly * (T_beta - 1) f)
    ZMap<T> tf;
    for (const auto& [x, c] : f) {
      std::int64_t e = 0;
      for (int j = 0; j < n; ++j) e += plan_.beta_pairing[j] * x[j];
      UPoly<T>& dst = tf[x];
      add_shifted(dst, c, static_cast<std::int32_t>(e), +1);
      if (plan_.e_kind) add_shifted(dst, c, 0, -1);
    }
    ZMap<T> y;
    for (const auto& [x, c] : tf) {
      if (c.zero()) continue;
      for (const auto& [z, d] : poly_) {
        UPoly<T> prod = mul(c, d);
        add_shifted(y[lp_add(x, z)], prod, 0, +1);
      }
    }
    std::vector<std::pair<LatticePoint, UPoly<T>>> ys;
    for (auto& [x, c] : y)
      if (!c.zero()) ys.emplace_back(x, std::move(c));
    std::sort(ys.begin(), ys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    const auto& W = *plan_.weyl;
    std::vector<std::size_t> order(W.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (seed != 0) {
      std::mt19937_64 rng(seed);
      std::shuffle(order.begin(), order.end(), rng);
    }
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(W.size())));
    std::vector<ZMap<T>> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned wid) {
      try {
        std::size_t lo = order.size() * wid / workers, hi = order.size() * (wid + 1) / workers;
        ZMap<T>& acc = partial[wid];
        for (std::size_t k = lo; k < hi; ++k) {
          const WeylElement& w = W[order[k]];
          const int sign = w.sign();
          for (const auto& [x, c] : ys) {
            // x -> w(x - rho') + rho'
            LatticePoint img{};
            for (int i = 0; i < n; ++i) {
              std::int64_t s = 1;
              for (int j = 0; j < n; ++j) s += static_cast<std::int64_t>(w.weight_matrix[i * n + j]) * (x[j] - 1);
              img[i] = static_cast<std::int32_t>(s);
            }
            add_shifted(acc[img], c, 0, sign);
          }
        }
      } catch (...) {
        errors[wid] = std::current_exception();
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned wid = 0; wid < workers; ++wid) threads.emplace_back(run, wid);
      for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    // Combine in worker order.
    ZMap<T> total = std::move(partial[0]);
    for (unsigned wid = 1; wid < workers; ++wid)
      for (const auto& [x, c] : partial[wid]) add_shifted(total[x], c, 0, +1);
    for (auto it = total.begin(); it != total.end();) it = it->second.zero() ? total.erase(it) : std::next(it);

    for (const auto& b : plan_.denominator) total = divide_binomial(total, b, n);
    return total;
  }

 private:
  KernelPlan plan_;
  ZMap<T> poly_;
};

}  // namespace qsp::detail
