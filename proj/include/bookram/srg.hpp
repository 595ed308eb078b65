#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bookram/book_metrics.hpp"
#include "bookram/graph.hpp"
#include "bookram/graph6.hpp"

namespace bookram {

struct SrgParams {
  long long v = 0, k = 0, lambda = 0, mu = 0;

  bool feasible() const {
    return 0 <= k && k < v && lambda >= 0 && mu >= 0 && mu <= k &&
           (k == 0 || lambda <= k - 1) &&
           k * (k - lambda - 1) == (v - k - 1) * mu;
  }
  bool operator==(const SrgParams&) const = default;
};

namespace gf {

// Tiny GF(p^e) built from the lexicographically smallest monic irreducible
// polynomial, found by trial division. Elements are indices 0..q-1 whose
// base-p digits are the polynomial coefficients (constant term first).
class Field {
 public:
  Field(long long p, int e) : p_(p), e_(e) {
    q_ = 1;
    for (int i = 0; i < e; ++i) q_ *= p;
    if (e_ > 1) find_modulus();
  }

  long long q() const { return q_; }

  long long sub(long long a, long long b) const {
    long long out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
      long long d = (a % p_ - b % p_ + p_) % p_;
      out += d * mult;
      mult *= p_;
      a /= p_;
      b /= p_;
    }
    return out;
  }

  long long mul(long long a, long long b) const {
    std::vector<long long> prod(2 * e_ - 1, 0);
    std::vector<long long> da = digits(a), db = digits(b);
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce modulo the field polynomial x^e = -modulus_
    for (int d = 2 * e_ - 2; d >= e_; --d) {
      long long c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (int i = 0; i < e_; ++i)
        prod[d - e_ + i] = (prod[d - e_ + i] + c * (p_ - modulus_[i])) % p_;
    }
    long long out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
      out += prod[i] * mult;
      mult *= p_;
    }
    return out;
  }

 private:
  std::vector<long long> digits(long long a) const {
    std::vector<long long> d(e_);
    for (int i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  // f encoded as its e_ lower coefficients; leading coefficient 1 implicit.
  bool is_irreducible(const std::vector<long long>& f) const {
    // trial division by every monic polynomial of degree 1..e/2
    for (int d = 1; 2 * d <= e_; ++d) {
      long long count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (long long t = 0; t < count; ++t) {
        std::vector<long long> g(d + 1);
        long long tt = t;
        for (int i = 0; i < d; ++i) {
          g[i] = tt % p_;
          tt /= p_;
        }
        g[d] = 1;
        // remainder of f (degree e_) mod g
        std::vector<long long> r(f);
        r.push_back(1);
        for (int lead = e_; lead >= d; --lead) {
          long long c = r[lead];
          if (c == 0) continue;
          for (int i = 0; i <= d; ++i)
            r[lead - d + i] = ((r[lead - d + i] - c * g[i]) % p_ + p_) % p_;
        }
        bool zero = true;
        for (int i = 0; i < d; ++i)
          if (r[i] != 0) zero = false;
        if (zero) return false;
      }
    }
    return true;
  }

  void find_modulus() {
    long long count = 1;
    for (int i = 0; i < e_; ++i) count *= p_;
    for (long long t = 0; t < count; ++t) {
      std::vector<long long> f(e_);
      long long tt = t;
      for (int i = 0; i < e_; ++i) {
        f[i] = tt % p_;
        tt /= p_;
      }
      if (is_irreducible(f)) {
        modulus_ = f;
        return;
      }
    }
    throw std::logic_error("gf::Field: no irreducible polynomial found");
  }

  long long p_, q_;
  int e_;
  std::vector<long long> modulus_;
};

}  // namespace gf

namespace detail {
inline std::optional<std::pair<long long, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    long long t = q;
    int e = 0;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (t != 1) return std::nullopt;
    return std::make_pair(p, e);
  }
  return std::make_pair(q, 1);  // q itself prime
}
}  // namespace detail

// Paley graph on GF(q): x ~ y iff x - y is a nonzero square.
inline Graph paley(long long q) {
  auto pe = detail::prime_power(q);
  if (!pe) throw std::invalid_argument("paley: q is not a prime power");
  if (q % 4 != 1) throw std::invalid_argument("paley: q must be 1 mod 4");
  gf::Field f(pe->first, pe->second);
  std::vector<char> square(q, 0);
  for (long long x = 1; x < q; ++x) square[f.mul(x, x)] = 1;
  // q = 1 mod 4 makes -1 a square, so x-y and y-x agree on squareness
  for (long long s = 1; s < q; ++s)
    if (square[s] != square[f.sub(0, s)])
      throw std::logic_error("paley: square set not symmetric");
  Graph g(int(q), [&] {
    std::vector<std::pair<int, int>> edges;
    for (long long x = 0; x < q; ++x)
      for (long long y = x + 1; y < q; ++y)
        if (square[f.sub(x, y)]) edges.emplace_back(int(x), int(y));
    return edges;
  }());
  return g;
}

inline std::optional<SrgParams> verify_srg(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  int k = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  std::optional<long long> lambda, mu;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      long long c = g.common_neighbors(u, v);
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot)
        slot = c;
      else if (*slot != c)
        return std::nullopt;
    }
  SrgParams p{n, k, lambda.value_or(0), mu.value_or(0)};
  if (!p.feasible()) return std::nullopt;
  return p;
}

struct SrgBookBound {
  long long m = 0, n = 0, bound = 0;
};

// r(B_{lambda+1}, B_{v-2k+mu-1}) >= v+1 for any graph with these parameters.
inline SrgBookBound srg_book_bound(const SrgParams& p) {
  if (!p.feasible()) throw std::invalid_argument("srg_book_bound: infeasible parameters");
  SrgBookBound b{p.lambda + 1, p.v - 2 * p.k + p.mu - 1, p.v + 1};
  if (b.m < 1 || b.n < 1)
    throw std::invalid_argument("srg_book_bound: derived page count below 1");
  return b;
}

struct LowerBoundCertificate {
  long long m = 0, n = 0;  // claim: r(B_m, B_n) >= bound
  long long bound = 0;
  long long order = 0;
  std::optional<int> red_bs, blue_bs;  // absent when that side is edgeless
  bool degenerate = false;             // some side had no edges at all
  std::string graph6;
  std::optional<SrgParams> srg;
};

inline LowerBoundCertificate certify(const Graph& g) {
  LowerBoundCertificate c;
  c.order = g.order();
  c.bound = g.order() + 1;
  c.red_bs = book_size(g);
  c.blue_bs = book_size(g.complement());
  c.degenerate = !c.red_bs || !c.blue_bs;
  c.m = c.red_bs.value_or(0) + 1;
  c.n = c.blue_bs.value_or(0) + 1;
  c.graph6 = to_graph6(g);
  c.srg = verify_srg(g);
  return c;
}

}  // namespace bookram
