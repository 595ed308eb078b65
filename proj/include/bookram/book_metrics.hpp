#pragma once

#include <optional>
#include <string>

#include "bookram/graph.hpp"
#include "bookram/rational.hpp"

namespace bookram {

// Largest number of pages over all spines; absent when g has no edges.
inline std::optional<int> book_size(const Graph& g) {
  std::optional<int> best;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) {
        int c = g.common_neighbors(u, v);
        if (!best || c > *best) best = c;
      }
  return best;
}

struct SubgraphCensus {
  long long c4 = 0;        // induced 4-cycles
  long long k4 = 0;        // K4s
  long long b2 = 0;        // induced diamonds (K4 minus an edge)
  long long h = 0;         // induced C4 + isolated vertex
  long long pair_sum = 0;  // sum over all pairs of C(c(u,v), 2)
  long long edge_sum = 0;  // same sum over edges only
};

namespace detail {
inline long long choose2(long long c) { return c * (c - 1) / 2; }

// Pairs {w,x} inside `cand` that are adjacent in g, w < x.
inline long long adjacent_pairs(const Graph& g, const VertexSet& cand) {
  long long total = 0;
  for (int w : cand.to_vector()) {
    const std::uint64_t* r = g.row(w);
    const auto& cw = cand.words();
    for (std::size_t i = std::size_t(w >> 6); i < cw.size(); ++i) {
      std::uint64_t m = r[i] & cw[i];
      if (i == std::size_t(w >> 6)) m &= ~((std::uint64_t{2} << (w & 63)) - 1);
      total += std::popcount(m);
    }
  }
  return total;
}
}  // namespace detail

// Number of induced C4 + K1 subgraphs. Every induced C4 is enumerated via its
// two nonadjacent diagonals, so each accumulation is halved at the end.
inline long long count_h(const Graph& g) {
  const int n = g.order();
  long long twice = 0;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      VertexSet c = g.common_neighbor_set(u, w);
      auto cv = c.to_vector();
      for (std::size_t i = 0; i < cv.size(); ++i)
        for (std::size_t j = i + 1; j < cv.size(); ++j) {
          int v = cv[i], z = cv[j];
          if (g.adjacent(v, z)) continue;
          VertexSet touched = g.neighbors(u) | g.neighbors(v) | g.neighbors(w) | g.neighbors(z);
          touched.insert(u);
          touched.insert(v);
          touched.insert(w);
          touched.insert(z);
          twice += n - touched.count();
        }
    }
  return twice / 2;
}

inline SubgraphCensus census(const Graph& g) {
  const int n = g.order();
  SubgraphCensus s;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      long long pairs = detail::choose2(g.common_neighbors(u, v));
      s.pair_sum += pairs;
      if (g.adjacent(u, v)) {
        s.edge_sum += pairs;
        VertexSet common = g.common_neighbor_set(u, v);
        long long adj = detail::adjacent_pairs(g, common);
        s.b2 += pairs - adj;  // spine edge counts each diamond once
        // K4s via their lexicographically smallest edge
        VertexSet above = common;
        for (int x = 0; x <= v; ++x)
          if (above.contains(x)) above.erase(x);
        s.k4 += detail::adjacent_pairs(g, above);
      }
    }
  s.c4 = s.pair_sum / 2 - s.edge_sum + 3 * s.k4;
  s.h = count_h(g);
  return s;
}

// Maximum possible number of induced C4s in any graph of the given order.
inline long long c4_max_bound(long long n) {
  if (n < 0) throw std::invalid_argument("c4_max_bound: negative order");
  return detail::choose2(n / 2) * detail::choose2((n + 1) / 2);
}

// Minimum order (exclusive) for the C4-count lower bound to apply.
inline Rational lemma1_threshold(const Rational& lambda) {
  if (lambda <= 0 || lambda >= 1)
    throw std::invalid_argument("lemma1_threshold: lambda must be in (0,1)");
  return Rational(5) * (2 * lambda + 1) / (lambda * lambda);
}

inline Rational lemma1_rhs(long long p, long long q, const Rational& lambda, long long m) {
  if (p < 0 || q < 0 || m < 0)
    throw std::invalid_argument("lemma1_rhs: negative argument");
  if (lambda <= 0 || lambda >= 1)
    throw std::invalid_argument("lemma1_rhs: lambda must be in (0,1)");
  Rational l3 = lambda * lambda * lambda;
  return (l3 * p * p / 5 - Rational(m * m, 2)) * q;
}

struct Lemma1Verdict {
  bool hypotheses_met = false;
  std::string failed_hypothesis;  // "min_degree" or "order_threshold"
  long long p = 0, q = 0;
  long long m = 0;  // book size, 0 when absent
  long long c4 = 0;
  Rational bound;
  bool holds = false;  // c4 > bound
};

inline Lemma1Verdict lemma1_check(const Graph& g, const Rational& lambda) {
  Lemma1Verdict v;
  v.p = g.order();
  v.q = g.edge_count();
  if (Rational(g.min_degree()) < lambda * v.p) {
    v.failed_hypothesis = "min_degree";
    return v;
  }
  if (Rational(v.p) <= lemma1_threshold(lambda)) {
    v.failed_hypothesis = "order_threshold";
    return v;
  }
  v.hypotheses_met = true;
  v.m = book_size(g).value_or(0);
  v.c4 = census(g).c4;
  v.bound = lemma1_rhs(v.p, v.q, lambda, v.m);
  v.holds = Rational(v.c4) > v.bound;
  return v;
}

}  // namespace bookram
