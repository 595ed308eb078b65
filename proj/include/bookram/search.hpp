#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "bookram/book_metrics.hpp"
#include "bookram/graph.hpp"

namespace bookram {

// Red/blue 2-coloring of E(K_N), stored as the red graph.
struct Coloring {
  int order = 0;
  Graph red;

  Graph blue() const { return red.complement(); }
};

enum class Arrowing { arrows, does_not_arrow, unknown };

struct SearchReport {
  int N = 0, m = 0, n = 0;
  Arrowing answer = Arrowing::unknown;
  std::optional<Coloring> witness;
  long long nodes_explored = 0;
  double elapsed_seconds = 0;
};

constexpr int kDefaultSearchCap = 10;

namespace detail {

// Exhaustive DFS over edge slots in lex order with incremental
// common-neighbor counters per color.
class ArrowsSearcher {
 public:
  ArrowsSearcher(int N, int m, int n)
      : N_(N), lim_{m, n}, col_(N * N, 0), cnt_{std::vector<int>(N * N, 0),
                                                std::vector<int>(N * N, 0)} {
    for (int u = 0; u < N; ++u)
      for (int v = u + 1; v < N; ++v) edges_.emplace_back(u, v);
  }

  // true iff some completed coloring avoids both target books
  bool find_good_coloring() { return dfs(0); }

  long long nodes() const { return nodes_; }

  Graph red_witness() const {
    std::vector<std::pair<int, int>> red;
    for (auto [u, v] : edges_)
      if (col_[u * N_ + v] == 1) red.emplace_back(u, v);
    return Graph(N_, red);
  }

 private:
  bool dfs(std::size_t k) {
    if (k == edges_.size()) return true;
    ++nodes_;
    auto [u, v] = edges_[k];
    for (int c = 0; c < 2; ++c) {
      // vertex-0 canonicalization: reds precede blues along row 0
      if (u == 0 && v >= 2 && c == 0 && col_[v - 1] == 2) continue;
      if (!assign(u, v, c)) {
        if (dfs(k + 1)) return true;
      }
      unassign(u, v, c);
    }
    return false;
  }

  // Colors uv and updates counters; returns true when a monochromatic
  // target book appears among decided edges.
  bool assign(int u, int v, int c) {
    col_[u * N_ + v] = col_[v * N_ + u] = int8_t(c + 1);
    auto& cnt = cnt_[c];
    bool viol = cnt[u * N_ + v] >= lim_[c];
    for (int w = 0; w < N_; ++w) {
      if (w == u || w == v) continue;
      if (col_[v * N_ + w] == c + 1) {
        int x = ++cnt[u * N_ + w];
        cnt[w * N_ + u] = x;
        if (col_[u * N_ + w] == c + 1 && x >= lim_[c]) viol = true;
      }
      if (col_[u * N_ + w] == c + 1) {
        int x = ++cnt[v * N_ + w];
        cnt[w * N_ + v] = x;
        if (col_[v * N_ + w] == c + 1 && x >= lim_[c]) viol = true;
      }
    }
    return viol;
  }

  void unassign(int u, int v, int c) {
    auto& cnt = cnt_[c];
    for (int w = 0; w < N_; ++w) {
      if (w == u || w == v) continue;
      if (col_[v * N_ + w] == c + 1) cnt[w * N_ + u] = --cnt[u * N_ + w];
      if (col_[u * N_ + w] == c + 1) cnt[w * N_ + v] = --cnt[v * N_ + w];
    }
    col_[u * N_ + v] = col_[v * N_ + u] = 0;
  }

  int N_;
  int lim_[2];
  std::vector<std::pair<int, int>> edges_;
  std::vector<int8_t> col_;
  std::vector<int> cnt_[2];
  long long nodes_ = 0;
};

}  // namespace detail

inline SearchReport arrows(int N, int m, int n, bool force = false,
                           int cap = kDefaultSearchCap) {
  if (N < 2 || m < 1 || n < 1)
    throw std::invalid_argument("arrows: need N >= 2 and m, n >= 1");
  if (N > cap && !force)
    throw std::invalid_argument("arrows: N exceeds feasibility cap " +
                                std::to_string(cap) + " (use force)");
  auto t0 = std::chrono::steady_clock::now();
  detail::ArrowsSearcher s(N, m, n);
  SearchReport r;
  r.N = N;
  r.m = m;
  r.n = n;
  if (s.find_good_coloring()) {
    r.answer = Arrowing::does_not_arrow;
    r.witness = Coloring{N, s.red_witness()};
  } else {
    r.answer = Arrowing::arrows;
  }
  r.nodes_explored = s.nodes();
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Annealing cost: total page overflow over both colors.
namespace detail {

class Annealer {
 public:
  Annealer(int N, int m, int n, std::uint64_t seed)
      : N_(N), m_(m), n_(n), rng_(seed), red_(N * N, 0),
        cnt_{std::vector<int>(N * N, 0), std::vector<int>(N * N, 0)} {}

  std::optional<Graph> run(long long budget) {
    randomize();
    double t = 2.0;
    const double alpha = budget > 1 ? std::pow(0.01 / 2.0, 1.0 / double(budget)) : 1.0;
    long long best = cost_, stale = 0;
    const long long stagnation = std::max<long long>(1, budget / 10);
    std::uniform_int_distribution<int> pick(0, N_ - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (long long step = 0; step < budget && cost_ > 0; ++step, t *= alpha) {
      int u = pick(rng_), v = pick(rng_);
      if (u == v) continue;
      long long before = cost_;
      flip(u, v);
      long long delta = cost_ - before;
      if (delta > 0 && unit(rng_) > std::exp(-double(delta) / t)) {
        flip(u, v);  // reject
      }
      if (cost_ < best) {
        best = cost_;
        stale = 0;
      } else if (++stale > stagnation) {
        randomize();
        best = cost_;
        stale = 0;
        t = 2.0;
      }
    }
    if (cost_ != 0) return std::nullopt;
    std::vector<std::pair<int, int>> red;
    for (int u = 0; u < N_; ++u)
      for (int v = u + 1; v < N_; ++v)
        if (red_[u * N_ + v]) red.emplace_back(u, v);
    return Graph(N_, red);
  }

 private:
  void randomize() {
    std::uniform_int_distribution<int> coin(0, 1);
    for (int u = 0; u < N_; ++u)
      for (int v = u + 1; v < N_; ++v)
        red_[u * N_ + v] = red_[v * N_ + u] = int8_t(coin(rng_));
    recount();
  }

  void recount() {
    for (auto& c : cnt_) std::fill(c.begin(), c.end(), 0);
    for (int u = 0; u < N_; ++u)
      for (int v = u + 1; v < N_; ++v)
        for (int w = 0; w < N_; ++w) {
          if (w == u || w == v) continue;
          if (red_[u * N_ + w] && red_[v * N_ + w]) {
            ++cnt_[0][u * N_ + v];
            ++cnt_[0][v * N_ + u];
          }
          if (!red_[u * N_ + w] && !red_[v * N_ + w]) {
            ++cnt_[1][u * N_ + v];
            ++cnt_[1][v * N_ + u];
          }
        }
    cost_ = 0;
    for (int u = 0; u < N_; ++u)
      for (int v = u + 1; v < N_; ++v) cost_ += edge_cost(u, v);
  }

  long long edge_cost(int u, int v) const {
    if (red_[u * N_ + v])
      return std::max(0, cnt_[0][u * N_ + v] - (m_ - 1));
    return std::max(0, cnt_[1][u * N_ + v] - (n_ - 1));
  }

  void flip(int u, int v) {
    for (int w = 0; w < N_; ++w) {
      if (w == u || w == v) continue;
      cost_ -= edge_cost(u, w) + edge_cost(v, w);
    }
    cost_ -= edge_cost(u, v);
    bool to_red = !red_[u * N_ + v];
    for (int w = 0; w < N_; ++w) {
      if (w == u || w == v) continue;
      int rvw = red_[v * N_ + w], ruw = red_[u * N_ + w];
      // pair (u,w): v switches color as a common-neighbor candidate
      if (to_red) {
        if (rvw) ++cnt_[0][u * N_ + w], ++cnt_[0][w * N_ + u];
        else --cnt_[1][u * N_ + w], --cnt_[1][w * N_ + u];
        if (ruw) ++cnt_[0][v * N_ + w], ++cnt_[0][w * N_ + v];
        else --cnt_[1][v * N_ + w], --cnt_[1][w * N_ + v];
      } else {
        if (rvw) --cnt_[0][u * N_ + w], --cnt_[0][w * N_ + u];
        else ++cnt_[1][u * N_ + w], ++cnt_[1][w * N_ + u];
        if (ruw) --cnt_[0][v * N_ + w], --cnt_[0][w * N_ + v];
        else ++cnt_[1][v * N_ + w], ++cnt_[1][w * N_ + v];
      }
    }
    red_[u * N_ + v] = red_[v * N_ + u] = int8_t(to_red);
    for (int w = 0; w < N_; ++w) {
      if (w == u || w == v) continue;
      cost_ += edge_cost(u, w) + edge_cost(v, w);
    }
    cost_ += edge_cost(u, v);
  }

  int N_, m_, n_;
  std::mt19937_64 rng_;
  std::vector<int8_t> red_;
  std::vector<int> cnt_[2];
  long long cost_ = 0;
};

}  // namespace detail

inline std::optional<Coloring> find_witness(int N, int m, int n,
                                            long long budget = 1000000,
                                            std::uint64_t seed = 0) {
  if (N < 1 || m < 1 || n < 1)
    throw std::invalid_argument("find_witness: need N, m, n >= 1");
  if (N == 1) return Coloring{1, Graph(1)};
  detail::Annealer a(N, m, n, seed);
  auto red = a.run(budget);
  if (!red) return std::nullopt;
  return Coloring{N, *red};
}

struct RamseyNumberResult {
  std::optional<long long> value;
  std::vector<SearchReport> reports;
};

// Smallest N <= max_order that arrows (B_m, B_n), by ascending exhaustive search.
inline RamseyNumberResult ramsey_number(int m, int n, int max_order = kDefaultSearchCap,
                                        bool force = false) {
  RamseyNumberResult out;
  for (int N = 2; N <= max_order; ++N) {
    out.reports.push_back(arrows(N, m, n, force));
    if (out.reports.back().answer == Arrowing::arrows) {
      out.value = N;
      return out;
    }
  }
  return out;
}

}  // namespace bookram
