#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bookram {

class Graph;

// Fixed-capacity bitset over the vertex indices of a graph of known order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int order)
      : order_(order), words_((order + 63) / 64, 0) {}

  int order() const { return order_; }

  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet&) const = default;

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  static VertexSet full(int order) {
    VertexSet s(order);
    for (int i = 0; i < order; ++i) s.insert(i);
    return s;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(int(i) * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  friend class Graph;
  void check(int v) const {
    if (v < 0 || v >= order_) throw std::out_of_range("VertexSet: vertex out of range");
  }
  int order_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph with one bitset row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order, const std::vector<std::pair<int, int>>& edges = {})
      : n_(order), words_((order + 63) / 64), adj_(std::size_t(n_) * words_, 0) {
    if (order < 0) throw std::invalid_argument("Graph: negative order");
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }
  int words_per_row() const { return words_; }

  bool adjacent(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  int degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int i = 0; i < words_; ++i) d += std::popcount(r[i]);
    return d;
  }

  int min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
  }

  long long edge_count() const {
    long long s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  VertexSet neighbors(int v) const {
    bounds_check(v);
    VertexSet s(n_);
    const std::uint64_t* r = row(v);
    std::copy(r, r + words_, s.words_.begin());
    return s;
  }

  int common_neighbors(int u, int v) const {
    bounds_check(u);
    bounds_check(v);
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    const std::uint64_t *a = row(u), *b = row(v);
    int c = 0;
    for (int i = 0; i < words_; ++i) c += std::popcount(a[i] & b[i]);
    return c;
  }

  VertexSet common_neighbor_set(int u, int v) const {
    bounds_check(u);
    bounds_check(v);
    VertexSet s(n_);
    const std::uint64_t *a = row(u), *b = row(v);
    for (int i = 0; i < words_; ++i) s.words_[i] = a[i] & b[i];
    return s;
  }

  Graph complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
  }

  // Vertices of x relabeled to 0..|x|-1 in increasing original index.
  Graph induced(const VertexSet& x) const {
    if (x.order() != n_) throw std::invalid_argument("induced: set order mismatch");
    std::vector<int> verts = x.to_vector();
    Graph g(int(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (adjacent(verts[i], verts[j])) g.add_edge(int(i), int(j));
    return g;
  }

  // Original labels of induced(x)'s vertices, by new index.
  std::vector<int> induced_labels(const VertexSet& x) const { return x.to_vector(); }

  const std::uint64_t* row(int v) const { return adj_.data() + std::size_t(v) * words_; }

  bool operator==(const Graph&) const = default;

  // --- named constructions used all over the test and search code ---
  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }
  static Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
      for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
  }
  static Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
  }
  static Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
  }
  static Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
      g.add_edge(v, (v + 1) % 5);
      g.add_edge(v, v + 5);
      g.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    return g;
  }

 private:
  friend Graph from_graph6(std::string_view);

  void bounds_check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }
  void add_edge(int u, int v) {
    bounds_check(u);
    bounds_check(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    adj_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
};

// BFS 2-coloring; both classes returned are independent sets.
inline std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  VertexSet a(n), b(n);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u).to_vector()) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) (side[v] == 0 ? a : b).insert(v);
  return std::make_pair(a, b);
}

inline std::optional<std::array<int, 3>> has_triangle(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      auto c = g.common_neighbor_set(u, v).to_vector();
      if (!c.empty()) {
        std::array<int, 3> t{u, v, c[0]};
        std::sort(t.begin(), t.end());
        return t;
      }
    }
  return std::nullopt;
}

// Edges with one endpoint in u and the other in w; the sets must be disjoint.
inline long long edges_between(const Graph& g, const VertexSet& u, const VertexSet& w) {
  if (u.intersects(w)) throw std::invalid_argument("edges_between: sets overlap");
  long long total = 0;
  for (int x : u.to_vector()) {
    const std::uint64_t* r = g.row(x);
    const auto& ww = w.words();
    for (std::size_t i = 0; i < ww.size(); ++i) total += std::popcount(r[i] & ww[i]);
  }
  return total;
}

}  // namespace bookram
