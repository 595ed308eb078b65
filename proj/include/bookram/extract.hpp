#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bookram/book_metrics.hpp"
#include "bookram/graph.hpp"
#include "bookram/rational.hpp"
#include "bookram/search.hpp"

namespace bookram {

enum class Color { red, blue };

struct BookWitness {
  Color color = Color::red;
  int spine_u = 0, spine_v = 0;
  VertexSet pages;

  int page_count() const { return pages.count(); }

  bool validate(const Coloring& c) const {
    Graph side = color == Color::red ? c.red : c.blue();
    if (!side.adjacent(spine_u, spine_v)) return false;
    for (int w : pages.to_vector()) {
      if (w == spine_u || w == spine_v) return false;
      if (!side.adjacent(spine_u, w) || !side.adjacent(spine_v, w)) return false;
    }
    return true;
  }
};

enum class StepStatus { passed, failed, skipped };

struct TraceStep {
  std::string step;
  StepStatus status = StepStatus::passed;
  nlohmann::json data;
};

using ExtractionTrace = std::vector<TraceStep>;

struct ExtractionOutcome {
  enum class Kind { red_book, blue_book, hypothesis_failed };
  Kind result = Kind::hypothesis_failed;
  std::optional<BookWitness> witness;
  std::string failed_step;
  ExtractionTrace trace;
};

inline const char* to_string(StepStatus s) {
  switch (s) {
    case StepStatus::passed: return "passed";
    case StepStatus::failed: return "failed";
    default: return "skipped";
  }
}

inline nlohmann::json trace_to_json(const ExtractionTrace& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : t)
    out.push_back({{"step", s.step}, {"status", to_string(s.status)}, {"data", s.data}});
  return out;
}

namespace detail {

// Best book of one color: spine with the most common neighbors, ties by
// lexicographic spine.
inline std::optional<BookWitness> best_book(const Graph& side, Color color) {
  std::optional<BookWitness> best;
  for (int u = 0; u < side.order(); ++u)
    for (int v = u + 1; v < side.order(); ++v) {
      if (!side.adjacent(u, v)) continue;
      int c = side.common_neighbors(u, v);
      if (!best || c > best->page_count()) {
        best = BookWitness{color, u, v, side.common_neighbor_set(u, v)};
      }
    }
  return best;
}

}  // namespace detail

// Runs the degree/bipartition/averaging argument on a concrete coloring.
// At small orders the argument's hypotheses usually fail; the failing step is
// the outcome, not an error.
inline ExtractionOutcome extract(const Coloring& c, int m) {
  const int N = c.order;
  if (N < 5) throw std::invalid_argument("extract: order must be >= 5");
  const Graph& red = c.red;
  const Graph blue = c.blue();
  ExtractionOutcome out;
  auto step = [&](const std::string& name, StepStatus st, nlohmann::json data) {
    out.trace.push_back({name, st, std::move(data)});
  };

  // 1. bs(R) > m gives the first disjunct outright.
  auto red_best = detail::best_book(red, Color::red);
  int bs_red = red_best ? red_best->page_count() : -1;
  if (red_best && bs_red > m) {
    step("bs_red_check", StepStatus::passed,
         {{"bs_red", bs_red}, {"m", m}, {"branch", "red_book"}});
    out.result = ExtractionOutcome::Kind::red_book;
    out.witness = red_best;
    return out;
  }
  step("bs_red_check", StepStatus::passed, {{"bs_red", bs_red}, {"m", m}});

  // 2. S = high red-degree vertices, strict 9N/20 threshold.
  VertexSet S(N);
  for (int v = 0; v < N; ++v)
    if (20 * red.degree(v) > 9 * N) S.insert(v);
  step("degree_set_S", StepStatus::passed,
       {{"threshold", to_string(Rational(9 * N, 20))}, {"size", S.count()}});

  // 3. |S| > 19N/20 needed for everything downstream.
  if (20 * S.count() <= 19 * N) {
    step("S_size_check", StepStatus::failed,
         {{"size", S.count()}, {"required_exclusive", to_string(Rational(19 * N, 20))}});
    out.failed_step = "S_size_check";
    return out;
  }
  step("S_size_check", StepStatus::passed, {{"size", S.count()}});

  Graph redS = red.induced(S);
  std::vector<int> labels = red.induced_labels(S);

  // 4. R[S] must be triangle-free; on a triangle, report the degree-sum
  //    inequality evaluated on the actual data.
  if (auto tri = has_triangle(redS)) {
    std::array<int, 3> t{labels[(*tri)[0]], labels[(*tri)[1]], labels[(*tri)[2]]};
    VertexSet T(N), U = VertexSet::full(N);
    for (int v : t) {
      T.insert(v);
      U.erase(v);
    }
    long long ertu = edges_between(red, T, U);
    step("triangle_free_check", StepStatus::failed,
         {{"triangle", {t[0], t[1], t[2]}},
          {"lhs_3(9N/20-2)", to_string(Rational(27 * N, 20) - 6)},
          {"e_R(T,U)", ertu},
          {"rhs_N+3(m-1)", N + 3 * (m - 1)}});
    out.failed_step = "triangle_free_check";
    return out;
  }
  step("triangle_free_check", StepStatus::passed, {});

  // 5. Bipartition of R[S]; if it fails, the AES precondition is reported.
  auto parts = is_bipartite(redS);
  if (!parts) {
    step("bipartition", StepStatus::failed,
         {{"min_degree", redS.min_degree()},
          {"required_exclusive_2|S|/5", to_string(Rational(2 * redS.order(), 5))}});
    out.failed_step = "bipartition";
    return out;
  }
  VertexSet S1(N), S2(N);
  for (int i : parts->first.to_vector()) S1.insert(labels[i]);
  for (int i : parts->second.to_vector()) S2.insert(labels[i]);
  step("bipartition", StepStatus::passed,
       {{"S1_size", S1.count()}, {"S2_size", S2.count()}});

  // 6. T1: blue-adjacent to all of S1 (self excluded); T2 likewise on the rest.
  VertexSet T1(N), T2(N);
  for (int v = 0; v < N; ++v) {
    VertexSet red_in_S1 = red.neighbors(v) & S1;
    if (red_in_S1.empty()) T1.insert(v);
  }
  for (int v = 0; v < N; ++v) {
    if (T1.contains(v)) continue;
    VertexSet red_in_S2 = red.neighbors(v) & S2;
    if (red_in_S2.empty()) T2.insert(v);
  }
  VertexSet W1 = S1 | T1, W2 = S2 | T2;
  if (W1.intersects(W2)) throw std::logic_error("extract: W1 and W2 overlap");
  VertexSet X = VertexSet::full(N) - W1 - W2;
  step("partition_W1_W2_X", StepStatus::passed,
       {{"T1_size", T1.count()},
        {"T2_size", T2.count()},
        {"W1_size", W1.count()},
        {"W2_size", W2.count()},
        {"X_size", X.count()}});

  auto scan_pairs = [&](const VertexSet& side, const VertexSet& page_pool)
      -> std::optional<BookWitness> {
    std::optional<BookWitness> best;
    auto verts = side.to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        int u = verts[i], v = verts[j];
        if (!blue.adjacent(u, v)) continue;
        VertexSet pages = blue.common_neighbor_set(u, v) & page_pool;
        if (!best || pages.count() > best->page_count())
          best = BookWitness{Color::blue, u, v, pages};
      }
    return best;
  };

  if (X.empty()) {
    // 7. pick the larger side; the blue book lives inside its W.
    bool first = W1.count() >= W2.count();
    auto best = scan_pairs(first ? S1 : S2, first ? W1 : W2);
    if (!best) best = scan_pairs(first ? S2 : S1, first ? W2 : W1);
    if (!best) {
      step("X_empty_branch", StepStatus::failed, {{"reason", "no blue spine inside S"}});
      out.failed_step = "X_empty_branch";
      return out;
    }
    step("X_empty_branch", StepStatus::passed,
         {{"chosen_side", first ? 1 : 2}, {"pages", best->page_count()}});
    out.result = ExtractionOutcome::Kind::blue_book;
    out.witness = best;
    return out;
  }
  step("X_empty_branch", StepStatus::skipped, {});

  // 8. averaging branch: scan every spine in S1 and S2, pages over all of V;
  //    record the averaged lower bounds the proof derives.
  VertexSet all = VertexSet::full(N);
  long long e1x = edges_between(red, S1, X), e2x = edges_between(red, S2, X);
  nlohmann::json data;
  if (S1.count() > 0)
    data["avg_bound_S1"] =
        to_string(Rational(S1.count() + T1.count() + X.count() - 2) -
                  Rational(2 * e1x, S1.count()));
  if (S2.count() > 0)
    data["avg_bound_S2"] =
        to_string(Rational(S2.count() + T2.count() + X.count() - 2) -
                  Rational(2 * e2x, S2.count()));
  data["red_side_bound_e_R(S,X)/|X|-|S|/5"] =
      to_string(Rational(e1x + e2x, X.count()) - Rational(S.count(), 5));
  data["2m"] = 2 * m;
  auto best1 = scan_pairs(S1, all), best2 = scan_pairs(S2, all);
  std::optional<BookWitness> best = best1;
  if (best2 && (!best || best2->page_count() > best->page_count())) best = best2;
  if (!best) {
    data["reason"] = "no blue spine inside S1 or S2";
    step("averaging_branch", StepStatus::failed, data);
    out.failed_step = "averaging_branch";
    return out;
  }
  data["pages"] = best->page_count();
  step("averaging_branch", StepStatus::passed, data);
  out.result = ExtractionOutcome::Kind::blue_book;
  out.witness = best;
  return out;
}

struct Claim1Record {
  std::array<int, 4> cycle{};  // u, v, w, z in cycle order
  VertexSet blue_common;
  std::pair<int, int> red_edge{};  // cycle edge with the most red pages
  int red_pages = 0;
};

// Hunts an induced red C4 whose endpoints share at least 4m+1 blue neighbors.
inline std::optional<Claim1Record> claim1_scan(const Coloring& c, int m) {
  const Graph& red = c.red;
  const Graph blue = c.blue();
  const int N = c.order;
  for (int u = 0; u < N; ++u)
    for (int w = u + 1; w < N; ++w) {
      if (red.adjacent(u, w)) continue;
      auto diag = red.common_neighbor_set(u, w).to_vector();
      for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
          int v = diag[i], z = diag[j];
          if (red.adjacent(v, z)) continue;
          VertexSet common = blue.common_neighbor_set(u, v) &
                             blue.common_neighbor_set(w, z);
          if (common.count() < 4 * m + 1) continue;
          Claim1Record rec;
          rec.cycle = {u, v, w, z};
          rec.blue_common = common;
          rec.red_pages = -1;
          std::array<std::pair<int, int>, 4> edges{{{u, v}, {v, w}, {w, z}, {z, u}}};
          for (auto [a, b] : edges) {
            int pages = red.common_neighbors(a, b);
            if (pages > rec.red_pages) {
              rec.red_pages = pages;
              rec.red_edge = {std::min(a, b), std::max(a, b)};
            }
          }
          return rec;
        }
    }
  return std::nullopt;
}

namespace detail {

inline bool has_clique(const Graph& g, int r) {
  if (r <= 0) return true;
  if (r == 1) return g.order() >= 1;
  std::vector<int> verts;
  std::function<bool(std::vector<int>&, const VertexSet&)> ext =
      [&](std::vector<int>& cur, const VertexSet& cand) -> bool {
    if ((int)cur.size() == r) return true;
    if ((int)cur.size() + cand.count() < r) return false;
    for (int v : cand.to_vector()) {
      cur.push_back(v);
      VertexSet next = cand & g.neighbors(v);
      for (int x = 0; x <= v; ++x)
        if (next.contains(x)) next.erase(x);
      if (ext(cur, next)) return true;
      cur.pop_back();
    }
    return false;
  };
  std::vector<int> cur;
  return ext(cur, VertexSet::full(g.order()));
}

inline bool colorable(const Graph& g, int k) {
  const int n = g.order();
  if (n == 0) return true;
  if (k >= n) return true;
  std::vector<int> color(n, -1);
  // DSATUR-ordered DFS
  std::function<bool()> go = [&]() -> bool {
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      int sat = 0;
      unsigned used = 0;
      for (int u : g.neighbors(v).to_vector())
        if (color[u] != -1 && !(used & (1u << color[u]))) {
          used |= 1u << color[u];
          ++sat;
        }
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (pick == -1) return true;
    unsigned used = 0;
    int max_seen = 0;
    for (int u = 0; u < n; ++u)
      if (color[u] != -1) max_seen = std::max(max_seen, color[u] + 1);
    for (int u : g.neighbors(pick).to_vector())
      if (color[u] != -1) used |= 1u << color[u];
    // symmetry: allow at most one brand-new color
    int limit = std::min(k, max_seen + 1);
    for (int col = 0; col < limit; ++col) {
      if (used & (1u << col)) continue;
      color[pick] = col;
      if (go()) return true;
      color[pick] = -1;
    }
    return false;
  };
  return go();
}

inline int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  int lo = 1;
  while (!colorable(g, lo)) ++lo;
  return lo;
}

}  // namespace detail

struct AesTriple {
  bool no_kr = false;          // (i)  K_r not a subgraph
  bool degree_above = false;   // (ii) min degree > (3r-7)n/(3r-4)
  bool chromatic_ge_r = false; // (iii) chi >= r (r = 3: not bipartite)
};

inline AesTriple aes_check(const Graph& g, int r) {
  if (r < 3) throw std::invalid_argument("aes_check: r must be >= 3");
  if (r > 3 && g.order() > 30)
    throw std::invalid_argument("aes_check: order cap 30 for exact chromatic number");
  AesTriple t;
  t.no_kr = !detail::has_clique(g, r);
  t.degree_above = (long long)g.min_degree() * (3 * r - 4) > (long long)(3 * r - 7) * g.order();
  if (r == 3)
    t.chromatic_ge_r = !is_bipartite(g).has_value();
  else
    t.chromatic_ge_r = detail::chromatic_number(g) >= r;
  if (t.no_kr && t.degree_above && t.chromatic_ge_r)
    throw std::logic_error("aes_check: all three properties hold; implementation bug");
  return t;
}

}  // namespace bookram
