#include <doctest.h>

#include <random>

#include "bookram/book_metrics.hpp"
#include "bookram/graph.hpp"
#include "oracles.hpp"

using namespace bookram;

TEST_CASE("book_size basics") {
  for (int n = 2; n <= 8; ++n) CHECK(book_size(Graph::complete(n)) == n - 2);
  CHECK(book_size(Graph::cycle(5)) == 0);
  CHECK_FALSE(book_size(Graph(4)).has_value());
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    Graph g = oracle::random_graph(2 + int(rng() % 12), 0.5, rng());
    CHECK(book_size(g) == oracle::book_size_brute(g));
  }
}

TEST_CASE("census on named graphs") {
  SubgraphCensus c = census(Graph::cycle(4));
  CHECK(c.c4 == 1);
  CHECK(c.k4 == 0);
  CHECK(c.b2 == 0);
  CHECK(c.pair_sum == 2);
  CHECK(c.edge_sum == 0);

  c = census(Graph::complete(4));
  CHECK(c.c4 == 0);
  CHECK(c.k4 == 1);
  CHECK(c.b2 == 0);
  CHECK(c.pair_sum == 6);
  CHECK(c.edge_sum == 6);

  c = census(Graph::complete_bipartite(3, 3));
  CHECK(c.c4 == 9);
  CHECK(c.k4 == 0);
  CHECK(c.b2 == 0);

  CHECK(census(Graph::petersen()).c4 == 0);
}

TEST_CASE("census equals brute-force 4-subset classification") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 80; ++i) {
    Graph g = oracle::random_graph(4 + int(rng() % 6), 0.5, rng());
    SubgraphCensus c = census(g);
    oracle::Census4 o = oracle::census_by_subsets(g);
    CHECK(c.c4 == o.c4);
    CHECK(c.k4 == o.k4);
    CHECK(c.b2 == o.b2);
    CHECK(c.pair_sum == o.pair_sum);
    CHECK(c.edge_sum == o.edge_sum);
    // the two counting identities behind the C4 formula
    CHECK(c.pair_sum == 2 * c.c4 + 6 * c.k4 + 2 * c.b2);
    CHECK(c.edge_sum == 6 * c.k4 + c.b2);
  }
}

TEST_CASE("C4 identity holds on every labeled graph of order 5") {
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    Graph g = oracle::graph_from_mask(5, mask);
    SubgraphCensus c = census(g);
    oracle::Census4 o = oracle::census_by_subsets(g);
    CHECK(c.c4 == o.c4);
    CHECK(2 * c.c4 == c.pair_sum - 2 * c.edge_sum + 6 * c.k4);
  }
}

TEST_CASE("C4 identity on random graphs of order 8..32") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    int n = 8 + int(rng() % 25);
    Graph g = oracle::random_graph(n, 0.3 + 0.4 * (rng() % 100) / 100.0, rng());
    SubgraphCensus c = census(g);
    CHECK(c.pair_sum == 2 * c.c4 + 6 * c.k4 + 2 * c.b2);
    CHECK(c.edge_sum == 6 * c.k4 + c.b2);
  }
}

TEST_CASE("count_h") {
  // C4 plus one isolated vertex
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(count_h(g) == 1);
  CHECK(count_h(Graph::cycle(4)) == 0);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    Graph r = oracle::random_graph(5 + int(rng() % 5), 0.45, rng());
    CHECK(count_h(r) == oracle::count_h_by_subsets(r));
  }
}

TEST_CASE("c4_max_bound") {
  CHECK(c4_max_bound(6) == 9);
  CHECK(c4_max_bound(4) == 1);
  CHECK(c4_max_bound(3) == 0);
  CHECK(c4_max_bound(0) == 0);
  CHECK(census(Graph::complete_bipartite(3, 3)).c4 == c4_max_bound(6));
}

TEST_CASE("c4 never exceeds the extremal bound (order <= 7 exhaustive-ish)") {
  std::mt19937_64 rng(47);
  for (int n = 4; n <= 7; ++n) {
    long long best = 0;
    for (int i = 0; i < 400; ++i) {
      Graph g = oracle::random_graph(n, 0.5, rng());
      best = std::max(best, census(g).c4);
      CHECK(census(g).c4 <= c4_max_bound(n));
    }
    // the balanced complete bipartite graph attains it at n = 4 and 6
    if (n % 2 == 0)
      CHECK(census(Graph::complete_bipartite(n / 2, n / 2)).c4 == c4_max_bound(n));
  }
}

TEST_CASE("lemma1_threshold") {
  CHECK(lemma1_threshold(Rational(1, 11)) == Rational(715));
  CHECK(lemma1_threshold(Rational(1, 2)) == Rational(40));
  CHECK_THROWS_AS(lemma1_threshold(Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(lemma1_threshold(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(lemma1_threshold(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("lemma1_rhs") {
  CHECK(lemma1_rhs(10, 0, Rational(1, 2), 3) == Rational(0));
  CHECK(lemma1_rhs(100, 2500, Rational(1, 2), 0) == Rational(625000));
  // ((110^2 / (5 * 1331)) - 1/2) * 605
  Rational expect = (Rational(110 * 110, 5 * 1331) - Rational(1, 2)) * 605;
  CHECK(lemma1_rhs(110, 605, Rational(1, 11), 1) == expect);
  CHECK_THROWS_AS(lemma1_rhs(-1, 0, Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("lemma1_check on K_{p/2,p/2}") {
  // triangle-free, delta = p/2, meets the lambda = 1/2 hypotheses at p = 42
  Graph g = Graph::complete_bipartite(21, 21);
  Lemma1Verdict v = lemma1_check(g, Rational(1, 2));
  REQUIRE(v.hypotheses_met);
  CHECK(v.m == 0);
  CHECK(v.holds);
  CHECK(Rational(v.c4) > v.bound);
}

TEST_CASE("lemma1_check reports unmet hypotheses") {
  Lemma1Verdict v = lemma1_check(Graph::complete(10), Rational(1, 2));
  CHECK_FALSE(v.hypotheses_met);
  CHECK(v.failed_hypothesis == "order_threshold");
  Lemma1Verdict w = lemma1_check(oracle::random_graph(50, 0.1, 5), Rational(1, 2));
  CHECK_FALSE(w.hypotheses_met);
  CHECK(w.failed_hypothesis == "min_degree");
}

TEST_CASE("lemma1 conclusion holds on random graphs meeting its hypotheses") {
  // G(p, 0.6) conditioned on min degree >= p/2
  std::mt19937_64 rng(53);
  int accepted = 0;
  for (int i = 0; accepted < 25 && i < 2000; ++i) {
    Graph g = oracle::random_graph(60, 0.6, rng());
    if (g.min_degree() < 30) continue;
    ++accepted;
    Lemma1Verdict v = lemma1_check(g, Rational(1, 2));
    REQUIRE(v.hypotheses_met);
    CHECK(v.holds);
  }
  CHECK(accepted == 25);
}
