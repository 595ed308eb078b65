#include <doctest.h>

#include <random>

#include "bookram/bounds.hpp"
#include "oracles.hpp"

using namespace bookram;

TEST_CASE("parsons_upper") {
  CHECK(parsons_upper(2, 5) == 16);
  CHECK(parsons_upper(7, 10) == 36);
  for (long long n = 1; n <= 100; ++n) CHECK(parsons_upper(n, n) == 4 * n + 2);
  CHECK_THROWS_AS(parsons_upper(0, 3), std::invalid_argument);
}

TEST_CASE("parsons floor against a binary-search sqrt oracle") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 10000; ++i) {
    long long m = 1 + (long long)(rng() % 100000);
    long long n = 1 + (long long)(rng() % 100000);
    BigInt s = BigInt(m) * m + BigInt(m) * n + BigInt(n) * n;
    BigInt f = oracle::isqrt_binary(12 * s) / 3;
    CHECK(parsons_upper(m, n) == m + n + 2 + f.convert_to<long long>());
  }
}

TEST_CASE("small_gap_upper") {
  CHECK(small_gap_upper(2, 5) == 16);
  CHECK_FALSE(small_gap_upper(1, 100).has_value());
  for (long long n = 1; n <= 50; ++n) CHECK(small_gap_upper(n, n) == 4 * n + 2);
}

TEST_CASE("mod3_upper") {
  CHECK(mod3_upper(3, 5) == 17);
  CHECK(mod3_upper(69, 71) == 281);
  CHECK(mod3_upper(5, 3) == 17);
  CHECK_FALSE(mod3_upper(4, 6).has_value());
  CHECK_FALSE(mod3_upper(3, 6).has_value());
}

TEST_CASE("b2_upper piecewise") {
  CHECK(b2_upper(2) == 10);
  CHECK(b2_upper(11) == 28);
  CHECK(b2_upper(12) == 29);
  CHECK(b2_upper(22) == 49);
  CHECK(b2_upper(23) == 50);
  CHECK(b2_upper(37) == 78);
  CHECK(b2_upper(38) == 79);
  CHECK(b2_upper(100) == 203);
  CHECK_THROWS_AS(b2_upper(1), std::invalid_argument);
}

TEST_CASE("frs_exact_threshold") {
  CHECK(frs_exact_threshold(2) == 135);
  CHECK(frs_exact_threshold(3) == 989);
  CHECK_THROWS_AS(frs_exact_threshold(1), std::invalid_argument);
}

TEST_CASE("theorem1_exact") {
  CHECK(theorem1_exact(1, 5) == 13);
  CHECK(theorem1_exact(4, 1) == 11);
  CHECK_FALSE(theorem1_exact(1, 1).has_value());
  CHECK_FALSE(theorem1_exact(2, 5).has_value());
}

TEST_CASE("trivial_lower") {
  CHECK(trivial_lower(1, 5) == 13);
  CHECK(trivial_lower(5, 5) == 13);
  CHECK(trivial_lower(2, 38) == 79);
  CHECK(trivial_lower(2, 38) == b2_upper(38));
}

TEST_CASE("nr_exact_threshold") {
  CHECK(nr_exact_threshold(1) == 499999);
  CHECK(nr_exact_threshold(2) == 999999);
  // smallest n with 2n+3 >= 10^6 m, by definition
  for (long long m : {1, 2, 3, 7}) {
    long long t = nr_exact_threshold(m);
    CHECK(2 * t + 3 >= 1000000 * m);
    CHECK(2 * (t - 1) + 3 < 1000000 * m);
  }
  CHECK(frs_exact_threshold(2) < nr_exact_threshold(2));
}

TEST_CASE("best_bounds named cases") {
  BoundInterval b = best_bounds(2, 200);
  CHECK(b.lower == 403);
  CHECK(b.upper == 403);
  CHECK(b.exact);

  b = best_bounds(1, 1);
  CHECK(b.lower == 5);
  CHECK(b.upper == 6);
  CHECK_FALSE(b.exact);

  b = best_bounds(1, 5);
  CHECK(b.lower == 13);
  CHECK(b.upper == 13);
}

TEST_CASE("best_bounds consistency for all m,n <= 100") {
  for (long long m = 1; m <= 100; ++m)
    for (long long n = m; n <= 100; ++n) {
      BoundInterval b = best_bounds(m, n);
      CHECK(b.lower <= b.upper);
      BoundInterval s = best_bounds(n, m);
      CHECK(s.lower == b.lower);
      CHECK(s.upper == b.upper);
      CHECK(s.exact == b.exact);
    }
}

TEST_CASE("best_bounds uses certificates") {
  // fabricate a certificate the way certify() would emit it
  LowerBoundCertificate c;
  c.m = 2;
  c.n = 5;
  c.order = 15;
  c.bound = 16;
  c.red_bs = 1;
  c.blue_bs = 3;
  BoundInterval b = best_bounds(2, 5, {c});
  CHECK(b.lower == 16);
  CHECK(b.upper == 16);
  CHECK(b.exact);

  // pair mismatch: skipped, not an error
  BoundInterval m = best_bounds(3, 6, {c});
  CHECK(m.lower == trivial_lower(3, 6));
  bool noted = false;
  for (const auto& p : m.provenance)
    if (p.rule.find("skipped") != std::string::npos && !p.applicable) noted = true;
  CHECK(noted);
}

TEST_CASE("provenance covers every rule including inapplicable ones") {
  BoundInterval b = best_bounds(4, 9);
  std::vector<std::string> names;
  for (const auto& p : b.provenance) names.push_back(p.rule);
  for (const char* rule : {"trivial_lower", "parsons_upper", "theorem1_exact",
                           "small_gap_upper", "mod3_upper", "b2_upper", "frs_exact"}) {
    CHECK(std::find(names.begin(), names.end(), rule) != names.end());
  }
  bool has_nr = false;
  for (const auto& name : names)
    if (name.find("c = 10^6") != std::string::npos) has_nr = true;
  CHECK(has_nr);
}
