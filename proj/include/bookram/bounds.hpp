#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bookram/rational.hpp"
#include "bookram/srg.hpp"

namespace bookram {

inline BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(x);
}

// r(B_m, B_n) <= m + n + 2 + floor((2/3) sqrt(3(m^2+mn+n^2))), all-integer:
// the floor is the largest f with 9 f^2 <= 12 (m^2+mn+n^2).
inline long long parsons_upper(long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("parsons_upper: pages must be >= 1");
  BigInt s = BigInt(m) * m + BigInt(m) * n + BigInt(n) * n;
  BigInt f = isqrt(12 * s) / 3;
  return (long long)(m + n + 2) + f.convert_to<long long>();
}

inline std::optional<long long> small_gap_upper(long long m, long long n) {
  if (m < 1 || n < 1) return std::nullopt;
  BigInt gap = n > m ? n - m : m - n;
  if (BigInt(6) * (m + n + 1) > gap * gap * gap) return 2 * (m + n + 1);
  return std::nullopt;
}

inline std::optional<long long> mod3_upper(long long m, long long n) {
  if (m > n) std::swap(m, n);
  if (m >= 1 && m % 3 == 0 && n == m + 2) return 4 * m + 5;
  return std::nullopt;
}

// Upper bound for r(B_2, B_n), n >= 2.
inline long long b2_upper(long long n) {
  if (n < 2) throw std::invalid_argument("b2_upper: n must be >= 2");
  if (n <= 11) return 2 * n + 6;
  if (n <= 22) return 2 * n + 5;
  if (n <= 37) return 2 * n + 4;
  return 2 * n + 3;
}

// Smallest n with r(B_m, B_n) = 2n+3 guaranteed, m > 1.
inline long long frs_exact_threshold(long long m) {
  if (m < 2) throw std::invalid_argument("frs_exact_threshold: m must be >= 2");
  return (m - 1) * (16 * m * m * m + 16 * m * m - 24 * m - 10) + 1;
}

inline std::optional<long long> theorem1_exact(long long m, long long n) {
  if (m > n) std::swap(m, n);
  if (m == 1 && n > 1) return 2 * n + 3;
  return std::nullopt;
}

// Lower bound from red = K_{t+1,t+1}, t = max(m,n).
inline long long trivial_lower(long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("trivial_lower: pages must be >= 1");
  return 2 * std::max(m, n) + 3;
}

// Smallest n with 2n+3 >= 10^6 m, where the asymptotic theorem pins r = 2n+3.
inline long long nr_exact_threshold(long long m) {
  if (m < 1) throw std::invalid_argument("nr_exact_threshold: m must be >= 1");
  return (1000000LL * m - 2) / 2;
}

struct ProvenanceEntry {
  std::string rule;
  std::optional<long long> value;
  bool applicable = false;
};

struct BoundInterval {
  long long m = 0, n = 0;
  long long lower = 0, upper = 0;
  bool exact = false;
  std::vector<ProvenanceEntry> provenance;
};

inline BoundInterval best_bounds(long long m, long long n,
                                 const std::vector<LowerBoundCertificate>& certs = {}) {
  if (m < 1 || n < 1) throw std::invalid_argument("best_bounds: pages must be >= 1");
  BoundInterval out;
  out.m = m;
  out.n = n;
  const long long a = std::min(m, n), b = std::max(m, n);

  long long lower = trivial_lower(a, b);
  long long upper = parsons_upper(a, b);
  out.provenance.push_back({"trivial_lower", lower, true});
  out.provenance.push_back({"parsons_upper", upper, true});

  auto take_upper = [&](const std::string& rule, std::optional<long long> v) {
    out.provenance.push_back({rule, v, v.has_value()});
    if (v) upper = std::min(upper, *v);
  };
  auto take_exact = [&](const std::string& rule, std::optional<long long> v) {
    out.provenance.push_back({rule, v, v.has_value()});
    if (v) {
      lower = std::max(lower, *v);
      upper = std::min(upper, *v);
    }
  };

  take_exact("theorem1_exact", theorem1_exact(a, b));
  take_upper("small_gap_upper", small_gap_upper(a, b));
  take_upper("mod3_upper", mod3_upper(a, b));
  take_upper("b2_upper", a == 2 ? std::optional<long long>(b2_upper(b)) : std::nullopt);
  take_exact("frs_exact", a >= 2 && b >= frs_exact_threshold(a)
                              ? std::optional<long long>(2 * b + 3)
                              : std::nullopt);
  take_exact("nr_exact (c = 10^6)", b >= nr_exact_threshold(a)
                                        ? std::optional<long long>(2 * b + 3)
                                        : std::nullopt);

  for (const auto& c : certs) {
    bool match = (c.m == a && c.n == b) || (c.m == b && c.n == a);
    bool valid = c.bound == c.order + 1 &&
                 c.red_bs.value_or(-1) <= c.m - 1 && c.blue_bs.value_or(-1) <= c.n - 1;
    std::string rule = "certificate(order=" + std::to_string(c.order) + ")";
    if (!match || !valid) {
      out.provenance.push_back({rule + (match ? " invalid" : " pair mismatch, skipped"),
                                std::nullopt, false});
      continue;
    }
    out.provenance.push_back({rule, c.bound, true});
    lower = std::max(lower, c.bound);
  }

  out.lower = lower;
  out.upper = upper;
  out.exact = lower == upper;
  return out;
}

}  // namespace bookram
