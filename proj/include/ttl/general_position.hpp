#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ttl/convexity.hpp"
#include "ttl/linalg.hpp"
#include "ttl/point.hpp"

namespace ttl {

// A family of pairwise disjoint subsets whose affine hulls violate codimension
// additivity: codim of the common intersection differs from the sum while the
// intersection is nonempty.
struct SgpViolation {
  std::vector<std::vector<std::size_t>> subsets;  // point indices per subset
  int intersection_codim = 0;
  int codim_sum = 0;
};

struct SgpReport {
  bool in_strong_general_position = true;
  std::optional<SgpViolation> violation;
};

namespace detail {

// Affine hull of a point subset as a linear equation system a.x = b, one row
// per independent normal. The number of rows is the hull's codimension.
struct AffineHull {
  Matrix normals;           // rows a
  std::vector<Rat> rhs;     // matching b
  int codim = 0;
};

inline AffineHull affine_hull_equations(const PointConfiguration& config, std::uint32_t mask) {
  int d = config.dim;
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < config.size(); ++i)
    if (mask & (std::uint32_t(1) << i)) members.push_back(i);
  Matrix dirs;
  for (std::size_t j = 1; j < members.size(); ++j)
    dirs.push_back(sub(config.coords(members[j]), config.coords(members[0])));
  AffineHull hull;
  const Point& base = config.coords(members[0]);
  for (auto& a : nullspace(dirs, d)) {
    Rat b = dot(a, base);
    hull.normals.push_back(std::move(a));
    hull.rhs.push_back(b);
  }
  hull.codim = int(hull.normals.size());
  return hull;
}

}  // namespace detail

// Exhaustive strong-general-position check: for every 2..r_max pairwise
// disjoint nonempty subsets, the codimension of the intersection of their
// affine hulls must equal the sum of the individual codimensions unless the
// intersection is empty. Exponential in the point count, hence the size cap;
// pass a larger cap explicitly to override.
inline SgpReport strong_general_position(const PointConfiguration& config, int r_max,
                                         std::size_t size_cap = 10) {
  if (config.size() == 0) throw InvalidInput("strong_general_position: empty configuration");
  if (r_max < 2) throw InvalidInput("strong_general_position: r_max must be at least 2");
  if (config.size() > size_cap)
    throw BudgetExceeded("strong_general_position: configuration exceeds the size cap of " +
                         std::to_string(size_cap) + " points; raise the cap to force the check");
  std::size_t n = config.size();
  std::uint32_t full = n == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1;

  std::vector<detail::AffineHull> hulls(full + 1);
  for (std::uint32_t m = 1; m <= full; ++m) hulls[m] = detail::affine_hull_equations(config, m);

  SgpReport report;
  std::vector<std::uint32_t> chosen;

  // stacked equations of the chosen subsets
  auto check_family = [&]() -> bool {
    Matrix coef;
    std::vector<Rat> rhs;
    int codim_sum = 0;
    for (std::uint32_t m : chosen) {
      const auto& h = hulls[m];
      for (std::size_t i = 0; i < h.normals.size(); ++i) {
        coef.push_back(h.normals[i]);
        rhs.push_back(h.rhs[i]);
      }
      codim_sum += h.codim;
    }
    Matrix aug = coef;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    auto pivots = detail::echelonize(aug, nullptr);
    bool consistent = true;
    int rank_coef = 0;
    for (std::size_t c : pivots) {
      if (c == std::size_t(config.dim))
        consistent = false;
      else
        ++rank_coef;
    }
    if (!consistent) return true;  // empty intersection is always acceptable
    if (rank_coef == codim_sum) return true;
    SgpViolation v;
    for (std::uint32_t m : chosen) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (m & (std::uint32_t(1) << i)) subset.push_back(i);
      v.subsets.push_back(std::move(subset));
    }
    v.intersection_codim = rank_coef;
    v.codim_sum = codim_sum;
    report.in_strong_general_position = false;
    report.violation = std::move(v);
    return false;
  };

  // enumerate families with strictly increasing smallest elements so each
  // unordered family appears once
  auto rec = [&](auto&& self, std::uint32_t used, std::size_t min_start) -> bool {
    if (chosen.size() >= 2 && !check_family()) return false;
    if (int(chosen.size()) == r_max) return true;
    for (std::size_t s = min_start; s < n; ++s) {
      std::uint32_t bit = std::uint32_t(1) << s;
      if (used & bit) continue;
      std::uint32_t pool = full & ~used & ~(bit | (bit - 1));
      // all subsets with smallest element s: s plus any subset of later unused
      for (std::uint32_t t = pool;; t = (t - 1) & pool) {
        chosen.push_back(bit | t);
        bool keep_going = self(self, used | bit | t, s + 1);
        chosen.pop_back();
        if (!keep_going) return false;
        if (t == 0) break;
      }
    }
    return true;
  };
  rec(rec, 0, 0);
  return report;
}

// Deterministic generic sampler: integer coordinates drawn uniformly from
// [-10000, 10000], rejected until no d+1 points are affinely dependent.
inline PointConfiguration sample_generic_config(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1) throw InvalidInput("sample_generic_config: need d >= 1 and n >= 1");
  std::mt19937_64 rng(seed);
  // fixed-width rejection sampling keeps the stream identical across platforms
  auto draw = [&]() -> int {
    const std::uint64_t span = 20001;
    const std::uint64_t limit = (~std::uint64_t(0) / span) * span;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return int(x % span) - 10000;
  };

  const int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    PointConfiguration config;
    config.dim = d;
    for (int i = 0; i < n; ++i) {
      ConfigPoint p;
      p.id = "p" + std::to_string(i + 1);
      for (int c = 0; c < d; ++c) p.coords.emplace_back(draw());
      config.points.push_back(std::move(p));
    }
    bool generic = true;
    // every d+1 points must be affinely independent; smaller configurations
    // only need pairwise distinctness, which the same test covers
    std::size_t tuple = std::min<std::size_t>(std::size_t(d) + 1, std::size_t(n));
    std::vector<std::size_t> idx(tuple);
    auto scan = [&](auto&& self, std::size_t pos, std::size_t start) -> bool {
      if (pos == tuple) {
        std::vector<Point> pts;
        for (std::size_t i : idx) pts.push_back(config.coords(i));
        return affine_dim(pts) == int(tuple) - 1;
      }
      for (std::size_t i = start; i + (tuple - pos) <= std::size_t(n); ++i) {
        idx[pos] = i;
        if (!self(self, pos + 1, i + 1)) return false;
      }
      return true;
    };
    generic = scan(scan, 0, 0);
    if (generic) return config;
  }
  throw BudgetExceeded("sample_generic_config: resample budget exhausted");
}

}  // namespace ttl
