#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ttl/error.hpp"
#include "ttl/linalg.hpp"
#include "ttl/lp.hpp"
#include "ttl/point.hpp"

namespace ttl {

// Orientation of an ordered affine simplex of d+1 points in dimension d:
// the sign of det(p1 - p0, ..., pd - p0). +1 is counterclockwise for d = 2
// with the usual axes.
inline int orient(const std::vector<Point>& simplex) {
  if (simplex.empty()) throw InvalidInput("orient: empty simplex");
  const std::size_t d = simplex[0].size();
  if (simplex.size() != d + 1) throw InvalidInput("orient: need d+1 points in dimension d");
  Matrix m;
  for (std::size_t i = 1; i <= d; ++i) m.push_back(sub(simplex[i], simplex[0]));
  return det_sign(std::move(m));
}

// Dimension of the affine hull of a point set; -1 for the empty set.
inline int affine_dim(const std::vector<Point>& pts) {
  if (pts.empty()) throw InvalidInput("affine_dim: empty point set");
  Matrix dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
  return static_cast<int>(rank(std::move(dirs)));
}

// Membership of q in conv(hull_pts): returns convex coefficients
// reproducing q, or nullopt. Exact via LP feasibility.
inline std::optional<std::vector<Rat>> hull_membership(const Point& q,
                                                       const std::vector<Point>& hull_pts) {
  if (hull_pts.empty()) throw InvalidInput("hull_membership: empty generator set");
  const std::size_t d = q.size();
  for (const auto& p : hull_pts)
    if (p.size() != d) throw InvalidInput("hull_membership: dimension mismatch");
  LinearSystem sys(hull_pts.size());
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Rat> row(hull_pts.size());
    for (std::size_t i = 0; i < hull_pts.size(); ++i) row[i] = hull_pts[i][c];
    sys.add_row(std::move(row), Rel::Eq, q[c]);
  }
  sys.add_row(std::vector<Rat>(hull_pts.size(), Rat(1)), Rel::Eq, Rat(1));
  return lp_feasible_point(sys);
}

struct HullsIntersection {
  Point point;                            // one common point
  std::vector<std::vector<Rat>> coeffs;   // convex coefficients per family
};

// Common point of conv(F_1), ..., conv(F_t), if the intersection is
// nonempty. One joint feasibility system: coefficients for every family,
// each summing to 1, all combinations equal.
inline std::optional<HullsIntersection> hulls_intersect(
    const std::vector<std::vector<Point>>& families) {
  if (families.empty()) throw InvalidInput("hulls_intersect: no families");
  for (const auto& f : families)
    if (f.empty()) throw InvalidInput("hulls_intersect: empty family");
  const std::size_t d = families[0][0].size();
  std::size_t total = 0;
  std::vector<std::size_t> offset;
  for (const auto& f : families) {
    offset.push_back(total);
    total += f.size();
    for (const auto& p : f)
      if (p.size() != d) throw InvalidInput("hulls_intersect: dimension mismatch");
  }
  LinearSystem sys(total);
  for (std::size_t fi = 1; fi < families.size(); ++fi) {
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<Rat> row(total, Rat(0));
      for (std::size_t i = 0; i < families[0].size(); ++i) row[offset[0] + i] = families[0][i][c];
      for (std::size_t i = 0; i < families[fi].size(); ++i)
        row[offset[fi] + i] = -families[fi][i][c];
      sys.add_row(std::move(row), Rel::Eq, Rat(0));
    }
  }
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    std::vector<Rat> row(total, Rat(0));
    for (std::size_t i = 0; i < families[fi].size(); ++i) row[offset[fi] + i] = 1;
    sys.add_row(std::move(row), Rel::Eq, Rat(1));
  }
  auto sol = lp_feasible_point(sys);
  if (!sol) return std::nullopt;
  HullsIntersection out;
  out.point.assign(d, Rat(0));
  for (std::size_t i = 0; i < families[0].size(); ++i)
    for (std::size_t c = 0; c < d; ++c) out.point[c] += (*sol)[offset[0] + i] * families[0][i][c];
  for (std::size_t fi = 0; fi < families.size(); ++fi)
    out.coeffs.emplace_back(sol->begin() + offset[fi],
                            sol->begin() + offset[fi] + families[fi].size());
  return out;
}

}  // namespace ttl
