#pragma once

// Brute-force planar convex-hull oracles, written independently of the
// library's LP machinery so the two can cross-check each other.  Only
// dimensions 1 and 2 are supported, which is all the tests need.

#include <optional>
#include <vector>

#include "ttl/point.hpp"

namespace oracle {

using ttl::Point;
using ttl::Rat;

inline Rat cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// q in conv(S), dimension 1.
inline bool member1(const Rat& q, const std::vector<Point>& s) {
  Rat lo = s[0][0], hi = s[0][0];
  for (const auto& p : s) {
    if (p[0] < lo) lo = p[0];
    if (p[0] > hi) hi = p[0];
  }
  return lo <= q && q <= hi;
}

// q on segment [a,b], dimension 2.
inline bool on_segment(const Point& q, const Point& a, const Point& b) {
  if (a == b) return q == a;
  if (cross(a, b, q) != 0) return false;
  Rat d = (q[0] - a[0]) * (b[0] - a[0]) + (q[1] - a[1]) * (b[1] - a[1]);
  Rat len = (b[0] - a[0]) * (b[0] - a[0]) + (b[1] - a[1]) * (b[1] - a[1]);
  return d >= 0 && d <= len;
}

// q inside-or-on triangle abc (possibly degenerate), dimension 2.
inline bool in_triangle(const Point& q, const Point& a, const Point& b, const Point& c) {
  Rat d1 = cross(q, a, b), d2 = cross(q, b, c), d3 = cross(q, c, a);
  bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  if (!(has_neg && has_pos)) {
    // degenerate triangles still need q on the figure, not just on the line
    if (cross(a, b, c) == 0)
      return on_segment(q, a, b) || on_segment(q, b, c) || on_segment(q, a, c);
    return true;
  }
  return false;
}

// Caratheodory over all simplices of at most 3 generators.
inline bool member2(const Point& q, const std::vector<Point>& s) {
  std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    if (s[i][0] == q[0] && s[i][1] == q[1]) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (on_segment(q, s[i], s[j])) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (in_triangle(q, s[i], s[j], s[k])) return true;
  return false;
}

inline bool member(const Point& q, const std::vector<Point>& s) {
  return q.size() == 1 ? member1(q[0], s) : member2(q, s);
}

// Proper crossing point of segments [a,b] and [c,d], if any.  Parallel or
// collinear pairs return nothing; their overlap endpoints are original points
// and therefore already candidates.
inline std::optional<Point> segment_crossing(const Point& a, const Point& b,
                                             const Point& c, const Point& d) {
  Rat rx = b[0] - a[0], ry = b[1] - a[1];
  Rat sx = d[0] - c[0], sy = d[1] - c[1];
  Rat denom = rx * sy - ry * sx;
  if (denom == 0) return std::nullopt;
  Rat t = ((c[0] - a[0]) * sy - (c[1] - a[1]) * sx) / denom;
  Rat u = ((c[0] - a[0]) * ry - (c[1] - a[1]) * rx) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return Point{a[0] + t * rx, a[1] + t * ry};
}

// Every vertex of an intersection of convex polygons is an input point or a
// crossing of two generator segments, so this candidate set is exhaustive.
inline std::vector<Point> candidate_points(const std::vector<std::vector<Point>>& families) {
  std::vector<Point> cand;
  for (const auto& f : families)
    for (const auto& p : f) cand.push_back(p);
  if (!cand.empty() && cand[0].size() == 2) {
    std::vector<std::pair<Point, Point>> segs;
    for (const auto& f : families)
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) segs.emplace_back(f[i], f[j]);
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i + 1; j < segs.size(); ++j)
        if (auto x = segment_crossing(segs[i].first, segs[i].second, segs[j].first,
                                      segs[j].second))
          cand.push_back(*x);
  }
  return cand;
}

inline bool families_intersect(const std::vector<std::vector<Point>>& families) {
  for (const auto& cand : candidate_points(families)) {
    bool in_all = true;
    for (const auto& f : families)
      if (!member(cand, f)) {
        in_all = false;
        break;
      }
    if (in_all) return true;
  }
  return false;
}

// Affine dimension of the pairwise intersection, -1 when empty.  The points of
// the intersection polytope lying in both hulls span it, so its dimension is
// read off the surviving candidates.
inline int intersection_dim(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> common;
  for (const auto& cand : candidate_points({a, b}))
    if (member(cand, a) && member(cand, b)) common.push_back(cand);
  if (common.empty()) return -1;
  if (common[0].size() == 1) {
    Rat lo = common[0][0], hi = common[0][0];
    for (const auto& p : common) {
      if (p[0] < lo) lo = p[0];
      if (p[0] > hi) hi = p[0];
    }
    return lo == hi ? 0 : 1;
  }
  bool all_equal = true, all_collinear = true;
  for (const auto& p : common) {
    if (p != common[0]) all_equal = false;
    if (cross(common[0], common[1 % common.size()], p) != 0) all_collinear = false;
  }
  if (all_equal) return 0;
  // pick a second distinct point before judging collinearity
  std::size_t second = 0;
  for (std::size_t i = 1; i < common.size(); ++i)
    if (common[i] != common[0]) {
      second = i;
      break;
    }
  all_collinear = true;
  for (const auto& p : common)
    if (cross(common[0], common[second], p) != 0) all_collinear = false;
  return all_collinear ? 1 : 2;
}

}  // namespace oracle
