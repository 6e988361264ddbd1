#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "ttl/thrackle.hpp"

namespace ttl {

namespace detail {

// rational point on the unit circle, running counterclockwise through the
// second quadrant as t grows
inline Point circle_point(const Rat& t) {
  Rat t2 = t * t;
  return {(1 - t2) / (1 + t2), (2 * t) / (1 + t2)};
}

}  // namespace detail

// Segment-only instances: W is the vertex set plus every pairwise crossing.
// Overlapping collinear segments have no usable transversal point, so any
// higher-dimensional pairwise intersection is rejected.
inline ThrackleInstance segment_thrackle_from_chords(
    const std::vector<ConfigPoint>& vertices,
    const std::vector<std::array<std::string, 2>>& chords) {
  ThrackleInstance instance;
  instance.dim = 2;
  instance.W.dim = 2;
  instance.W.points = vertices;
  for (const auto& v : vertices) instance.V.push_back(v.id);
  for (const auto& c : chords) instance.bodies.push_back({c[0], c[1]});
  std::size_t crossing_count = 0;
  for (std::size_t a = 0; a < instance.bodies.size(); ++a)
    for (std::size_t b = a + 1; b < instance.bodies.size(); ++b) {
      auto info = intersect_hulls_info(instance.body_points(a), instance.body_points(b));
      if (info.dim > 0)
        throw InvalidInput("segment thrackle: segments " + std::to_string(a) + " and " +
                           std::to_string(b) + " overlap in a segment");
      if (info.dim < 0) continue;
      bool known = false;
      for (const auto& p : instance.W.points) known = known || p.coords == info.relint_point;
      if (!known)
        instance.W.points.push_back({"x" + std::to_string(++crossing_count), info.relint_point, {}});
    }
  validate_thrackle(instance);
  return instance;
}

// Seven vertices in convex position and the seven step-3 chords among them:
// every pair of chords either shares an endpoint or crosses, and each vertex
// carries exactly two chords.
inline ThrackleInstance heptagram_example() {
  std::vector<ConfigPoint> vertices;
  for (int t = 1; t <= 7; ++t)
    vertices.push_back({"v" + std::to_string(t), detail::circle_point(Rat(t)), {}});
  std::vector<std::array<std::string, 2>> chords;
  for (int i = 1; i <= 7; ++i) {
    int j = (i + 2) % 7 + 1;
    chords.push_back({"v" + std::to_string(i), "v" + std::to_string(j)});
  }
  return segment_thrackle_from_chords(vertices, chords);
}

// The quadrilateral with four segments to an exterior apex. All pairwise
// intersections already contain exactly one vertex, so W equals V; two of
// the segments pass through the quadrilateral's interior, which the
// transversal condition tolerates because the overlap holds no second W
// point.
inline ThrackleInstance quad_apex_example() {
  ThrackleInstance instance;
  instance.dim = 2;
  instance.W.dim = 2;
  instance.W.points = {
      {"q1", {Rat(0), Rat(1)}, {}},  {"q2", {Rat(0), Rat(-1)}, {}},
      {"q3", {Rat(1), Rat(-2)}, {}}, {"q4", {Rat(1), Rat(2)}, {}},
      {"apex", {Rat(4), Rat(0)}, {}},
  };
  instance.V = {"q1", "q2", "q3", "q4", "apex"};
  instance.bodies = {
      {"q1", "q2", "q3", "q4"}, {"apex", "q1"}, {"apex", "q2"}, {"apex", "q3"}, {"apex", "q4"},
  };
  validate_thrackle(instance);
  return instance;
}

// Twenty-one triangles on a convex 7-gon, each containing exactly one 7-gon
// edge. Any two triangles intersect, yet no transversal W can exist: with
// W = V the pair counts come out wrong, showing m <= n genuinely needs the
// transversal hypothesis.
inline ThrackleInstance seven_gon_example() {
  ThrackleInstance instance;
  instance.dim = 2;
  instance.W.dim = 2;
  for (int t = 1; t <= 7; ++t)
    instance.W.points.push_back({"v" + std::to_string(t), detail::circle_point(Rat(t)), {}});
  for (const auto& p : instance.W.points) instance.V.push_back(p.id);
  auto cyc = [](int i) { return (i - 1 + 7) % 7 + 1; };
  for (int i = 1; i <= 7; ++i) {
    int succ = cyc(i + 1);
    for (int x = 1; x <= 7; ++x) {
      if (x == cyc(i - 1) || x == i || x == succ || x == cyc(i + 2)) continue;
      instance.bodies.push_back(
          {"v" + std::to_string(i), "v" + std::to_string(succ), "v" + std::to_string(x)});
    }
  }
  validate_thrackle(instance);
  return instance;
}

// Octahedron in R^3: three diagonals and four alternating faces pairwise
// intersect in single points, and W = vertices + center is a transversal.
// Seven bodies on six vertices, so the planar bound m <= n fails in space.
inline ThrackleInstance octahedron_example() {
  ThrackleInstance instance;
  instance.dim = 3;
  instance.W.dim = 3;
  Rat z(0), u(1), d(-1);
  instance.W.points = {
      {"px", {u, z, z}, {}}, {"nx", {d, z, z}, {}}, {"py", {z, u, z}, {}},
      {"ny", {z, d, z}, {}}, {"pz", {z, z, u}, {}}, {"nz", {z, z, d}, {}},
      {"o", {z, z, z}, {}},
  };
  instance.V = {"px", "nx", "py", "ny", "pz", "nz"};
  instance.bodies = {
      {"px", "nx"}, {"py", "ny"}, {"pz", "nz"},
      {"px", "py", "pz"}, {"px", "ny", "nz"}, {"nx", "py", "nz"}, {"nx", "ny", "pz"},
  };
  validate_thrackle(instance);
  return instance;
}

// Random pairwise-crossing segments, built as tangent lines to the unit
// circle at distinct rational points. Tangents at distinct upper-half
// positions are never parallel and never concurrent in triples, and each
// segment is extended past all of its crossings.
inline ThrackleInstance random_segment_thrackle(unsigned long long seed, int segments = 0) {
  std::mt19937_64 rng(seed);
  int k = segments > 0 ? segments : 3 + static_cast<int>(rng() % 4);
  if (k < 2) throw InvalidInput("random segment thrackle: need at least two segments");
  std::vector<long long> ts;
  while (static_cast<int>(ts.size()) < k) {
    long long t = 1 + static_cast<long long>(rng() % 9999);
    bool dup = false;
    for (long long s : ts) dup = dup || s == t;
    if (!dup) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());

  std::vector<Point> tangent_points, dirs;
  for (long long t : ts) {
    Point p = detail::circle_point(Rat(t));
    tangent_points.push_back(p);
    dirs.push_back({-p[1], p[0]});
  }
  // tangent lines meet where both tangency conditions p.x = 1 hold
  auto crossing = [&](int i, int j) -> Point {
    Rat det = tangent_points[i][0] * tangent_points[j][1] -
              tangent_points[i][1] * tangent_points[j][0];
    Rat x = (tangent_points[j][1] - tangent_points[i][1]) / det;
    Rat y = (tangent_points[i][0] - tangent_points[j][0]) / det;
    return {x, y};
  };
  std::vector<ConfigPoint> vertices;
  std::vector<std::array<std::string, 2>> chords;
  for (int i = 0; i < k; ++i) {
    bool first = true;
    Rat lo(0), hi(0);
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      Point x = crossing(i, j);
      Rat s = (x[0] - tangent_points[i][0]) * dirs[i][0] +
              (x[1] - tangent_points[i][1]) * dirs[i][1];
      s = s / (dirs[i][0] * dirs[i][0] + dirs[i][1] * dirs[i][1]);
      if (first) {
        lo = hi = s;
        first = false;
      } else {
        if (s < lo) lo = s;
        if (s > hi) hi = s;
      }
    }
    Rat sa = lo - 1, sb = hi + 1;
    Point a = {tangent_points[i][0] + sa * dirs[i][0], tangent_points[i][1] + sa * dirs[i][1]};
    Point b = {tangent_points[i][0] + sb * dirs[i][0], tangent_points[i][1] + sb * dirs[i][1]};
    std::string ia = "s" + std::to_string(i + 1) + "a";
    std::string ib = "s" + std::to_string(i + 1) + "b";
    vertices.push_back({ia, a, {}});
    vertices.push_back({ib, b, {}});
    chords.push_back({ia, ib});
  }
  return segment_thrackle_from_chords(vertices, chords);
}

}  // namespace ttl
