#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "ttl/thrackle_examples.hpp"

namespace ttl {

// Point-line incidences, points indexed 0..n_points-1.
struct IncidenceStructure {
  std::size_t n_points = 0;
  std::vector<std::vector<std::size_t>> lines;  // sorted point indices
};

namespace detail {

inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace detail

// Projective plane of prime order q: points and lines are normalized
// homogeneous triples over the field with q elements, incidence is a zero
// dot product. Prime powers would need genuine field arithmetic, so only
// prime orders are supported.
inline IncidenceStructure projective_plane(long long q) {
  if (!detail::is_prime(q))
    throw InvalidInput("projective plane: order " + std::to_string(q) +
                       " is not prime; only prime orders are supported");
  std::vector<std::array<long long, 3>> triples;
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b) triples.push_back({1, a, b});
  for (long long a = 0; a < q; ++a) triples.push_back({0, 1, a});
  triples.push_back({0, 0, 1});

  IncidenceStructure inc;
  inc.n_points = triples.size();
  for (const auto& line : triples) {
    std::vector<std::size_t> pts;
    for (std::size_t p = 0; p < triples.size(); ++p) {
      long long dot = line[0] * triples[p][0] + line[1] * triples[p][1] + line[2] * triples[p][2];
      if (dot % q == 0) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    inc.lines.push_back(pts);
  }
  return inc;
}

// Machine check of the plane axioms: every point pair on exactly one line,
// every line pair meeting in exactly one point, and some quadrangle (four
// points, no three collinear) to rule out degenerate pencils.
inline void validate_incidence(const IncidenceStructure& inc) {
  if (inc.n_points < 4 || inc.lines.empty())
    throw InvalidInput("incidence: too small to be a projective plane");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> line_through;
  for (std::size_t l = 0; l < inc.lines.size(); ++l) {
    const auto& line = inc.lines[l];
    for (std::size_t p : line)
      if (p >= inc.n_points) throw InvalidInput("incidence: point index out of range");
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        auto key = std::minmax(line[i], line[j]);
        if (!line_through.emplace(key, l).second)
          throw InvalidInput("incidence: two lines through one point pair");
      }
  }
  for (std::size_t a = 0; a < inc.n_points; ++a)
    for (std::size_t b = a + 1; b < inc.n_points; ++b)
      if (!line_through.count({a, b})) throw InvalidInput("incidence: point pair on no line");
  for (std::size_t l = 0; l < inc.lines.size(); ++l)
    for (std::size_t m = l + 1; m < inc.lines.size(); ++m) {
      std::size_t common = 0;
      for (std::size_t p : inc.lines[l])
        common += std::binary_search(inc.lines[m].begin(), inc.lines[m].end(), p) ? 1 : 0;
      if (common != 1) throw InvalidInput("incidence: two lines meet in " + std::to_string(common) + " points");
    }
  // quadrangle: two points of one line, a point off it, and a fourth point
  // avoiding the three lines those spawn
  auto on_common_line = [&](std::size_t a, std::size_t b, std::size_t c) {
    std::size_t l = line_through.at(std::minmax(a, b));
    return std::binary_search(inc.lines[l].begin(), inc.lines[l].end(), c);
  };
  std::size_t p0 = inc.lines[0][0], p1 = inc.lines[0][1];
  for (std::size_t p2 = 0; p2 < inc.n_points; ++p2) {
    if (on_common_line(p0, p1, p2)) continue;
    for (std::size_t p3 = 0; p3 < inc.n_points; ++p3) {
      if (p3 == p0 || p3 == p1 || p3 == p2) continue;
      if (on_common_line(p0, p1, p3) || on_common_line(p0, p2, p3) || on_common_line(p1, p2, p3))
        continue;
      return;
    }
  }
  throw InvalidInput("incidence: no quadrangle, structure is degenerate");
}

// Vertices on a convex arc, one body per line, W = V. In convex position a
// vertex lies in a hull of other vertices only when it is one of them, so
// pairwise W counts equal combinatorial line intersections and the
// transversal condition holds with exactly as many bodies as vertices.
inline ThrackleInstance plane_thrackle_from_incidence(const IncidenceStructure& inc) {
  validate_incidence(inc);
  ThrackleInstance instance;
  instance.dim = 2;
  instance.W.dim = 2;
  for (std::size_t p = 0; p < inc.n_points; ++p)
    instance.W.points.push_back(
        {"v" + std::to_string(p + 1), detail::circle_point(Rat(static_cast<long long>(p) + 1)), {}});
  for (const auto& pt : instance.W.points) instance.V.push_back(pt.id);
  for (const auto& line : inc.lines) {
    std::vector<std::string> body;
    for (std::size_t p : line) body.push_back("v" + std::to_string(p + 1));
    instance.bodies.push_back(body);
  }
  validate_thrackle(instance);
  return instance;
}

}  // namespace ttl
