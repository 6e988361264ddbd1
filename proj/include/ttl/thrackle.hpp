#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttl/convexity.hpp"
#include "ttl/intersection.hpp"
#include "ttl/point.hpp"

namespace ttl {

// Convex bodies spanned by vertex subsets of V, with a transversal candidate
// set W containing V.
struct ThrackleInstance {
  int dim = 2;
  PointConfiguration W;
  std::vector<std::string> V;                      // ids into W
  std::vector<std::vector<std::string>> bodies;    // vertex ids, subsets of V

  std::size_t body_count() const { return bodies.size(); }
  std::size_t vertex_count() const { return V.size(); }

  std::vector<Point> body_points(std::size_t b) const {
    std::vector<Point> pts;
    for (const auto& id : bodies[b]) pts.push_back(W.coords(W.index_of(id)));
    return pts;
  }
};

// Structural checks: V inside W, distinct coordinates, no single-point or
// duplicate bodies. Bodies that span the same hull are duplicates even when
// their vertex lists differ.
inline void validate_thrackle(const ThrackleInstance& instance) {
  if (instance.dim != 2 && instance.dim != 3)
    throw InvalidInput("thrackle: ambient dimension must be 2 or 3");
  if (instance.W.dim != instance.dim) throw InvalidInput("thrackle: W dimension mismatch");
  instance.W.validate();
  for (std::size_t i = 0; i < instance.W.size(); ++i)
    for (std::size_t j = i + 1; j < instance.W.size(); ++j)
      if (instance.W.coords(i) == instance.W.coords(j))
        throw InvalidInput("thrackle: W contains duplicate coordinates");
  std::set<std::string> v_ids;
  for (const auto& id : instance.V) {
    instance.W.index_of(id);  // throws when missing
    if (!v_ids.insert(id).second) throw InvalidInput("thrackle: duplicate vertex id in V");
  }
  if (instance.bodies.empty()) throw InvalidInput("thrackle: no bodies");
  for (const auto& body : instance.bodies) {
    if (body.size() < 2)
      throw InvalidInput("thrackle: bodies must have at least two vertices");
    std::set<std::string> seen;
    for (const auto& id : body) {
      if (!v_ids.count(id)) throw InvalidInput("thrackle: body vertex not in V: " + id);
      if (!seen.insert(id).second) throw InvalidInput("thrackle: body repeats a vertex");
    }
  }
  for (std::size_t a = 0; a < instance.bodies.size(); ++a)
    for (std::size_t b = a + 1; b < instance.bodies.size(); ++b) {
      auto pa = instance.body_points(a);
      auto pb = instance.body_points(b);
      bool a_in_b = true, b_in_a = true;
      for (const auto& p : pa)
        if (!hull_membership(p, pb)) {
          a_in_b = false;
          break;
        }
      if (a_in_b)
        for (const auto& p : pb)
          if (!hull_membership(p, pa)) {
            b_in_a = false;
            break;
          }
      if (a_in_b && b_in_a)
        throw InvalidInput("thrackle: bodies " + std::to_string(a) + " and " + std::to_string(b) +
                           " span the same hull");
    }
}

struct TransversalReport {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
  int violating_count = -1;
  // membership[b][w]: W point w lies in the hull of body b
  std::vector<std::vector<char>> membership;
};

// Counts W points inside every pairwise body intersection; passes iff each
// count is exactly one.
inline TransversalReport check_transversal(const ThrackleInstance& instance) {
  validate_thrackle(instance);
  TransversalReport report;
  std::size_t m = instance.body_count();
  std::size_t wn = instance.W.size();
  report.membership.assign(m, std::vector<char>(wn, 0));
  for (std::size_t b = 0; b < m; ++b) {
    auto pts = instance.body_points(b);
    for (std::size_t w = 0; w < wn; ++w)
      report.membership[b][w] = hull_membership(instance.W.coords(w), pts).has_value() ? 1 : 0;
  }
  for (std::size_t a = 0; a < m && report.ok; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      int count = 0;
      for (std::size_t w = 0; w < wn; ++w)
        if (report.membership[a][w] && report.membership[b][w]) ++count;
      if (count != 1) {
        report.ok = false;
        report.violating_pair = {a, b};
        report.violating_count = count;
        break;
      }
    }
  return report;
}

// Vertex id -> selected body index.
struct SelectionMap {
  std::map<std::string, std::size_t> selected;
  // vertex-sharing between a segment and a 2-dimensional body is allowed by
  // the hypotheses but worth surfacing
  std::vector<std::string> flags;
};

namespace detail {

// primitive integer direction of a rational vector
inline std::pair<Int, Int> primitive_direction(const Rat& dx, const Rat& dy) {
  Int nx = numerator(dx) * denominator(dy);
  Int ny = numerator(dy) * denominator(dx);
  if (nx == 0 && ny == 0) throw InvalidInput("zero direction");
  Int g = gcd(nx < 0 ? Int(-nx) : nx, ny < 0 ? Int(-ny) : ny);
  return {nx / g, ny / g};
}

inline int cross_sign(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
  Int c = a.first * b.second - a.second * b.first;
  return c == 0 ? 0 : (c > 0 ? 1 : -1);
}

inline int dot_sign(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) {
  Int d = a.first * b.first + a.second * b.second;
  return d == 0 ? 0 : (d > 0 ? 1 : -1);
}

// extreme points of a planar point set
inline std::vector<std::size_t> extreme_indices(const std::vector<Point>& pts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!hull_membership(pts[i], others)) out.push_back(i);
  }
  return out;
}

}  // namespace detail

// The selection rule at every vertex: incident segments contribute rays, the
// unique incident 2-dimensional body contributes a wedge spanned by its two
// boundary edges. A ray is selected when the clockwise angle from it to every
// other ray is strictly inside (0, pi); a wedge containing a ray internally is
// dropped, otherwise it competes as its counterclockwise-most boundary ray.
inline SelectionMap vertex_selection(const ThrackleInstance& instance) {
  if (instance.dim != 2)
    throw PreconditionError("vertex_selection: only planar instances are supported");
  auto transversal = check_transversal(instance);
  if (!transversal.ok)
    throw PreconditionError("vertex_selection: instance does not satisfy the transversal condition");

  std::size_t m = instance.body_count();
  std::vector<int> body_dim(m);
  for (std::size_t b = 0; b < m; ++b) body_dim[b] = affine_dim(instance.body_points(b));

  // 2-dimensional bodies must be pairwise vertex-disjoint
  SelectionMap result;
  std::map<std::string, std::vector<std::size_t>> incident;
  for (std::size_t b = 0; b < m; ++b)
    for (const auto& id : instance.bodies[b]) incident[id].push_back(b);
  for (const auto& [id, bs] : incident) {
    int planar_bodies = 0;
    bool has_segment = false;
    for (std::size_t b : bs) {
      if (body_dim[b] == 2)
        ++planar_bodies;
      else
        has_segment = true;
    }
    if (planar_bodies > 1)
      throw PreconditionError("vertex_selection: vertex " + id +
                              " lies in two 2-dimensional bodies");
    if (planar_bodies == 1 && has_segment)
      result.flags.push_back("vertex " + id + " shared by a segment and a 2-dimensional body");
  }

  using Dir = std::pair<Int, Int>;
  for (const auto& id : instance.V) {
    const Point& v = instance.W.coords(instance.W.index_of(id));
    auto it = incident.find(id);
    if (it == incident.end()) continue;

    std::vector<std::pair<Dir, std::size_t>> rays;  // direction, body
    std::optional<std::tuple<Dir, Dir, std::size_t>> wedge;  // e_a, e_b, body

    for (std::size_t b : it->second) {
      auto pts = instance.body_points(b);
      if (body_dim[b] == 1) {
        // one ray per side of v that carries body points
        std::vector<Dir> dirs;
        for (const auto& p : pts) {
          if (p == v) continue;
          Dir d = detail::primitive_direction(p[0] - v[0], p[1] - v[1]);
          bool known = false;
          for (const auto& e : dirs) known = known || e == d;
          if (!known) dirs.push_back(d);
        }
        for (const auto& d : dirs) rays.emplace_back(d, b);
      } else {
        auto ext = detail::extreme_indices(pts);
        bool v_extreme = false;
        for (std::size_t e : ext) v_extreme = v_extreme || pts[e] == v;
        if (!v_extreme)
          throw PreconditionError("vertex_selection: vertex " + id +
                                  " is not an extreme point of its 2-dimensional body");
        // hull neighbors of v: all other extreme points strictly on one side
        std::vector<Dir> boundary;
        for (std::size_t e : ext) {
          if (pts[e] == v) continue;
          int seen_pos = 0, seen_neg = 0;
          for (std::size_t f : ext) {
            if (f == e || pts[f] == v) continue;
            int s = orient({v, pts[e], pts[f]});
            (s > 0 ? seen_pos : seen_neg) += (s != 0);
          }
          if (!(seen_pos && seen_neg))
            boundary.push_back(detail::primitive_direction(pts[e][0] - v[0], pts[e][1] - v[1]));
        }
        if (boundary.size() != 2)
          throw DataCorruption("vertex_selection: malformed wedge at vertex " + id);
        Dir ea = boundary[0], eb = boundary[1];
        if (detail::cross_sign(ea, eb) < 0) std::swap(ea, eb);
        if (detail::cross_sign(ea, eb) == 0)
          throw DataCorruption("vertex_selection: degenerate wedge at vertex " + id);
        wedge = {ea, eb, b};
      }
    }

    // duplicate ray directions across bodies would force two transversal
    // points onto one segment, so a valid instance can never produce them
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t j = i + 1; j < rays.size(); ++j)
        if (rays[i].first == rays[j].first)
          throw DataCorruption("vertex_selection: two same-direction rays at vertex " + id);

    std::vector<std::pair<Dir, std::size_t>> candidates = rays;
    if (wedge) {
      auto [ea, eb, wbody] = *wedge;
      bool ray_inside = false;
      for (const auto& [d, b] : rays) {
        if (detail::cross_sign(ea, d) == 0 && detail::dot_sign(ea, d) > 0)
          throw DataCorruption("vertex_selection: ray along a wedge boundary at vertex " + id);
        if (detail::cross_sign(d, eb) == 0 && detail::dot_sign(d, eb) > 0)
          throw DataCorruption("vertex_selection: ray along a wedge boundary at vertex " + id);
        if (detail::cross_sign(ea, d) > 0 && detail::cross_sign(d, eb) > 0) ray_inside = true;
      }
      // a wedge with an internal ray is dropped; otherwise its
      // counterclockwise-most boundary ray competes for selection
      if (!ray_inside) candidates.emplace_back(eb, wbody);
    }

    // clockwise angle from rho to every other ray strictly inside (0, pi)
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool wins = true;
      for (std::size_t j = 0; j < candidates.size() && wins; ++j)
        if (j != i && detail::cross_sign(candidates[i].first, candidates[j].first) >= 0)
          wins = false;
      if (wins) {
        result.selected[id] = candidates[i].second;
        break;
      }
    }
  }
  return result;
}

// Every body selected by some vertex?
inline bool selection_surjective(const ThrackleInstance& instance, const SelectionMap& map) {
  std::vector<char> hit(instance.body_count(), 0);
  for (const auto& [id, b] : map.selected) hit[b] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

// Checks the structural promises of a selection map: selected bodies are
// incident to their vertices, one selection per vertex by construction.
inline void validate_selection(const ThrackleInstance& instance, const SelectionMap& map) {
  for (const auto& [id, b] : map.selected) {
    if (b >= instance.body_count()) throw InvalidInput("selection: body index out of range");
    bool incident = false;
    for (const auto& vid : instance.bodies[b]) incident = incident || vid == id;
    if (!incident) throw InvalidInput("selection: vertex " + id + " selected a non-incident body");
  }
}

}  // namespace ttl
