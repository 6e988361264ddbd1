#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ttl/complex.hpp"
#include "ttl/convexity.hpp"
#include "ttl/intersection.hpp"
#include "ttl/linalg.hpp"
#include "ttl/lp.hpp"

namespace ttl {

enum class StabilityKind { common_face, transverse, t_configuration, coplanar_overlap };

struct StabilityResult {
  bool stable = false;
  StabilityKind kind = StabilityKind::t_configuration;
};

namespace detail {

// barycentric coordinates of p in a nondegenerate simplex, empty when p is
// outside the affine hull
inline std::optional<std::vector<Rat>> barycentrics(const Point& p,
                                                    const std::vector<Point>& simplex) {
  std::size_t amb = p.size();
  Matrix a(amb + 1, std::vector<Rat>(simplex.size(), Rat(0)));
  std::vector<Rat> rhs(amb + 1, Rat(0));
  for (std::size_t t = 0; t < amb; ++t) {
    for (std::size_t j = 0; j < simplex.size(); ++j) a[t][j] = simplex[j][t];
    rhs[t] = p[t];
  }
  for (std::size_t j = 0; j < simplex.size(); ++j) a[amb][j] = 1;
  rhs[amb] = 1;
  return solve_linear(a, rhs);
}

inline bool in_relint_of_simplex(const Point& p, const std::vector<Point>& simplex) {
  auto bary = barycentrics(p, simplex);
  if (!bary) return false;
  for (const auto& c : *bary)
    if (c <= 0) return false;
  return true;
}

// conv(F) n conv(G) inside conv(S)? S is an affinely independent subset of
// the intersection, so conv(S) is contained in it; equality holds iff every
// barycentric functional of conv(S) stays nonnegative over the intersection.
inline bool intersection_inside_simplex(const std::vector<Point>& f, const std::vector<Point>& g,
                                        const std::vector<Point>& s) {
  std::size_t amb = f[0].size();
  std::size_t nf = f.size(), ng = g.size();
  LinearSystem sys(nf + ng);
  for (std::size_t t = 0; t < amb; ++t) {
    std::vector<Rat> row(nf + ng, Rat(0));
    for (std::size_t i = 0; i < nf; ++i) row[i] = f[i][t];
    for (std::size_t j = 0; j < ng; ++j) row[nf + j] = -g[j][t];
    sys.add_row(std::move(row), Rel::Eq, Rat(0));
  }
  {
    std::vector<Rat> row(nf + ng, Rat(0));
    for (std::size_t i = 0; i < nf; ++i) row[i] = 1;
    sys.add_row(std::move(row), Rel::Eq, Rat(1));
  }
  {
    std::vector<Rat> row(nf + ng, Rat(0));
    for (std::size_t j = 0; j < ng; ++j) row[nf + j] = 1;
    sys.add_row(std::move(row), Rel::Eq, Rat(1));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    // affine functional with value 1 on s[i], 0 on the rest of S
    Matrix a(s.size(), std::vector<Rat>(amb + 1, Rat(0)));
    std::vector<Rat> rhs(s.size(), Rat(0));
    for (std::size_t j = 0; j < s.size(); ++j) {
      for (std::size_t t = 0; t < amb; ++t) a[j][t] = s[j][t];
      a[j][amb] = 1;
    }
    rhs[i] = 1;
    auto functional = solve_linear(a, rhs);
    if (!functional) throw DataCorruption("stability: face functional does not exist");
    std::vector<Rat> objective(nf + ng, Rat(0));
    for (std::size_t k = 0; k < nf; ++k) {
      Rat value = (*functional)[amb];
      for (std::size_t t = 0; t < amb; ++t) value += (*functional)[t] * f[k][t];
      objective[k] = -value;  // maximize the negation = minimize the functional
    }
    auto res = lp_maximize(sys, objective);
    if (res.status != LpStatus::Optimal)
      throw DataCorruption("stability: containment program must be bounded");
    if (res.value > 0) return false;  // the functional goes negative somewhere
  }
  return true;
}

}  // namespace detail

// Stability of a pair of facets meeting in a (d-2)-ball: stable when the
// intersection is a common face, or when the affine hulls differ and the
// intersection's relative interior lies in both relative interiors
// (transverse crossing). A T-shaped contact and coplanar partial overlap are
// the unstable shapes, reported separately.
inline StabilityResult stability_check(const std::vector<Point>& f, const std::vector<Point>& g) {
  if (f.empty() || g.empty() || f.size() != g.size())
    throw PreconditionError("stability: facets must have equally many vertices");
  int facet_dim = static_cast<int>(f.size()) - 1;
  if (affine_dim(f) != facet_dim || affine_dim(g) != facet_dim)
    throw PreconditionError("stability: facets must be nondegenerate simplices");
  auto info = intersect_hulls_info(f, g);
  if (info.dim != facet_dim - 1)
    throw PreconditionError("stability: intersection must have dimension " +
                            std::to_string(facet_dim - 1));

  std::vector<Point> shared_f, shared_g;
  for (const auto& p : f)
    if (hull_membership(p, g)) shared_f.push_back(p);
  for (const auto& p : g)
    if (hull_membership(p, f)) shared_g.push_back(p);
  if (static_cast<int>(shared_f.size()) == facet_dim &&
      static_cast<int>(shared_g.size()) == facet_dim &&
      detail::intersection_inside_simplex(f, g, shared_f) &&
      detail::intersection_inside_simplex(f, g, shared_g))
    return {true, StabilityKind::common_face};

  std::vector<Point> joint = f;
  joint.insert(joint.end(), g.begin(), g.end());
  if (affine_dim(joint) == facet_dim) return {false, StabilityKind::coplanar_overlap};

  if (detail::in_relint_of_simplex(info.relint_point, f) &&
      detail::in_relint_of_simplex(info.relint_point, g))
    return {true, StabilityKind::transverse};
  return {false, StabilityKind::t_configuration};
}

struct PairViolation {
  std::size_t a = 0, b = 0;
  enum class Kind { disjoint, wrong_dimension, t_configuration, coplanar_overlap } kind =
      Kind::disjoint;
  int intersection_dim = -1;
};

struct LinearThrackleReport {
  std::vector<std::size_t> degenerate_facets;
  std::vector<PairViolation> violations;  // every failing pair, not just the first
  bool ok = false;
};

// Full check of the linear-thrackle conditions: nondegenerate facet images,
// every facet pair meeting in a stable (d-2)-ball.
inline LinearThrackleReport verify_linear_thrackle(const PureComplex& K,
                                                   const AffineRealization& realization) {
  validate_realization(K, realization);
  LinearThrackleReport report;
  std::size_t m = K.facets.size();
  std::vector<std::vector<Point>> pts(m);
  for (std::size_t i = 0; i < m; ++i) {
    pts[i] = facet_points(K, realization, i);
    if (affine_dim(pts[i]) != K.dim) report.degenerate_facets.push_back(i);
  }
  if (!report.degenerate_facets.empty()) return report;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      auto info = intersect_hulls_info(pts[a], pts[b]);
      if (info.dim < 0) {
        report.violations.push_back({a, b, PairViolation::Kind::disjoint, info.dim});
      } else if (info.dim != K.dim - 1) {
        report.violations.push_back({a, b, PairViolation::Kind::wrong_dimension, info.dim});
      } else {
        auto st = stability_check(pts[a], pts[b]);
        if (!st.stable)
          report.violations.push_back({a, b,
                                       st.kind == StabilityKind::coplanar_overlap
                                           ? PairViolation::Kind::coplanar_overlap
                                           : PairViolation::Kind::t_configuration,
                                       info.dim});
      }
    }
  report.ok = report.violations.empty();
  return report;
}

struct ReductionStep {
  std::vector<std::string> ridge;
  std::vector<std::vector<std::string>> incident;  // facets at the ridge when chosen
  std::vector<std::string> removed;
  std::vector<std::string> positive_facet, negative_facet;  // separation witnesses
};

struct ReductionResult {
  PureComplex reduced;
  std::vector<ReductionStep> trace;
};

// Removes facets until no ridge lies in three or more facets. At the lex
// smallest crowded ridge, the lex smallest incident facet is removed whose
// other ridges are free and whose hyperplane strictly separates two other
// incident facets' off-ridge vertices; incident facets sharing that
// hyperplane sit on neither side and cannot serve as witnesses.
inline ReductionResult reduce_complex(const PureComplex& K, const AffineRealization& realization) {
  validate_realization(K, realization);
  ReductionResult out;
  PureComplex cur = canonicalize(K);
  for (;;) {
    auto ridges = ridge_incidences(cur);
    const std::vector<std::string>* target = nullptr;
    for (const auto& [ridge, count] : ridges)
      if (count >= 3) {
        target = &ridge;
        break;
      }
    if (!target) break;

    std::vector<std::vector<std::string>> incident;
    for (const auto& facet : cur.facets) {
      bool contains = true;
      for (const auto& id : *target)
        contains = contains && std::binary_search(facet.begin(), facet.end(), id);
      if (contains) incident.push_back(facet);
    }

    auto off_vertex = [&](const std::vector<std::string>& facet) {
      for (const auto& id : facet)
        if (!std::binary_search(target->begin(), target->end(), id)) return id;
      throw DataCorruption("reduction: facet equals its ridge");
    };

    bool removed_one = false;
    for (const auto& candidate : incident) {
      // every ridge of the candidate other than the target must be free
      bool elsewhere_free = true;
      for (std::size_t drop = 0; drop < candidate.size() && elsewhere_free; ++drop) {
        std::vector<std::string> ridge;
        for (std::size_t i = 0; i < candidate.size(); ++i)
          if (i != drop) ridge.push_back(candidate[i]);
        if (ridge == *target) continue;
        elsewhere_free = ridges.at(ridge) == 1;
      }
      if (!elsewhere_free) continue;

      std::vector<Point> plane;
      for (const auto& id : candidate) plane.push_back(realization.at(id));
      const std::vector<std::string>* positive = nullptr;
      const std::vector<std::string>* negative = nullptr;
      for (const auto& other : incident) {
        if (other == candidate) continue;
        std::vector<Point> probe = plane;
        probe.push_back(realization.at(off_vertex(other)));
        int side = orient(probe);
        if (side > 0 && !positive) positive = &other;
        if (side < 0 && !negative) negative = &other;
      }
      if (!positive || !negative) continue;

      ReductionStep step;
      step.ridge = *target;
      step.incident = incident;
      step.removed = candidate;
      step.positive_facet = *positive;
      step.negative_facet = *negative;
      out.trace.push_back(step);
      cur.facets.erase(std::find(cur.facets.begin(), cur.facets.end(), candidate));
      removed_one = true;
      break;
    }
    if (!removed_one) {
      std::string ridge_ids;
      for (const auto& id : *target) ridge_ids += (ridge_ids.empty() ? "" : ",") + id;
      throw InvalidInput("reduction: no admissible facet at ridge {" + ridge_ids + "}");
    }
  }
  out.reduced = cur;
  return out;
}

// A trace is valid when rerunning the deterministic reduction reproduces it
// step for step, including the separation witnesses and the final complex.
inline bool replay_reduction(const PureComplex& K, const AffineRealization& realization,
                             const ReductionResult& claimed) {
  auto fresh = reduce_complex(K, realization);
  if (fresh.trace.size() != claimed.trace.size()) return false;
  for (std::size_t i = 0; i < fresh.trace.size(); ++i) {
    const auto& a = fresh.trace[i];
    const auto& b = claimed.trace[i];
    if (a.ridge != b.ridge || a.incident != b.incident || a.removed != b.removed ||
        a.positive_facet != b.positive_facet || a.negative_facet != b.negative_facet)
      return false;
  }
  return canonicalize(fresh.reduced).facets == canonicalize(claimed.reduced).facets;
}

}  // namespace ttl
