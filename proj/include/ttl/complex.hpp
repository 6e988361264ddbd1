#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ttl/point.hpp"
#include "ttl/rational.hpp"

namespace ttl {

// Pure simplicial complex given by its facets: every facet has exactly
// dim + 1 vertices.
struct PureComplex {
  int dim = 2;
  std::vector<std::vector<std::string>> facets;  // vertex ids, kept sorted

  std::vector<std::string> vertex_ids() const {
    std::set<std::string> ids;
    for (const auto& f : facets)
      for (const auto& v : f) ids.insert(v);
    return {ids.begin(), ids.end()};
  }
};

inline void validate_complex(const PureComplex& K) {
  if (K.dim < 1) throw InvalidInput("complex: dimension must be at least 1");
  if (K.facets.empty()) throw InvalidInput("complex: no facets");
  std::set<std::vector<std::string>> seen;
  for (const auto& f : K.facets) {
    if (static_cast<int>(f.size()) != K.dim + 1)
      throw InvalidInput("complex: facet has " + std::to_string(f.size()) + " vertices, expected " +
                         std::to_string(K.dim + 1));
    std::vector<std::string> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1]) throw InvalidInput("complex: facet repeats a vertex");
    if (!seen.insert(sorted).second) throw InvalidInput("complex: duplicate facet");
  }
}

// sorts each facet and the facet list, for canonical storage
inline PureComplex canonicalize(PureComplex K) {
  for (auto& f : K.facets) std::sort(f.begin(), f.end());
  std::sort(K.facets.begin(), K.facets.end());
  return K;
}

// Ridges are the (dim-1)-faces obtained by dropping one vertex from a facet,
// with the number of facets each one lies in.
inline std::map<std::vector<std::string>, int> ridge_incidences(const PureComplex& K) {
  validate_complex(K);
  std::map<std::vector<std::string>, int> out;
  for (const auto& f : K.facets) {
    std::vector<std::string> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t drop = 0; drop < sorted.size(); ++drop) {
      std::vector<std::string> ridge;
      for (std::size_t i = 0; i < sorted.size(); ++i)
        if (i != drop) ridge.push_back(sorted[i]);
      ++out[ridge];
    }
  }
  return out;
}

// The link of a vertex: facets containing it, with the vertex removed. A
// complex of one dimension lower.
inline PureComplex vertex_link(const PureComplex& K, const std::string& v) {
  validate_complex(K);
  PureComplex link;
  link.dim = K.dim - 1;
  for (const auto& f : K.facets) {
    bool has = false;
    for (const auto& id : f) has = has || id == v;
    if (!has) continue;
    std::vector<std::string> reduced;
    for (const auto& id : f)
      if (id != v) reduced.push_back(id);
    std::sort(reduced.begin(), reduced.end());
    link.facets.push_back(reduced);
  }
  if (link.facets.empty()) throw InvalidInput("vertex_link: vertex " + v + " is in no facet");
  return link;
}

struct FacetRidgeVerdict {
  std::size_t facets = 0;  // m
  std::size_t ridges = 0;  // n
  int d = 0;               // vertices per facet
  bool holds = false;      // d*m <= 2*n
};

// The facet/ridge count inequality d*m <= 2*n satisfied by verified linear
// thrackles; for boundaries of simplices it is an equality.
inline FacetRidgeVerdict facet_ridge_inequality(const PureComplex& K) {
  FacetRidgeVerdict v;
  v.facets = K.facets.size();
  v.ridges = ridge_incidences(K).size();
  v.d = K.dim + 1;
  v.holds = static_cast<std::size_t>(v.d) * v.facets <= 2 * v.ridges;
  return v;
}

struct VertexCountRow {
  std::string vertex;
  std::size_t facets_at = 0;
  std::size_t ridges_at = 0;
  bool holds = false;  // dim * facets_at <= 2c * ridges_at
};

struct CountingTransferReport {
  std::vector<VertexCountRow> rows;
  bool all_rows_hold = false;
  Rat global_lhs, global_rhs;  // (dim+1)*m vs 2c*n
  bool global_holds = false;
};

// Local-to-global counting: when every vertex satisfies
// dim * (facets at v) <= 2c * (ridges at v), summing over vertices yields
// (dim+1) * m <= 2c * n. Both sides are reported, the global verdict is
// evaluated directly.
inline CountingTransferReport counting_transfer(const PureComplex& K, const Rat& c) {
  validate_complex(K);
  if (c <= 0) throw InvalidInput("counting_transfer: c must be positive");
  auto ridges = ridge_incidences(K);
  CountingTransferReport report;
  for (const auto& v : K.vertex_ids()) {
    VertexCountRow row;
    row.vertex = v;
    for (const auto& f : K.facets)
      for (const auto& id : f) row.facets_at += id == v ? 1 : 0;
    for (const auto& [ridge, count] : ridges) {
      (void)count;
      for (const auto& id : ridge) row.ridges_at += id == v ? 1 : 0;
    }
    row.holds = Rat(K.dim) * Rat(static_cast<long long>(row.facets_at)) <=
                2 * c * Rat(static_cast<long long>(row.ridges_at));
    report.rows.push_back(row);
  }
  report.all_rows_hold = true;
  for (const auto& row : report.rows) report.all_rows_hold = report.all_rows_hold && row.holds;
  report.global_lhs = Rat(K.dim + 1) * Rat(static_cast<long long>(K.facets.size()));
  report.global_rhs = 2 * c * Rat(static_cast<long long>(ridges.size()));
  report.global_holds = report.global_lhs <= report.global_rhs;
  return report;
}

// Vertex id -> point in R^(dim+1).
using AffineRealization = std::map<std::string, Point>;

inline void validate_realization(const PureComplex& K, const AffineRealization& realization) {
  validate_complex(K);
  std::size_t ambient = static_cast<std::size_t>(K.dim) + 1;
  for (const auto& v : K.vertex_ids()) {
    auto it = realization.find(v);
    if (it == realization.end())
      throw InvalidInput("realization: vertex " + v + " has no coordinates");
    if (it->second.size() != ambient)
      throw InvalidInput("realization: vertex " + v + " has wrong ambient dimension");
  }
}

inline std::vector<Point> facet_points(const PureComplex& K, const AffineRealization& realization,
                                       std::size_t facet) {
  std::vector<Point> pts;
  for (const auto& id : K.facets[facet]) pts.push_back(realization.at(id));
  return pts;
}

}  // namespace ttl
