#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttl/error.hpp"
#include "ttl/rational.hpp"

namespace ttl {

// A point is its coordinate vector; the ambient dimension is the length.
using Point = std::vector<Rat>;

inline Point sub(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InvalidInput("point dimension mismatch");
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Rat dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw InvalidInput("point dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// z-component of the cross product of two plane vectors.
inline Rat cross2(const Point& a, const Point& b) {
  if (a.size() != 2 || b.size() != 2) throw InvalidInput("cross2 needs plane vectors");
  return a[0] * b[1] - a[1] * b[0];
}

struct ConfigPoint {
  std::string id;
  Point coords;
  std::optional<int> color;
};

// An ordered list of labeled points sharing one ambient dimension.
// Coordinates may repeat; ids may not.
struct PointConfiguration {
  int dim = 0;
  std::vector<ConfigPoint> points;

  std::size_t size() const { return points.size(); }
  const Point& coords(std::size_t i) const { return points[i].coords; }

  void validate() const {
    if (dim < 0) throw InvalidInput("negative dimension");
    std::set<std::string> ids;
    for (const auto& p : points) {
      if (p.id.empty()) throw InvalidInput("empty point id");
      if (!ids.insert(p.id).second) throw InvalidInput("duplicate point id: " + p.id);
      if (static_cast<int>(p.coords.size()) != dim)
        throw InvalidInput("point " + p.id + " has wrong dimension");
    }
  }

  std::size_t index_of(const std::string& id) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].id == id) return i;
    throw InvalidInput("unknown point id: " + id);
  }
};

}  // namespace ttl
