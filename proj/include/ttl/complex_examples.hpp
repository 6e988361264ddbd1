#pragma once

#include <string>
#include <vector>

#include "ttl/linear_thrackle.hpp"
#include "ttl/thrackle_examples.hpp"

namespace ttl {

struct RealizedComplex {
  PureComplex complex;
  AffineRealization realization;
};

// Boundary of a d-simplex: origin plus scaled basis vectors, one facet per
// omitted vertex. Every facet pair meets in the common face spanned by the
// shared vertices, and d*m = 2*n holds with equality.
inline RealizedComplex simplex_boundary(int d) {
  if (d < 2) throw InvalidInput("simplex_boundary: d must be at least 2");
  RealizedComplex out;
  out.complex.dim = d - 1;
  std::vector<std::string> ids;
  for (int i = 0; i <= d; ++i) {
    std::string id = "v" + std::to_string(i);
    ids.push_back(id);
    Point p(static_cast<std::size_t>(d), Rat(0));
    if (i > 0) p[static_cast<std::size_t>(i - 1)] = Rat(i);
    out.realization[id] = p;
  }
  for (int omit = 0; omit <= d; ++omit) {
    std::vector<std::string> facet;
    for (int i = 0; i <= d; ++i)
      if (i != omit) facet.push_back(ids[static_cast<std::size_t>(i)]);
    out.complex.facets.push_back(facet);
  }
  validate_realization(out.complex, out.realization);
  return out;
}

// Every triple of a square base plus its apex. Not a linear thrackle: the
// side triangles over opposite base edges meet only at the apex (a 0-ball),
// and coplanar base triangles overlap in area.
inline RealizedComplex pyramid_example() {
  RealizedComplex out;
  out.complex.dim = 2;
  out.realization["1"] = {Rat(-1), Rat(-1), Rat(0)};
  out.realization["2"] = {Rat(1), Rat(-1), Rat(0)};
  out.realization["3"] = {Rat(1), Rat(1), Rat(0)};
  out.realization["4"] = {Rat(-1), Rat(1), Rat(0)};
  out.realization["5"] = {Rat(0), Rat(0), Rat(1)};
  out.complex.facets = {
      {"1", "2", "5"}, {"2", "3", "5"}, {"3", "4", "5"}, {"4", "1", "5"},
      {"1", "2", "3"}, {"2", "3", "4"}, {"3", "4", "1"}, {"4", "1", "2"},
      {"1", "3", "5"}, {"2", "4", "5"},
  };
  validate_realization(out.complex, out.realization);
  return out;
}

// Three triangles sharing a spine edge, pages spread so that the first
// page's plane strictly separates the other two. The spine ridge has
// incidence three and the reduction removes exactly one page.
inline RealizedComplex book_example() {
  RealizedComplex out;
  out.complex.dim = 2;
  out.realization["s1"] = {Rat(0), Rat(0), Rat(0)};
  out.realization["s2"] = {Rat(0), Rat(0), Rat(1)};
  out.realization["p1"] = {Rat(1), Rat(0), Rat(0)};
  out.realization["p2"] = {Rat(-1), Rat(2), Rat(0)};
  out.realization["p3"] = {Rat(-1), Rat(-2), Rat(0)};
  out.complex.facets = {{"s1", "s2", "p1"}, {"s1", "s2", "p2"}, {"s1", "s2", "p3"}};
  validate_realization(out.complex, out.realization);
  return out;
}

// Cone over a heptagram: seven near-regular convex-position vertices, all
// seven step-3 star chords coned to a first apex, three pairwise-crossing
// designated chords additionally coned to a second apex. The second apex
// coordinates were found by search and are frozen; the constructor reruns
// the full verification and refuses to hand out a broken complex.
inline RealizedComplex star_cone_example() {
  RealizedComplex out;
  out.complex.dim = 2;
  const Rat ts[7] = {Rat(-22, 5), Rat(-5, 4), Rat(-12, 25), Rat(0),
                     Rat(12, 25), Rat(5, 4),  Rat(22, 5)};
  for (int i = 0; i < 7; ++i) {
    Point p = detail::circle_point(ts[i]);
    out.realization["v" + std::to_string(i)] = {p[0], p[1], Rat(0)};
  }
  out.realization["a1"] = {Rat(0), Rat(0), Rat(1)};
  out.realization["a2"] = {Rat(-1, 2), Rat(1, 4), Rat(1, 2)};
  for (int i = 0; i < 7; ++i) {
    int j = (i + 3) % 7;
    out.complex.facets.push_back({"v" + std::to_string(i), "v" + std::to_string(j), "a1"});
  }
  for (int i = 0; i < 3; ++i) {
    int j = i + 3;
    out.complex.facets.push_back({"v" + std::to_string(i), "v" + std::to_string(j), "a2"});
  }
  validate_realization(out.complex, out.realization);
  auto report = verify_linear_thrackle(out.complex, out.realization);
  if (!report.ok)
    throw DataCorruption("star cone: frozen apex coordinates fail verification");
  return out;
}

}  // namespace ttl
