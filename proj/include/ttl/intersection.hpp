#pragma once

#include <cstddef>
#include <vector>

#include "ttl/convexity.hpp"
#include "ttl/error.hpp"
#include "ttl/linalg.hpp"
#include "ttl/lp.hpp"
#include "ttl/point.hpp"

namespace ttl {

// Exact analysis of P = conv(A) n conv(B) without vertex enumeration.
//
// The joint coefficient polytope F lives in (lambda, mu) space. A relative
// interior point of F is assembled by maximizing each coefficient in turn
// (slack maximization per inequality) and averaging the witnesses; the
// coefficients that stay identically zero on F are its implicit equalities.
// aff(F) is then the solution set of the equality rows plus those pinned
// coefficients, and dim P is the rank of the image of aff(F)'s direction
// space under the evaluation map lambda -> sum lambda_i A_i.
struct IntersectionInfo {
  int dim = -1;                 // dimension of P, -1 iff P is empty
  Point relint_point;           // a point in the relative interior of P
  std::vector<char> support_a;  // support_a[i] == 1 iff lambda_i > 0 somewhere on F
  std::vector<char> support_b;
};

inline IntersectionInfo intersect_hulls_info(const std::vector<Point>& a,
                                             const std::vector<Point>& b) {
  IntersectionInfo info;
  if (a.empty() || b.empty()) throw InvalidInput("intersect_hulls_info: empty point set");
  const std::size_t d = a[0].size();
  for (const auto& p : a)
    if (p.size() != d) throw InvalidInput("intersect_hulls_info: dimension mismatch");
  for (const auto& p : b)
    if (p.size() != d) throw InvalidInput("intersect_hulls_info: dimension mismatch");
  const std::size_t na = a.size(), nb = b.size(), nv = na + nb;

  LinearSystem sys(nv);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Rat> row(nv, Rat(0));
    for (std::size_t i = 0; i < na; ++i) row[i] = a[i][c];
    for (std::size_t j = 0; j < nb; ++j) row[na + j] = -b[j][c];
    sys.add_row(std::move(row), Rel::Eq, Rat(0));
  }
  {
    std::vector<Rat> row(nv, Rat(0));
    for (std::size_t i = 0; i < na; ++i) row[i] = 1;
    sys.add_row(std::move(row), Rel::Eq, Rat(1));
  }
  {
    std::vector<Rat> row(nv, Rat(0));
    for (std::size_t j = 0; j < nb; ++j) row[na + j] = 1;
    sys.add_row(std::move(row), Rel::Eq, Rat(1));
  }

  Simplex simplex(sys);
  if (!simplex.phase1()) return info;

  std::vector<std::vector<Rat>> witnesses;
  witnesses.push_back(simplex.extract());
  std::vector<char> positive(nv, 0);
  auto note_positive = [&](const std::vector<Rat>& z) {
    for (std::size_t v = 0; v < nv; ++v)
      if (z[v] > 0) positive[v] = 1;
  };
  note_positive(witnesses[0]);
  for (std::size_t v = 0; v < nv; ++v) {
    if (positive[v]) continue;
    std::vector<Rat> c(nv, Rat(0));
    c[v] = 1;
    auto res = simplex.maximize(c);
    if (res.status != LpStatus::Optimal) throw Error("coefficient polytope must be bounded");
    if (res.value > 0) {
      note_positive(res.point);
      witnesses.push_back(std::move(res.point));
    }
  }

  // Relative interior of F: the average of one witness per positive
  // coefficient keeps them all strictly positive.
  std::vector<Rat> center(nv, Rat(0));
  for (const auto& w : witnesses)
    for (std::size_t v = 0; v < nv; ++v) center[v] += w[v];
  Rat inv(1, static_cast<long>(witnesses.size()));
  for (auto& x : center) x *= inv;

  info.support_a.assign(positive.begin(), positive.begin() + na);
  info.support_b.assign(positive.begin() + na, positive.end());
  info.relint_point.assign(d, Rat(0));
  for (std::size_t i = 0; i < na; ++i)
    if (center[i] != 0)
      for (std::size_t c = 0; c < d; ++c) info.relint_point[c] += center[i] * a[i][c];

  // Direction space of aff(F): nullspace of the equality rows plus one
  // pinning row per implicit-zero coefficient.
  Matrix eq;
  for (const auto& r : sys.rows) eq.push_back(r.coef);
  for (std::size_t v = 0; v < nv; ++v) {
    if (positive[v]) continue;
    std::vector<Rat> row(nv, Rat(0));
    row[v] = 1;
    eq.push_back(std::move(row));
  }
  auto dirs = nullspace(std::move(eq), nv);
  Matrix image;
  for (const auto& n : dirs) {
    std::vector<Rat> x(d, Rat(0));
    for (std::size_t i = 0; i < na; ++i)
      if (n[i] != 0)
        for (std::size_t c = 0; c < d; ++c) x[c] += n[i] * a[i][c];
    image.push_back(std::move(x));
  }
  info.dim = static_cast<int>(rank(std::move(image)));
  return info;
}

// Dimension of conv(a) n conv(b); -1 when the hulls are disjoint.
inline int intersection_dim(const std::vector<Point>& a, const std::vector<Point>& b) {
  return intersect_hulls_info(a, b).dim;
}

}  // namespace ttl
