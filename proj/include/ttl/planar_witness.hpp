#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ttl/tverberg.hpp"

namespace ttl {

namespace detail {

// Certified planar configurations of 3r-3 points admitting no partition into r
// blocks with pairwise intersecting hulls. Found by seeded generic sampling
// and kept fixed so downstream constructions are reproducible; the test suite
// re-certifies each entry exhaustively.
inline const std::vector<std::pair<int, std::vector<std::array<int, 2>>>>& planar_witness_table() {
  static const std::vector<std::pair<int, std::vector<std::array<int, 2>>>> table = {
      {2, {{6004, 7148}, {-8998, 644}, {6515, 89}}},
      {3,
       {{6004, 7148},
        {-8998, 644},
        {6515, 89},
        {-6539, -5191},
        {2185, -9177},
        {1000, -7709}}},
      {4,
       {{-6465, -9614},
        {-4050, -1385},
        {-1114, 8412},
        {5425, 730},
        {9024, -2679},
        {350, 328},
        {-9136, -2761},
        {7637, 8583},
        {-2359, 4013}}},
  };
  return table;
}

}  // namespace detail

// Planar configuration of 3r-3 points with no qualifying partition for
// (r, k=2): cached for small r, otherwise found by the same seeded search and
// certified on the spot.
inline PointConfiguration reay_planar_witness(int r, const SearchOptions& opts = {},
                                              std::uint64_t seed_budget = 200) {
  if (r < 2) throw PreconditionError("reay_planar_witness: r must be at least 2");
  for (const auto& [rr, coords] : detail::planar_witness_table()) {
    if (rr != r) continue;
    PointConfiguration config;
    config.dim = 2;
    int i = 0;
    for (const auto& xy : coords) {
      ConfigPoint p;
      p.id = "p" + std::to_string(++i);
      p.coords = {Rat(xy[0]), Rat(xy[1])};
      config.points.push_back(std::move(p));
    }
    return config;
  }
  for (std::uint64_t seed = 1; seed <= seed_budget; ++seed) {
    auto candidate = sample_generic_config(2, 3 * r - 3, seed);
    if (verify_no_partition(candidate, r, 2, opts).verified()) return candidate;
  }
  throw BudgetExceeded("reay_planar_witness: no certified configuration within " +
                       std::to_string(seed_budget) + " seeds for r=" + std::to_string(r));
}

// Chains dimension lifts on top of a planar witness: each lift adds k-1 points
// and one dimension, giving 3r-3+(k-1)(d-2) points in dimension d.
inline PointConfiguration reay_chain_witness(int d, int r, int k, const SearchOptions& opts = {}) {
  if (d < 2) throw PreconditionError("reay_chain_witness: d must be at least 2");
  if (k < 2 || r < k) throw PreconditionError("reay_chain_witness: need 2 <= k <= r");
  PointConfiguration config = reay_planar_witness(r, opts);
  for (int dim = 2; dim < d; ++dim) config = lift_witness(config, k);
  return config;
}

}  // namespace ttl
