#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ttl/convexity.hpp"
#include "ttl/point.hpp"

namespace ttl {

// Color classes C_0..C_d of points in the same ambient dimension.
struct ColoredConfiguration {
  int dim = 0;
  int r = 0;
  int k = 0;
  std::vector<std::vector<Point>> classes;

  PointConfiguration flatten() const {
    PointConfiguration out;
    out.dim = dim;
    for (std::size_t j = 0; j < classes.size(); ++j)
      for (std::size_t m = 0; m < classes[j].size(); ++m) {
        ConfigPoint p;
        p.id = "c" + std::to_string(j) + "_" + std::to_string(m + 1);
        p.coords = classes[j][m];
        p.color = int(j);
        out.points.push_back(std::move(p));
      }
    return out;
  }
};

// Blocks of (class index, member index) pairs, at most one point per class per
// block.
using RainbowSelection = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

// The inductive lower-bound construction: C_0 holds r-1 copies of the origin,
// and every further class puts ceil(r/2) points at +e_j and floor(r/2) at
// -e_j. Total size (r-1) + r*d.
inline ColoredConfiguration colored_witness(int d, int r, int k) {
  if (d < 1 || r < 2) throw PreconditionError("colored_witness: need d >= 1 and r >= 2");
  int half_up = (r + 1) / 2;
  if (k <= half_up || k > r)
    throw PreconditionError("colored_witness: the construction needs ceil(r/2) < k <= r");
  ColoredConfiguration out;
  out.dim = d;
  out.r = r;
  out.k = k;
  out.classes.emplace_back(r - 1, Point(d, Rat(0)));
  for (int j = 1; j <= d; ++j) {
    std::vector<Point> cls;
    for (int i = 0; i < half_up; ++i) {
      Point p(d, Rat(0));
      p[j - 1] = 1;
      cls.push_back(std::move(p));
    }
    for (int i = 0; i < r - half_up; ++i) {
      Point p(d, Rat(0));
      p[j - 1] = -1;
      cls.push_back(std::move(p));
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

// Exhaustive search over all rainbow selections: r disjoint blocks taking at
// most one point per class, block labels canonicalized by first use. Returns
// the first selection (in that canonical order) whose k-subfamilies of blocks
// all have intersecting hulls; empty blocks fail every subfamily containing
// them. Hull verdicts are memoized on the geometric shape of the selection,
// which collapses the many duplicate points the constructions above produce.
inline std::optional<RainbowSelection> find_rainbow_partition(
    const ColoredConfiguration& colored, int r, int k) {
  if (r < 2 || k < 2) throw PreconditionError("find_rainbow_partition: need r >= 2 and k >= 2");

  // flatten points and dedupe coordinates into atoms
  std::vector<std::pair<std::size_t, std::size_t>> flat;
  std::vector<int> atom_of;
  std::vector<Point> atoms;
  for (std::size_t j = 0; j < colored.classes.size(); ++j)
    for (std::size_t m = 0; m < colored.classes[j].size(); ++m) {
      flat.emplace_back(j, m);
      const Point& p = colored.classes[j][m];
      int id = -1;
      for (std::size_t a = 0; a < atoms.size(); ++a)
        if (atoms[a] == p) {
          id = int(a);
          break;
        }
      if (id < 0) {
        id = int(atoms.size());
        atoms.push_back(p);
      }
      atom_of.push_back(id);
    }
  std::size_t n = flat.size();

  // verdict cache keyed by the sorted blocks of sorted atom ids
  std::map<std::vector<std::vector<int>>, bool> verdicts;
  std::vector<int> assign(n, 0);  // 0 = unassigned, 1..r = block

  auto qualifies = [&](int blocks_used) -> bool {
    if (blocks_used < r) return false;  // an empty block kills some k-subfamily
    std::vector<std::vector<int>> shape(r);
    for (std::size_t i = 0; i < n; ++i)
      if (assign[i] > 0) shape[assign[i] - 1].push_back(atom_of[i]);
    for (auto& b : shape) {
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    std::sort(shape.begin(), shape.end());
    auto it = verdicts.find(shape);
    if (it != verdicts.end()) return it->second;
    bool ok = true;
    std::vector<std::size_t> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (ok) {
      std::vector<std::vector<Point>> families;
      for (std::size_t b : pick) {
        families.emplace_back();
        for (int a : shape[b]) families.back().push_back(atoms[a]);
      }
      if (!hulls_intersect(families)) ok = false;
      int i = k - 1;
      while (i >= 0 && pick[i] == std::size_t(r - k + i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    verdicts.emplace(std::move(shape), ok);
    return ok;
  };

  std::optional<RainbowSelection> found;
  // class_used[j] marks blocks already holding a point of class j
  std::vector<std::uint32_t> class_used(colored.classes.size(), 0);

  auto rec = [&](auto&& self, std::size_t pos, int blocks_used) -> bool {
    if (pos == n) {
      if (!qualifies(blocks_used)) return true;
      RainbowSelection sel(r);
      for (std::size_t i = 0; i < n; ++i)
        if (assign[i] > 0) sel[assign[i] - 1].push_back(flat[i]);
      found = std::move(sel);
      return false;
    }
    std::size_t cls = flat[pos].first;
    // remaining points cannot populate the blocks still missing
    if (int(n - pos) < r - blocks_used) return true;
    int top = std::min(blocks_used + 1, r);
    for (int digit = 0; digit <= top; ++digit) {
      if (digit > 0) {
        std::uint32_t bit = std::uint32_t(1) << (digit - 1);
        if (class_used[cls] & bit) continue;
        class_used[cls] |= bit;
        assign[pos] = digit;
        bool cont = self(self, pos + 1, std::max(blocks_used, digit));
        class_used[cls] &= ~bit;
        assign[pos] = 0;
        if (!cont) return false;
      } else {
        assign[pos] = 0;
        if (!self(self, pos + 1, blocks_used)) return false;
      }
    }
    return true;
  };
  if (k <= r) rec(rec, 0, 0);
  else
    found = RainbowSelection(r);  // no k-subfamilies exist, any selection works
  return found;
}

// Convenience check that a selection is a valid rainbow family for the given
// configuration: disjoint blocks, at most one point per class per block.
inline void validate_rainbow_selection(const ColoredConfiguration& colored,
                                       const RainbowSelection& sel) {
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (const auto& block : sel) {
    std::map<std::size_t, int> per_class;
    for (const auto& [j, m] : block) {
      if (j >= colored.classes.size() || m >= colored.classes[j].size())
        throw InvalidInput("rainbow selection references a missing point");
      if (++seen[{j, m}] > 1) throw InvalidInput("rainbow selection repeats a point");
      if (++per_class[j] > 1)
        throw InvalidInput("rainbow selection takes two points of one class in a block");
    }
  }
}

}  // namespace ttl
