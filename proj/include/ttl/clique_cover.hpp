#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ttl/error.hpp"

namespace ttl {

// Purely combinatorial family: sets of element ids plus a transversal
// candidate W.
struct AbstractThrackle {
  std::vector<std::vector<std::string>> sets;
  std::vector<std::string> W;
};

struct TransversalBoundReport {
  bool transversal_ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
  int violating_count = -1;
  // cover[c] lists the set indices sharing cover_elements[c]; only cliques
  // spanning at least one pair are kept
  std::vector<std::vector<std::size_t>> cover;
  std::vector<std::string> cover_elements;
  bool cover_is_decomposition = false;
  bool all_cliques_proper = false;
  std::size_t m = 0;
  std::size_t w_size = 0;
  bool bound_holds = false;
};

// Transversal counting plus the clique-cover argument behind m <= |W|: each
// W element induces a clique on the sets containing it, and a transversal
// makes those cliques decompose the complete intersection graph. The size
// bound then follows only when every clique is proper; a sunflower whose
// core carries the whole family induces the improper full clique, so the
// report states the facts instead of asserting the bound.
inline TransversalBoundReport abstract_transversal_bound(const AbstractThrackle& input) {
  TransversalBoundReport report;
  report.m = input.sets.size();
  report.w_size = input.W.size();
  if (input.sets.size() < 2) throw InvalidInput("abstract bound: need at least two sets");
  if (input.W.empty()) throw InvalidInput("abstract bound: W is empty");
  {
    std::set<std::string> seen;
    for (const auto& w : input.W)
      if (!seen.insert(w).second) throw InvalidInput("abstract bound: duplicate element in W");
  }
  std::vector<std::set<std::string>> sets;
  for (const auto& s : input.sets) {
    if (s.empty()) throw InvalidInput("abstract bound: empty set");
    sets.emplace_back(s.begin(), s.end());
    if (sets.back().size() != s.size())
      throw InvalidInput("abstract bound: set repeats an element");
  }

  for (std::size_t i = 0; i < sets.size() && report.transversal_ok; ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      int count = 0;
      for (const auto& w : input.W)
        if (sets[i].count(w) && sets[j].count(w)) ++count;
      if (count != 1) {
        report.transversal_ok = false;
        report.violating_pair = {i, j};
        report.violating_count = count;
        break;
      }
    }

  for (const auto& w : input.W) {
    std::vector<std::size_t> clique;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i].count(w)) clique.push_back(i);
    if (clique.size() >= 2) {
      report.cover.push_back(clique);
      report.cover_elements.push_back(w);
    }
  }

  // independent re-count: is every pair covered exactly once by the cover?
  report.cover_is_decomposition = true;
  for (std::size_t i = 0; i < sets.size() && report.cover_is_decomposition; ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      int covered = 0;
      for (const auto& clique : report.cover) {
        bool has_i = false, has_j = false;
        for (std::size_t c : clique) {
          has_i = has_i || c == i;
          has_j = has_j || c == j;
        }
        if (has_i && has_j) ++covered;
      }
      if (covered != 1) {
        report.cover_is_decomposition = false;
        break;
      }
    }

  report.all_cliques_proper = true;
  for (const auto& clique : report.cover)
    if (clique.size() == report.m) report.all_cliques_proper = false;
  report.bound_holds = report.m <= report.w_size;
  return report;
}

// Minimum number of proper cliques whose edge sets partition the complete
// graph on m vertices. Exact search over edge-disjoint decompositions,
// branching on the lowest uncovered edge; feasible for m up to 6.
inline int min_clique_cover_bruteforce(int m) {
  if (m < 3 || m > 6) throw InvalidInput("clique cover bruteforce: m must be between 3 and 6");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  int edge_count = static_cast<int>(edges.size());
  auto edge_index = [&](int i, int j) {
    for (int e = 0; e < edge_count; ++e)
      if (edges[e].first == i && edges[e].second == j) return e;
    throw DataCorruption("clique cover bruteforce: missing edge");
  };
  // candidate cliques: proper vertex subsets of size >= 2, as edge masks
  std::vector<unsigned> clique_mask;
  std::vector<int> clique_vertices;
  for (int s = 0; s < (1 << m); ++s) {
    int size = __builtin_popcount(static_cast<unsigned>(s));
    if (size < 2 || size == m) continue;
    unsigned mask = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if ((s >> i & 1) && (s >> j & 1)) mask |= 1u << edge_index(i, j);
    clique_mask.push_back(mask);
    clique_vertices.push_back(s);
  }
  unsigned full = (1u << edge_count) - 1;
  int best = edge_count + 1;
  auto rec = [&](auto&& self, unsigned covered, int used) -> void {
    if (used >= best) return;
    if (covered == full) {
      best = used;
      return;
    }
    int e = __builtin_ctz(~covered & full);
    int u = edges[e].first, v = edges[e].second;
    for (std::size_t c = 0; c < clique_mask.size(); ++c) {
      int s = clique_vertices[c];
      if (!(s >> u & 1) || !(s >> v & 1)) continue;
      if (clique_mask[c] & covered) continue;
      self(self, covered | clique_mask[c], used + 1);
    }
  };
  rec(rec, 0u, 0);
  return best;
}

}  // namespace ttl
