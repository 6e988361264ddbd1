#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <vector>

#include "ttl/convexity.hpp"
#include "ttl/general_position.hpp"
#include "ttl/partitions.hpp"
#include "ttl/point.hpp"

namespace ttl {

struct SubfamilyWitness {
  std::vector<std::size_t> subfamily;  // block indices, ascending
  Point point;                         // lies in every block hull of the subfamily
};

// A qualifying partition: every k-subfamily of its blocks has intersecting
// hulls, witnessed explicitly.
struct PartitionWitness {
  IndexPartition partition;
  std::vector<SubfamilyWitness> witnesses;  // one per k-subfamily, lex order
};

struct CertificateEntry {
  IndexPartition partition;
  std::vector<std::size_t> empty_subfamily;  // block indices whose hulls miss
};

// Exhaustive no-partition certificate: one failing k-subfamily recorded for
// every partition of the configuration into r nonempty blocks.
struct WitnessCertificate {
  PointConfiguration config;
  int r = 0;
  int k = 0;
  std::vector<CertificateEntry> entries;  // canonical partition order
  Int partitions_checked() const { return Int(entries.size()); }
};

struct VerifyResult {
  std::optional<WitnessCertificate> certificate;    // set on success
  std::optional<PartitionWitness> counterexample;   // set on failure
  bool verified() const { return certificate.has_value(); }
};

struct SearchOptions {
  unsigned jobs = 1;
  Int max_partitions = Int(100000000);  // refuse larger search spaces
};

namespace detail {

inline void check_search_params(const PointConfiguration& config, int r, int k) {
  config.validate();
  if (k < 2 || r < k || int(config.size()) < r)
    throw PreconditionError("partition search needs n >= r >= k >= 2");
}

inline std::vector<std::vector<Point>> block_hulls(const PointConfiguration& config,
                                                   const IndexPartition& partition) {
  std::vector<std::vector<Point>> hulls;
  for (const auto& block : partition) {
    std::vector<Point> pts;
    for (std::size_t i : block) pts.push_back(config.coords(i));
    hulls.push_back(std::move(pts));
  }
  return hulls;
}

// Visits k-subsets of {0..r-1} in lex order.
template <typename F>
bool for_each_subfamily(int r, int k, F&& f) {
  std::vector<std::size_t> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    if (!f(pick)) return false;
    int i = k - 1;
    while (i >= 0 && pick[i] == std::size_t(r - k + i)) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// All k-subfamilies intersect -> witnesses; otherwise the first failing one.
struct PartitionCheck {
  bool qualifies;
  std::vector<SubfamilyWitness> witnesses;
  std::vector<std::size_t> empty_subfamily;
};

inline PartitionCheck check_partition(const PointConfiguration& config,
                                      const IndexPartition& partition, int k) {
  auto hulls = block_hulls(config, partition);
  PartitionCheck out{true, {}, {}};
  for_each_subfamily(int(partition.size()), k, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::vector<Point>> families;
    for (std::size_t b : pick) families.push_back(hulls[b]);
    auto hit = hulls_intersect(families);
    if (hit) {
      out.witnesses.push_back({pick, hit->point});
      return true;
    }
    out.qualifies = false;
    out.empty_subfamily = pick;
    out.witnesses.clear();
    return false;
  });
  return out;
}

}  // namespace detail

// Searches every partition of the configuration into r nonempty blocks for one
// whose k-subfamilies all have a common hull point. Returns the first
// qualifying partition in canonical order, independent of the worker count.
inline std::optional<PartitionWitness> find_partition(const PointConfiguration& config, int r,
                                                      int k, const SearchOptions& opts = {}) {
  detail::check_search_params(config, r, k);
  std::size_t n = config.size();
  Int total = stirling2(n, r);
  if (total > opts.max_partitions)
    throw BudgetExceeded("find_partition: " + total.str() + " partitions exceed the budget of " +
                         opts.max_partitions.str());

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || total < 64) {
    PartitionEnumerator e(n, r);
    while (auto p = e.next()) {
      auto check = detail::check_partition(config, *p, k);
      if (check.qualifies) return PartitionWitness{*p, std::move(check.witnesses)};
    }
    return std::nullopt;
  }

  // deterministic fan-out: fixed rank ranges per worker, lowest hit wins
  std::vector<std::optional<std::pair<Int, PartitionWitness>>> hits(jobs);
  std::vector<std::thread> workers;
  Int chunk = total / jobs + 1;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      Int lo = chunk * w;
      Int hi = lo + chunk;
      if (hi > total) hi = total;
      if (lo >= hi) return;
      PartitionEnumerator e(n, r);
      e.seek(lo);
      for (Int rank = lo; rank < hi; ++rank) {
        auto p = e.next();
        auto check = detail::check_partition(config, *p, k);
        if (check.qualifies) {
          hits[w] = std::make_pair(rank, PartitionWitness{*p, std::move(check.witnesses)});
          return;
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  std::optional<std::pair<Int, PartitionWitness>> best;
  for (auto& h : hits)
    if (h && (!best || h->first < best->first)) best = std::move(h);
  if (best) return std::move(best->second);
  return std::nullopt;
}

// Exhaustively certifies that no partition qualifies, or returns the earliest
// qualifying partition as a counterexample.
inline VerifyResult verify_no_partition(const PointConfiguration& config, int r, int k,
                                        const SearchOptions& opts = {}) {
  detail::check_search_params(config, r, k);
  std::size_t n = config.size();
  Int total = stirling2(n, r);
  if (total > opts.max_partitions)
    throw BudgetExceeded("verify_no_partition: " + total.str() +
                         " partitions exceed the budget of " + opts.max_partitions.str());

  unsigned jobs = std::max(1u, opts.jobs);
  VerifyResult result;
  WitnessCertificate cert;
  cert.config = config;
  cert.r = r;
  cert.k = k;

  if (jobs == 1 || total < 64) {
    PartitionEnumerator e(n, r);
    while (auto p = e.next()) {
      auto check = detail::check_partition(config, *p, k);
      if (check.qualifies) {
        result.counterexample = PartitionWitness{*p, std::move(check.witnesses)};
        return result;
      }
      cert.entries.push_back({*p, std::move(check.empty_subfamily)});
    }
    result.certificate = std::move(cert);
    return result;
  }

  struct WorkerOut {
    std::vector<CertificateEntry> entries;
    std::optional<std::pair<Int, PartitionWitness>> hit;
  };
  std::vector<WorkerOut> outs(jobs);
  std::vector<std::thread> workers;
  Int chunk = total / jobs + 1;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      Int lo = chunk * w;
      Int hi = lo + chunk;
      if (hi > total) hi = total;
      if (lo >= hi) return;
      PartitionEnumerator e(n, r);
      e.seek(lo);
      for (Int rank = lo; rank < hi; ++rank) {
        auto p = e.next();
        auto check = detail::check_partition(config, *p, k);
        if (check.qualifies) {
          outs[w].hit = std::make_pair(rank, PartitionWitness{*p, std::move(check.witnesses)});
          return;
        }
        outs[w].entries.push_back({*p, std::move(check.empty_subfamily)});
      }
    });
  }
  for (auto& t : workers) t.join();
  std::optional<std::pair<Int, PartitionWitness>> best;
  for (auto& o : outs)
    if (o.hit && (!best || o.hit->first < best->first)) best = std::move(o.hit);
  if (best) {
    result.counterexample = std::move(best->second);
    return result;
  }
  for (auto& o : outs)
    for (auto& entry : o.entries) cert.entries.push_back(std::move(entry));
  result.certificate = std::move(cert);
  return result;
}

// Lifts a configuration one dimension up: originals gain a 0 coordinate, k-1
// new points sit strictly above at height 1 with staggered first coordinates.
inline PointConfiguration lift_witness(const PointConfiguration& config, int k) {
  config.validate();
  if (k < 2) throw PreconditionError("lift_witness: k must be at least 2");
  PointConfiguration out;
  out.dim = config.dim + 1;
  for (const auto& p : config.points) {
    ConfigPoint q = p;
    q.coords.emplace_back(0);
    out.points.push_back(std::move(q));
  }
  for (int j = 0; j < k - 1; ++j) {
    ConfigPoint q;
    // dimension tag keeps ids unique across repeated lifts
    q.id = "l" + std::to_string(out.dim) + "_" + std::to_string(j + 1);
    while (std::any_of(config.points.begin(), config.points.end(),
                       [&](const ConfigPoint& p) { return p.id == q.id; }))
      q.id.insert(q.id.begin(), '_');
    q.coords.assign(out.dim, Rat(0));
    q.coords[0] = j;
    q.coords[out.dim - 1] = 1;
    out.points.push_back(std::move(q));
  }
  return out;
}

// Exact bound r((k-1)/k d + 1) and its ceiling.
struct SgpBound {
  Rat exact;
  Int ceiling;
};

inline SgpBound sgp_size_bound(int d, int r, int k) {
  if (d < 1 || k < 2 || r < k) throw PreconditionError("sgp_size_bound: need d >= 1, 2 <= k <= r");
  Rat exact = Rat(r) * (Rat(k - 1, k) * d + 1);
  return {exact, rat_ceil(exact)};
}

// Replays the counting argument behind the bound: for every k-subfamily of
// blocks with intersecting hulls, the affine-hull codimensions must sum to at
// most d. Callers are responsible for ensuring strong general position.
struct SgpCountingReport {
  std::vector<int> block_dims;
  struct SubfamilyCount {
    std::vector<std::size_t> subfamily;
    bool intersects = false;
    Int codim_sum = 0;
    bool bound_ok = true;  // vacuously true for non-intersecting subfamilies
  };
  std::vector<SubfamilyCount> subfamilies;
  bool all_subfamilies_intersect = true;
  bool codim_bounds_ok = true;
  bool size_bound_ok = true;  // n >= bound ceiling; vacuous unless all intersect
  bool passed = false;
};

inline SgpCountingReport check_sgp_counting(const PointConfiguration& config,
                                            const IndexPartition& partition, int k) {
  config.validate();
  validate_partition(partition, config.size());
  int r = int(partition.size());
  if (k < 2 || r < k) throw PreconditionError("check_sgp_counting: need 2 <= k <= r");

  SgpCountingReport report;
  auto hulls = detail::block_hulls(config, partition);
  for (const auto& pts : hulls) report.block_dims.push_back(affine_dim(pts));

  int d = config.dim;
  detail::for_each_subfamily(r, k, [&](const std::vector<std::size_t>& pick) {
    SgpCountingReport::SubfamilyCount entry;
    entry.subfamily = pick;
    std::vector<std::vector<Point>> families;
    for (std::size_t b : pick) families.push_back(hulls[b]);
    entry.intersects = hulls_intersect(families).has_value();
    for (std::size_t b : pick) entry.codim_sum += d - report.block_dims[b];
    if (entry.intersects && entry.codim_sum > d) {
      entry.bound_ok = false;
      report.codim_bounds_ok = false;
    }
    if (!entry.intersects) report.all_subfamilies_intersect = false;
    report.subfamilies.push_back(std::move(entry));
    return true;
  });

  if (report.all_subfamilies_intersect) {
    auto bound = sgp_size_bound(d, r, k);
    report.size_bound_ok = Int(config.size()) >= bound.ceiling;
  }
  report.passed = report.codim_bounds_ok && report.size_bound_ok;
  return report;
}

}  // namespace ttl
