#pragma once

#include <optional>
#include <vector>

#include "ttl/error.hpp"
#include "ttl/rational.hpp"

namespace ttl {

// Blocks of 0-based point indices. Canonical form: within a block indices
// ascend, blocks are ordered by their smallest element.
using IndexPartition = std::vector<std::vector<std::size_t>>;

// Number of partitions of an n-set into exactly r nonempty blocks, by the
// classic recurrence S(n,r) = r*S(n-1,r) + S(n-1,r-1).
inline Int stirling2(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  if (n == 0) return 1;  // r == 0 here
  if (r == 0) return 0;
  std::vector<Int> row(r + 1, 0);
  row[0] = 1;  // S(0,0)
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, r); j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[r];
}

// Streams every partition of {0..n-1} into exactly r nonempty blocks once, in
// the lexicographic order of restricted growth strings. seek() repositions the
// stream at an arbitrary 0-based rank, which lets parallel consumers split the
// space into deterministic chunks.
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::size_t n, std::size_t r) : n_(n), r_(r) {
    if (n == 0 || r == 0 || r > n)
      throw InvalidInput("PartitionEnumerator: need 1 <= r <= n");
    // completions_[i][m]: ways to fill positions i..n-1 so the final maximum
    // value is exactly r-1, given current maximum m (capped at r-1)
    completions_.assign(n_ + 1, std::vector<Int>(r_ + 1, 0));
    for (std::size_t m = 0; m <= r_; ++m) completions_[n_][m] = (m == r_) ? 1 : 0;
    for (std::size_t i = n_; i-- > 0;) {
      for (std::size_t m = 0; m <= r_; ++m) {
        // m counts distinct values used so far
        Int ways = Int(m) * completions_[i + 1][m];
        if (m < r_) ways += completions_[i + 1][m + 1];
        completions_[i][m] = ways;
      }
    }
    reset();
  }

  Int count() const { return completions_[0][0]; }

  void reset() {
    code_.assign(n_, 0);
    exhausted_ = !fill_smallest(0, 0);
  }

  // Positions the stream so the next() call yields the partition of the given
  // canonical rank.
  void seek(const Int& rank) {
    if (rank >= count()) {
      exhausted_ = true;
      return;
    }
    exhausted_ = false;
    code_.assign(n_, 0);
    Int rest = rank;
    std::size_t used = 0;  // distinct values among positions < i
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t vmax = std::min(used, r_ - 1);  // new value = used, capped
      for (std::size_t v = 0; v <= vmax; ++v) {
        std::size_t next_used = std::max(used, v + 1);
        const Int& c = completions_[i + 1][next_used];
        if (rest < c) {
          code_[i] = v;
          used = next_used;
          break;
        }
        rest -= c;
      }
    }
  }

  std::optional<IndexPartition> next() {
    if (exhausted_) return std::nullopt;
    IndexPartition part(r_);
    for (std::size_t i = 0; i < n_; ++i) part[code_[i]].push_back(i);
    advance();
    return part;
  }

 private:
  // Lexicographically smallest completion of positions from..n-1 given `used`
  // distinct values so far; fails when r-1 can no longer be reached.
  bool fill_smallest(std::size_t from, std::size_t used) {
    std::size_t missing = r_ - used;
    if (missing > n_ - from) return false;
    for (std::size_t i = from; i < n_; ++i) {
      std::size_t tail = n_ - i;
      if (tail == missing) {
        code_[i] = used;  // forced: introduce the next new value
        ++used;
        --missing;
      } else {
        code_[i] = 0;
      }
    }
    return true;
  }

  void advance() {
    // odometer step over restricted growth strings with exactly r values
    std::vector<std::size_t> used_before(n_ + 1);  // distinct values among prefix
    std::size_t used = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      used_before[i] = used;
      used = std::max(used, code_[i] + 1);
    }
    used_before[n_] = used;
    for (std::size_t i = n_; i-- > 1;) {
      std::size_t vmax = std::min(used_before[i], r_ - 1);
      for (std::size_t v = code_[i] + 1; v <= vmax; ++v) {
        std::size_t next_used = std::max(used_before[i], v + 1);
        if (completions_[i + 1][next_used] > 0) {
          code_[i] = v;
          if (fill_smallest(i + 1, next_used)) return;
        }
      }
    }
    exhausted_ = true;
  }

  std::size_t n_, r_;
  std::vector<std::size_t> code_;
  std::vector<std::vector<Int>> completions_;
  bool exhausted_ = false;
};

inline void validate_partition(const IndexPartition& partition, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::size_t covered = 0;
  for (const auto& block : partition) {
    if (block.empty()) throw InvalidInput("partition has an empty block");
    for (std::size_t i : block) {
      if (i >= n) throw InvalidInput("partition index out of range");
      if (seen[i]) throw InvalidInput("partition repeats an index");
      seen[i] = 1;
      ++covered;
    }
  }
  if (covered != n) throw InvalidInput("partition does not cover all indices");
}

}  // namespace ttl
