#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ttl/error.hpp"
#include "ttl/rational.hpp"

namespace ttl {

using Matrix = std::vector<std::vector<Rat>>;

namespace detail {

// Row-reduces `a` in place to row echelon form. Returns the pivot column of
// each pivot row, in order, and flips `row_swap_parity` per swap.
inline std::vector<std::size_t> echelonize(Matrix& a, bool* row_swap_parity = nullptr) {
  std::vector<std::size_t> pivot_cols;
  if (a.empty()) return pivot_cols;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      if (row_swap_parity) *row_swap_parity = !*row_swap_parity;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace detail

inline std::size_t rank(Matrix a) {
  return detail::echelonize(a).size();
}

// Sign of det(a) for a square matrix: -1, 0, or +1.
inline int det_sign(Matrix a) {
  if (a.empty()) return 1;
  if (a.size() != a[0].size()) throw InvalidInput("det_sign needs a square matrix");
  bool parity = false;
  auto pivots = detail::echelonize(a, &parity);
  if (pivots.size() < a.size()) return 0;
  int s = parity ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) s *= a[i][pivots[i]].sign();
  return s;
}

// Basis of {x : a x = 0}. `cols` must be the column count (a may be empty).
inline std::vector<std::vector<Rat>> nullspace(Matrix a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw InvalidInput("nullspace: ragged matrix");
  auto pivot_cols = detail::echelonize(a);
  // Back-substitute one basis vector per free column.
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[fc] = 1;
    for (std::size_t pi = pivot_cols.size(); pi-- > 0;) {
      std::size_t pc = pivot_cols[pi];
      Rat s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (v[j] != 0) s += a[pi][j] * v[j];
      v[pc] = -s / a[pi][pc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves a x = b if consistent; returns one solution (free variables zero).
inline std::optional<std::vector<Rat>> solve_linear(Matrix a, std::vector<Rat> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw InvalidInput("solve_linear: rhs size mismatch");
  Matrix aug = std::move(a);
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(std::move(b[i]));
  auto pivot_cols = detail::echelonize(aug);
  // Inconsistent iff some pivot lands in the appended column.
  for (auto c : pivot_cols)
    if (c == cols) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t pi = pivot_cols.size(); pi-- > 0;) {
    std::size_t pc = pivot_cols[pi];
    Rat s = aug[pi][cols];
    for (std::size_t j = pc + 1; j < cols; ++j)
      if (x[j] != 0) s -= aug[pi][j] * x[j];
    x[pc] = s / aug[pi][pc];
  }
  return x;
}

}  // namespace ttl
