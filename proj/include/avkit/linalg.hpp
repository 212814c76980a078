#pragma once

#include <vector>

#include "avkit/field.hpp"

namespace avkit {

// Row-reduces m in place (reduced row echelon form); returns pivot column
// indices, so rank == pivots.size(). Zero rows are removed.
template <typename K>
std::vector<int> row_reduce(std::vector<std::vector<K>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(r)]);
    K d = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].inv();
    for (int j = c; j < cols; ++j) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= d;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      K f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(static_cast<std::size_t>(r), std::vector<K>());
  return pivots;
}

template <typename K>
int matrix_rank(std::vector<std::vector<K>> m) {
  return static_cast<int>(row_reduce(m).size());
}

// Basis of the right kernel {v : m v = 0}.
template <typename K>
std::vector<std::vector<K>> kernel_basis(std::vector<std::vector<K>> m, int cols) {
  std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<K>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<K> v(static_cast<std::size_t>(cols), K(0));
    v[static_cast<std::size_t>(free)] = K(1);
    for (std::size_t r = 0; r < m.size(); ++r) {
      int pc = pivots[r];
      v[static_cast<std::size_t>(pc)] = -m[r][static_cast<std::size_t>(free)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename K>
K determinant(std::vector<std::vector<K>> m) {
  int n = static_cast<int>(m.size());
  K det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) { piv = i; break; }
    if (piv < 0) return K(0);
    if (piv != c) {
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(c)]);
      det = -det;
    }
    det *= m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    K d = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)].inv();
    for (int i = c + 1; i < n; ++i) {
      K f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * d;
      if (f.is_zero()) continue;
      for (int j = c; j < n; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
    }
  }
  return det;
}

}  // namespace avkit
