#include "cvxlat/linalg.hpp"

namespace cvxlat::linalg {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rat inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<Rat>> nullspace(Matrix m, std::size_t cols) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_unique(const Matrix& a, const std::vector<Rat>& b) {
  if (a.empty()) return std::nullopt;
  const std::size_t cols = a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  if (pivots.size() != cols) return std::nullopt;
  std::vector<Rat> x(cols);
  for (std::size_t k = 0; k < cols; ++k) x[k] = aug[k][cols];
  return x;
}

}  // namespace cvxlat::linalg
