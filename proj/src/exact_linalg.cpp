#include "abideal/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

// Note: compare against zero through numerator(); boost::rational == int
// recurses forever under C++20 rewritten comparisons in Boost 1.74.

namespace abideal {

RationalMatrix to_rational(const std::vector<std::vector<int>>& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

namespace {

// Reduces m to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].numerator() == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational p = m[row][col];
    for (auto& x : m[row]) x /= p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(row_reduce(m, m.front().size()).size());
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix m, std::vector<Rational> rhs) {
  if (m.size() != rhs.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const std::size_t ncols = m.empty() ? 0 : m.front().size();
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(rhs[r]);
  const auto pivots = row_reduce(m, ncols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (m[r][ncols].numerator() != 0) return std::nullopt;
  std::vector<Rational> x(ncols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][ncols];
  return x;
}

std::optional<RationalMatrix> invert(RationalMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw std::invalid_argument("invert: matrix not square");
    for (std::size_t c = 0; c < n; ++c) m[r].push_back(Rational(r == c ? 1 : 0));
  }
  const auto pivots = row_reduce(m, n);
  if (pivots.size() != n) return std::nullopt;
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = m[r][n + c];
  return inv;
}

}  // namespace abideal
