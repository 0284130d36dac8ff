#include "flowtri/exact.hpp"

#include <algorithm>
#include <utility>

#include "flowtri/errors.hpp"

namespace flowtri {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& rows) {
  RationalMatrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

// Row-reduces in place and returns the pivot columns. Columns at or beyond
// `column_limit` are reduced but never chosen as pivots.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t column_limit) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < std::min(cols, column_limit) && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  auto m = to_rational(rows);
  return row_reduce(m, m.front().size()).size();
}

IntMatrix difference_rows(const IntMatrix& points) {
  IntMatrix out;
  if (points.size() < 2) return out;
  out.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector row(points[i].size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = points[i][c] - points[0][c];
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t affine_rank(const IntMatrix& points) { return rank(difference_rows(points)); }

std::vector<BigInt> elementary_divisors(const IntMatrix& rows) {
  std::vector<BigInt> divisors;
  if (rows.empty()) return divisors;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; promote it and retry.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
            bi = t;
            bj = j;
          }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad_row][j];
    }
    divisors.push_back(abs(a[t][t]));
  }
  return divisors;
}

std::optional<std::vector<Rational>> affine_coordinates(const IntMatrix& points,
                                                        const IntVector& target) {
  const std::size_t k = points.size();
  if (k == 0) throw ConsistencyError("affine_coordinates: empty point set");
  const std::size_t dim = target.size();
  RationalMatrix m(dim + 1, std::vector<Rational>(k + 1));
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t i = 0; i < k; ++i) m[c][i] = points[i][c];
    m[c][k] = target[c];
  }
  for (std::size_t i = 0; i < k; ++i) m[dim][i] = 1;
  m[dim][k] = 1;

  const auto pivots = row_reduce(m, k);
  if (pivots.size() != k) throw ConsistencyError("affine_coordinates: points are affinely dependent");
  for (std::size_t r = k; r < m.size(); ++r)
    if (m[r][k] != 0) return std::nullopt;
  std::vector<Rational> lambda(k);
  for (std::size_t r = 0; r < k; ++r) lambda[pivots[r]] = m[r][k];
  return lambda;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace flowtri
