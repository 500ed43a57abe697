#include "gorstab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gorstab {

namespace {

std::size_t column_count(const Matrix& rows) {
  std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("ragged matrix");
  return n;
}

std::vector<Integer> integer_row(const Row& row) {
  Integer denom = 1;
  for (const auto& q : row) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) out.emplace_back(q.get_num() * (denom / q.get_den()));
  return out;
}

}  // namespace

std::size_t rank(const Matrix& rows) {
  const std::size_t n = column_count(rows);
  std::vector<std::vector<Integer>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(integer_row(r));

  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::vector<std::size_t> row_reduce(Matrix& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < columns; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank_gauss_jordan(const Matrix& rows) {
  Matrix copy = rows;
  return row_reduce(copy, column_count(rows)).size();
}

std::vector<Row> kernel_basis(const Matrix& rows, std::size_t columns) {
  if (!rows.empty() && column_count(rows) != columns)
    throw std::invalid_argument("kernel: column count mismatch");
  Matrix reduced = rows;
  auto pivots = row_reduce(reduced, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Row v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gorstab
