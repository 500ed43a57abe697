#pragma once

#include "gorstab/rational.hpp"

#include <cstddef>
#include <vector>

namespace gorstab {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Rank over Q by fraction-free (Bareiss) elimination. Rows are first
/// scaled to integers, which does not change the rank.
std::size_t rank(const Matrix& rows);

/// Rank over Q by ordinary Gauss-Jordan elimination.
std::size_t rank_gauss_jordan(const Matrix& rows);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& rows, std::size_t columns);

/// Basis of {v : rows * v = 0} for vectors of length `columns`.
std::vector<Row> kernel_basis(const Matrix& rows, std::size_t columns);

}  // namespace gorstab
