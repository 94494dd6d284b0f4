#pragma once

#include <cstdint>
#include <vector>

namespace scrollreg {

struct SparseEntry {
  std::int32_t col;
  std::int64_t value;
};

/// A sparse integer row; entries sorted by column, no zero values.
using SparseRow = std::vector<SparseEntry>;

/// Rank over Q of the matrix with the given rows.
///
/// Fraction-free row reduction with content normalisation.  Runs in checked
/// 64-bit arithmetic and restarts in unbounded integers if an intermediate
/// value would overflow, so the result is exact either way.
std::size_t exact_rank(const std::vector<SparseRow>& rows);

/// Sorts entries by column, merges duplicates, and drops zeros.
SparseRow canonical_row(SparseRow row);

}  // namespace scrollreg
