#pragma once

#include "exo/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace exo {

// Sparse vector over Q: (column, value) pairs, strictly increasing columns,
// no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Incremental row echelon form over Q. Columns are non-negative ints below a
// fixed count; the pivot of a row is its smallest column. Placing unwanted
// coordinates at the smallest column ids makes the rows whose pivot is past
// them a basis of the span intersected with the remaining coordinates.
class SparseEchelon {
public:
  explicit SparseEchelon(int columns);

  int columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces the row and stores it when independent; returns whether it was.
  bool insert(const SparseRow& row);
  SparseRow reduce(const SparseRow& row) const;
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  // Stored rows (monic at their pivot) whose pivot is >= first.
  std::vector<SparseRow> rows_from(int first) const;

private:
  int columns_;
  std::map<int, SparseRow> rows_; // pivot -> row
  mutable std::vector<Rational> acc_;
};

} // namespace exo
