#include "exo/linear_span.hpp"

#include "exo/errors.hpp"

#include <algorithm>

namespace exo {

SparseEchelon::SparseEchelon(int columns) : columns_(columns), acc_(static_cast<std::size_t>(columns)) {
  if (columns < 0)
    throw Error("negative column count");
}

SparseRow SparseEchelon::reduce(const SparseRow& row) const {
  if (row.empty())
    return {};
  int lo = columns_, hi = -1;
  for (const auto& [c, v] : row) {
    if (c < 0 || c >= columns_)
      throw Error("column index out of range");
    acc_[c] = v;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  SparseRow out;
  for (int c = lo; c <= hi; ++c) {
    if (sgn(acc_[c]) == 0)
      continue;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      out.emplace_back(c, acc_[c]);
      acc_[c] = 0;
      continue;
    }
    Rational f = acc_[c];
    for (const auto& [pc, pv] : it->second) {
      acc_[pc] -= f * pv;
      hi = std::max(hi, pc);
    }
    acc_[c] = 0;
  }
  return out;
}

bool SparseEchelon::insert(const SparseRow& row) {
  SparseRow r = reduce(row);
  if (r.empty())
    return false;
  Rational inv = 1 / r.front().second;
  for (auto& entry : r)
    entry.second *= inv;
  int pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseRow> SparseEchelon::rows_from(int first) const {
  std::vector<SparseRow> out;
  for (auto it = rows_.lower_bound(first); it != rows_.end(); ++it)
    out.push_back(it->second);
  return out;
}

} // namespace exo
