#include "diracsym/linear_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diracsym {

namespace {

void canonicalize(LinearForm& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  LinearForm merged;
  merged.reserve(row.size());
  for (auto& [col, coeff] : row) {
    if (!merged.empty() && merged.back().first == col) {
      merged.back().second += coeff;
    } else {
      merged.emplace_back(col, std::move(coeff));
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
  row = std::move(merged);
}

// row <- row - factor * pivot, both sorted by column.
LinearForm axpy(const LinearForm& row, const ExactScalar& factor, const LinearForm& pivot) {
  LinearForm out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -(factor * b->second));
      ++b;
    } else {
      ExactScalar v = a->second - factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

bool RowEchelon::add_row(LinearForm row) {
  canonicalize(row);
  if (!row.empty() && row.back().first >= unknowns_) {
    throw std::out_of_range("linear form references unknown " + std::to_string(row.back().first) +
                            " of " + std::to_string(unknowns_));
  }
  while (!row.empty()) {
    const auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const ExactScalar factor = row.front().second;
    row = axpy(row, factor, it->second);
  }
  if (row.empty()) return false;
  const ExactScalar inv = row.front().second.inverse();
  for (auto& entry : row) entry.second *= inv;
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

std::vector<ExactVector> RowEchelon::nullspace() const {
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < unknowns_; ++free) {
    if (pivots_.contains(free)) continue;
    ExactVector x(unknowns_);
    x[free] = ExactScalar(1);
    // Pivot rows only reference columns to the right of their pivot, so back
    // substitution in decreasing pivot order is well founded.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      ExactScalar value;
      for (auto e = std::next(it->second.begin()); e != it->second.end(); ++e)
        if (!x[e->first].is_zero()) value -= e->second * x[e->first];
      x[it->first] = std::move(value);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<ExactVector> nullspace(std::span<const LinearForm> rows, std::size_t unknowns) {
  RowEchelon echelon(unknowns);
  for (const auto& row : rows) echelon.add_row(row);
  return echelon.nullspace();
}

std::vector<ExactVector> nullspace(const std::vector<ExactVector>& rows) {
  if (rows.empty()) return {};
  const std::size_t width = rows.front().size();
  RowEchelon echelon(width);
  for (const auto& dense : rows) {
    if (dense.size() != width) throw std::invalid_argument("inconsistent row widths");
    LinearForm row;
    for (std::size_t c = 0; c < width; ++c)
      if (!dense[c].is_zero()) row.emplace_back(c, dense[c]);
    echelon.add_row(std::move(row));
  }
  return echelon.nullspace();
}

ExactScalar evaluate(const LinearForm& row, std::span<const ExactScalar> point) {
  ExactScalar sum;
  for (const auto& [col, coeff] : row) sum += coeff * point[col];
  return sum;
}

}  // namespace diracsym
