#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "diracsym/exact_scalar.hpp"

namespace diracsym {

/// Sparse linear form: (unknown index, coefficient) pairs. Order and duplicates
/// are normalized on entry.
using LinearForm = std::vector<std::pair<std::size_t, ExactScalar>>;
using ExactVector = std::vector<ExactScalar>;

/// Incremental exact row echelon form with leftmost-nonzero pivoting.
///
/// Rows are reduced as they arrive against the stored pivot rows, each of
/// which is kept monic (leading coefficient 1). The unknown ordering is fixed,
/// so the nullspace basis depends only on the row sequence.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t unknowns) : unknowns_(unknowns) {}

  /// Returns true when the row was independent of the rows seen so far.
  /// Throws std::out_of_range if it references an unknown >= unknowns().
  bool add_row(LinearForm row);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t column) const { return pivots_.contains(column); }

  /// One basis vector per free column, in increasing column order; the free
  /// column carries 1 and the other free columns carry 0.
  std::vector<ExactVector> nullspace() const;

 private:
  std::size_t unknowns_;
  std::map<std::size_t, LinearForm> pivots_;
};

std::vector<ExactVector> nullspace(std::span<const LinearForm> rows, std::size_t unknowns);
/// Dense overload; all rows must have the same width.
std::vector<ExactVector> nullspace(const std::vector<ExactVector>& rows);

/// Evaluates a linear form at a point.
ExactScalar evaluate(const LinearForm& row, std::span<const ExactScalar> point);

}  // namespace diracsym
