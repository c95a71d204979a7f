#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "diracsym/exact_scalar.hpp"

namespace diracsym {

/// Dense square matrix over ExactScalar, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  /// Zero matrix of the given dimension.
  explicit ExactMatrix(std::size_t dim);
  ExactMatrix(std::size_t dim, std::vector<ExactScalar> entries);
  /// Row-wise literal; throws std::invalid_argument unless square.
  ExactMatrix(std::initializer_list<std::initializer_list<ExactScalar>> rows);

  static ExactMatrix identity(std::size_t dim);
  static ExactMatrix scalar(std::size_t dim, const ExactScalar& value);

  std::size_t dim() const { return dim_; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  std::span<const ExactScalar> entries() const { return entries_; }

  ExactMatrix conj() const;
  ExactMatrix transpose() const;
  ExactMatrix adjoint() const;
  ExactScalar trace() const;
  bool is_zero() const;
  bool is_real() const;
  /// Returns c when the matrix equals c*I.
  std::optional<ExactScalar> scalar_value() const;
  /// Index of the first nonzero entry in row-major order.
  std::optional<std::size_t> first_nonzero() const;

  ExactMatrix operator-() const;
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ExactScalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  void require_same_dim(const ExactMatrix& o, const char* op) const;

  std::size_t dim_ = 0;
  std::vector<ExactScalar> entries_;
};

/// Exact product; throws std::invalid_argument on dimension mismatch.
ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
/// Kronecker product, a-index major: (a ⊗ b)(i*m+k, j*m+l) = a(i,j) b(k,l).
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);
/// Block matrix [[a, b], [c, d]] with equal-sized square blocks.
ExactMatrix block(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d);

std::size_t rank(const ExactMatrix& m);
bool is_invertible(const ExactMatrix& m);
ExactScalar determinant(const ExactMatrix& m);

/// Returns c with a == c*b, if such c exists (b must be nonzero).
std::optional<ExactScalar> proportionality(const ExactMatrix& a, const ExactMatrix& b);
/// a == c*b for some nonzero c.
bool projectively_equal(const ExactMatrix& a, const ExactMatrix& b);
/// Rescales so that the first nonzero entry (row-major) is exactly 1.
ExactMatrix normalize_phase(const ExactMatrix& m);

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

namespace pauli {
ExactMatrix identity();
ExactMatrix sigma1();
ExactMatrix sigma2();
ExactMatrix sigma3();
}  // namespace pauli

}  // namespace diracsym
