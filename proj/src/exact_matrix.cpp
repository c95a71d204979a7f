#include "diracsym/exact_matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace diracsym {

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<ExactScalar> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) +
                                " does not match dim " + std::to_string(dim_));
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<ExactScalar>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix literal is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t dim) { return scalar(dim, ExactScalar(1)); }

ExactMatrix ExactMatrix::scalar(std::size_t dim, const ExactScalar& value) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
  return m;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix out(*this);
  for (auto& z : out.entries_) z = z.conj();
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::adjoint() const { return transpose().conj(); }

ExactScalar ExactMatrix::trace() const {
  ExactScalar t;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : entries_)
    if (!z.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_real() const {
  for (const auto& z : entries_)
    if (!z.is_real()) return false;
  return true;
}

std::optional<ExactScalar> ExactMatrix::scalar_value() const {
  if (dim_ == 0) return std::nullopt;
  const ExactScalar& c = entries_[0];
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t col = 0; col < dim_; ++col) {
      const ExactScalar& z = (*this)(r, col);
      if (r == col ? !(z == c) : !z.is_zero()) return std::nullopt;
    }
  }
  return c;
}

std::optional<std::size_t> ExactMatrix::first_nonzero() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].is_zero()) return i;
  return std::nullopt;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out(*this);
  for (auto& z : out.entries_) z = -z;
  return out;
}

void ExactMatrix::require_same_dim(const ExactMatrix& o, const char* op) const {
  if (dim_ != o.dim_) {
    throw std::invalid_argument(std::string("dimension mismatch in ") + op + ": " + std::to_string(dim_) +
                                " vs " + std::to_string(o.dim_));
  }
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_dim(o, "addition");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!o.entries_[i].is_zero()) entries_[i] += o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_dim(o, "subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!o.entries_[i].is_zero()) entries_[i] -= o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
  for (auto& z : entries_)
    if (!z.is_zero()) z *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return matmul(a, b); }

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
  const std::size_t n = a.dim();
  ExactMatrix c(n);
  // Gamma-type matrices are mostly zeros; skip them on both sides.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const ExactScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const ExactScalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  ExactMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExactScalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
          if (!b(k, l).is_zero()) out(i * m + k, j * m + l) = aij * b(k, l);
    }
  }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

ExactMatrix block(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c, const ExactMatrix& d) {
  const std::size_t n = a.dim();
  if (b.dim() != n || c.dim() != n || d.dim() != n) throw std::invalid_argument("block sizes differ");
  ExactMatrix out(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      out(r, col) = a(r, col);
      out(r, col + n) = b(r, col);
      out(r + n, col) = c(r, col);
      out(r + n, col + n) = d(r, col);
    }
  }
  return out;
}

namespace {

// Row-reduces a copy; returns rank and the product of pivots (with swap sign).
std::pair<std::size_t, ExactScalar> eliminate(ExactMatrix m) {
  const std::size_t n = m.dim();
  std::size_t rank = 0;
  ExactScalar det(1);
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      det = ExactScalar(0);
      continue;
    }
    if (pivot != rank) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(rank, c));
      det = -det;
    }
    const ExactScalar inv = m(rank, col).inverse();
    det *= m(rank, col);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const ExactScalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c)
        if (!m(rank, c).is_zero()) m(r, c) -= factor * m(rank, c);
    }
    ++rank;
  }
  if (rank < n) det = ExactScalar(0);
  return {rank, det};
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return eliminate(m).first; }
bool is_invertible(const ExactMatrix& m) { return m.dim() > 0 && rank(m) == m.dim(); }
ExactScalar determinant(const ExactMatrix& m) { return eliminate(m).second; }

std::optional<ExactScalar> proportionality(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  const auto lead = b.first_nonzero();
  if (!lead) return std::nullopt;
  const ExactScalar c = a.entries()[*lead] / b.entries()[*lead];
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!(a.entries()[i] == c * b.entries()[i])) return std::nullopt;
  return c;
}

bool projectively_equal(const ExactMatrix& a, const ExactMatrix& b) {
  const auto c = proportionality(a, b);
  return c.has_value() && !c->is_zero();
}

ExactMatrix normalize_phase(const ExactMatrix& m) {
  const auto lead = m.first_nonzero();
  if (!lead) return m;
  return m * m.entries()[*lead].inverse();
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << (r == 0 ? "[[" : " [");
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? ", " : "") << m(r, c);
    os << (r + 1 == m.dim() ? "]]" : "]\n");
  }
  return os;
}

namespace pauli {

ExactMatrix identity() { return ExactMatrix::identity(2); }
ExactMatrix sigma1() { return {{0, 1}, {1, 0}}; }
ExactMatrix sigma2() {
  const ExactScalar i = ExactScalar::i();
  return {{0, -i}, {i, 0}};
}
ExactMatrix sigma3() { return {{1, 0}, {0, -1}}; }

}  // namespace pauli

}  // namespace diracsym
