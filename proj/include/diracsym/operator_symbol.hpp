#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "diracsym/exact_matrix.hpp"

namespace diracsym {

class OperatorSymbol;

/// Exponents over the orbital variables (t, x_1..x_d, p_1..p_d). A monomial
/// stands for t^a x_1^b1 ... x_d^bd p_1^c1 ... p_d^cd with every x written
/// to the left of every p.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int spatial_dim) : exps_(static_cast<std::size_t>(1 + 2 * spatial_dim), 0) {}

  static Monomial one(int d) { return Monomial(d); }
  static Monomial t(int d);
  static Monomial x(int d, int k);  // k = 1..d
  static Monomial p(int d, int k);  // k = 1..d

  int spatial_dim() const { return static_cast<int>((exps_.size() - 1) / 2); }
  int t_exp() const { return exps_[0]; }
  int x_exp(int k) const { return exps_[static_cast<std::size_t>(k)]; }
  int p_exp(int k) const { return exps_[static_cast<std::size_t>(spatial_dim() + k)]; }
  int total_x() const;
  int total_p() const;
  int max_exponent() const;
  const std::vector<int>& exponents() const { return exps_; }

  /// Product of commuting parts only (no reordering correction).
  Monomial times(const Monomial& o) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  friend class OperatorSymbol;
  friend OperatorSymbol operator*(const OperatorSymbol&, const OperatorSymbol&);
};

/// Normal-ordered polynomial in (t, x, p) with matrix coefficients.
///
/// Multiplication implements [x_k, p_l] = i δ_kl; matrix coefficients commute
/// with the orbital variables. Zero coefficients are never stored.
class OperatorSymbol {
 public:
  OperatorSymbol(int spatial_dim, std::size_t rep_dim) : d_(spatial_dim), n_(rep_dim) {}

  int spatial_dim() const { return d_; }
  std::size_t rep_dim() const { return n_; }
  const std::map<Monomial, ExactMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a monomial (zero matrix when absent).
  ExactMatrix coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const ExactMatrix& coeff);
  /// Largest exponent of any single variable.
  int max_variable_degree() const;

  OperatorSymbol& operator+=(const OperatorSymbol& o);
  OperatorSymbol& operator-=(const OperatorSymbol& o);
  OperatorSymbol& operator*=(const ExactScalar& s);
  friend OperatorSymbol operator+(OperatorSymbol a, const OperatorSymbol& b) { return a += b; }
  friend OperatorSymbol operator-(OperatorSymbol a, const OperatorSymbol& b) { return a -= b; }
  friend OperatorSymbol operator*(OperatorSymbol a, const ExactScalar& s) { return a *= s; }
  friend OperatorSymbol operator*(const ExactScalar& s, OperatorSymbol a) { return a *= s; }
  /// Operator product, re-normal-ordered.
  friend OperatorSymbol operator*(const OperatorSymbol& a, const OperatorSymbol& b);
  friend bool operator==(const OperatorSymbol& a, const OperatorSymbol& b) = default;

 private:
  void require_compatible(const OperatorSymbol& o) const;

  int d_;
  std::size_t n_;
  std::map<Monomial, ExactMatrix> terms_;
};

OperatorSymbol commutator(const OperatorSymbol& a, const OperatorSymbol& b);

}  // namespace diracsym
