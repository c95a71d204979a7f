#include "diracsym/operator_symbol.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diracsym {

Monomial Monomial::t(int d) {
  Monomial m(d);
  m.exps_[0] = 1;
  return m;
}

Monomial Monomial::x(int d, int k) {
  if (k < 1 || k > d) throw std::out_of_range("x index out of range");
  Monomial m(d);
  m.exps_[static_cast<std::size_t>(k)] = 1;
  return m;
}

Monomial Monomial::p(int d, int k) {
  if (k < 1 || k > d) throw std::out_of_range("p index out of range");
  Monomial m(d);
  m.exps_[static_cast<std::size_t>(d + k)] = 1;
  return m;
}

int Monomial::total_x() const {
  const int d = spatial_dim();
  return std::accumulate(exps_.begin() + 1, exps_.begin() + 1 + d, 0);
}

int Monomial::total_p() const {
  const int d = spatial_dim();
  return std::accumulate(exps_.begin() + 1 + d, exps_.end(), 0);
}

int Monomial::max_exponent() const { return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end()); }

Monomial Monomial::times(const Monomial& o) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
  return out;
}

ExactMatrix OperatorSymbol::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? ExactMatrix(n_) : it->second;
}

void OperatorSymbol::add_term(const Monomial& m, const ExactMatrix& coeff) {
  if (coeff.dim() != n_) throw std::invalid_argument("coefficient dimension mismatch");
  if (m.spatial_dim() != d_) throw std::invalid_argument("monomial spatial dimension mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int OperatorSymbol::max_variable_degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.max_exponent());
  return deg;
}

void OperatorSymbol::require_compatible(const OperatorSymbol& o) const {
  if (d_ != o.d_ || n_ != o.n_) throw std::invalid_argument("incompatible operator symbols");
}

OperatorSymbol& OperatorSymbol::operator+=(const OperatorSymbol& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorSymbol& OperatorSymbol::operator-=(const OperatorSymbol& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorSymbol& OperatorSymbol::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// (-i)^j
ExactScalar minus_i_power(int j) {
  switch (j % 4) {
    case 0: return ExactScalar(1);
    case 1: return -ExactScalar::i();
    case 2: return ExactScalar(-1);
    default: return ExactScalar::i();
  }
}

}  // namespace

OperatorSymbol operator*(const OperatorSymbol& a, const OperatorSymbol& b) {
  a.require_compatible(b);
  const int d = a.d_;
  OperatorSymbol out(d, a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const ExactMatrix coeff = ca * cb;
      if (coeff.is_zero()) continue;
      // ma = t^.. x^A p^B, mb = t^.. x^C p^D. Move p^B past x^C per axis:
      // p^b x^c = sum_j C(b,j) C(c,j) j! (-i)^j x^(c-j) p^(b-j).
      std::vector<std::pair<Monomial, ExactScalar>> partial{{Monomial(d), ExactScalar(1)}};
      for (int k = 1; k <= d; ++k) {
        const int pb = ma.p_exp(k);
        const int xc = mb.x_exp(k);
        std::vector<std::pair<Monomial, ExactScalar>> next;
        for (int j = 0; j <= std::min(pb, xc); ++j) {
          const ExactScalar w =
              ExactScalar(binomial(pb, j) * binomial(xc, j) * factorial(j)) * minus_i_power(j);
          for (const auto& [m, s] : partial) {
            Monomial nm(m);
            nm.exps_[static_cast<std::size_t>(k)] += xc - j;
            nm.exps_[static_cast<std::size_t>(d + k)] += pb - j;
            next.emplace_back(std::move(nm), s * w);
          }
        }
        partial = std::move(next);
      }
      // Attach the parts that need no reordering: t, x from ma, p from mb.
      Monomial fixed(d);
      fixed.exps_[0] = ma.t_exp() + mb.t_exp();
      for (int k = 1; k <= d; ++k) {
        fixed.exps_[static_cast<std::size_t>(k)] = ma.x_exp(k);
        fixed.exps_[static_cast<std::size_t>(d + k)] = mb.p_exp(k);
      }
      for (const auto& [m, s] : partial) out.add_term(fixed.times(m), coeff * s);
    }
  }
  return out;
}

OperatorSymbol commutator(const OperatorSymbol& a, const OperatorSymbol& b) { return a * b - b * a; }

}  // namespace diracsym
