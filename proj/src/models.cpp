#include "diracsym/models.hpp"

#include <stdexcept>

namespace diracsym {

DiracModel make_model(const GammaSystem& gs, const Rational& mass, int branch) {
  if (sgn(mass) < 0) throw std::invalid_argument("mass must be nonnegative");
  if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
  DiracModel m;
  m.gamma = gs;
  m.mass = mass;
  m.branch = branch;
  m.alphas = gs.alphas();
  m.beta = gs.beta();
  return m;
}

DiracModel doubled(const DiracModel& model, DoubledBeta beta_sign) {
  if (model.doubled) throw std::logic_error("model is already doubled");
  DiracModel out = model;
  out.doubled = true;
  out.doubled_beta = beta_sign;
  const ExactMatrix zero(model.rep_dim());
  for (auto& a : out.alphas) a = block(a, zero, zero, a);
  const ExactMatrix upper = model.mass_matrix();
  const ExactMatrix lower = beta_sign == DoubledBeta::Opposite ? -upper : upper;
  out.beta = block(upper, zero, zero, lower);
  out.branch = 1;
  return out;
}

bool model_relations_hold(const DiracModel& model) {
  const std::size_t n = model.rep_dim();
  const ExactMatrix zero(n);
  for (std::size_t k = 0; k < model.alphas.size(); ++k) {
    for (std::size_t l = k; l < model.alphas.size(); ++l) {
      const ExactMatrix expected = k == l ? ExactMatrix::scalar(n, 2) : zero;
      if (!(anticommutator(model.alphas[k], model.alphas[l]) == expected)) return false;
    }
    if (!(anticommutator(model.alphas[k], model.beta) == zero)) return false;
  }
  return model.beta * model.beta == ExactMatrix::identity(n);
}

std::string GeneratorId::label() const {
  switch (kind) {
    case GeneratorKind::P0: return "P0";
    case GeneratorKind::Pk: return "P" + std::to_string(k);
    case GeneratorKind::Jkl: return "J" + std::to_string(k) + std::to_string(l);
    case GeneratorKind::J0k: return "J0" + std::to_string(k);
  }
  return "?";
}

OperatorSymbol hamiltonian(const DiracModel& model) {
  const int d = model.spatial_dim();
  OperatorSymbol h(d, model.rep_dim());
  for (int k = 1; k <= d; ++k) h.add_term(Monomial::p(d, k), model.alpha(k));
  h.add_term(Monomial::one(d), ExactScalar(model.mass) * model.mass_matrix());
  return h;
}

OperatorSymbol generator(const DiracModel& model, GeneratorId which) {
  const int d = model.spatial_dim();
  const std::size_t n = model.rep_dim();
  const ExactMatrix one = ExactMatrix::identity(n);
  const auto check = [d](int k) {
    if (k < 1 || k > d) throw std::out_of_range("generator index " + std::to_string(k) + " out of range");
  };
  const ExactScalar half_i(Rational(0), make_rational(1, 2));

  switch (which.kind) {
    case GeneratorKind::P0:
      return hamiltonian(model);
    case GeneratorKind::Pk: {
      check(which.k);
      OperatorSymbol s(d, n);
      s.add_term(Monomial::p(d, which.k), one);
      return s;
    }
    case GeneratorKind::Jkl: {
      check(which.k);
      check(which.l);
      if (which.k == which.l) throw std::out_of_range("J_kl needs k != l");
      OperatorSymbol s(d, n);
      s.add_term(Monomial::x(d, which.k).times(Monomial::p(d, which.l)), one);
      s.add_term(Monomial::x(d, which.l).times(Monomial::p(d, which.k)), -one);
      s.add_term(Monomial::one(d), half_i * (model.alpha(which.l) * model.alpha(which.k)));
      return s;
    }
    case GeneratorKind::J0k: {
      check(which.k);
      OperatorSymbol xk(d, n);
      xk.add_term(Monomial::x(d, which.k), one);
      OperatorSymbol s(d, n);
      s.add_term(Monomial::t(d).times(Monomial::p(d, which.k)), one);
      s -= xk * hamiltonian(model);
      s.add_term(Monomial::one(d), half_i * model.alpha(which.k));
      return s;
    }
  }
  throw std::logic_error("unknown generator kind");
}

std::vector<GeneratorId> all_generators(int d) {
  std::vector<GeneratorId> out{GeneratorId::p0()};
  for (int k = 1; k <= d; ++k) out.push_back(GeneratorId::pk(k));
  for (int k = 1; k <= d; ++k)
    for (int l = k + 1; l <= d; ++l) out.push_back(GeneratorId::jkl(k, l));
  for (int k = 1; k <= d; ++k) out.push_back(GeneratorId::j0k(k));
  return out;
}

OperatorSymbol square_of_hamiltonian(const DiracModel& model) {
  const OperatorSymbol h = hamiltonian(model);
  return h * h;
}

ExactMatrix hamiltonian_at(const DiracModel& model, const std::vector<Rational>& momentum) {
  if (static_cast<int>(momentum.size()) != model.spatial_dim()) {
    throw std::invalid_argument("momentum has " + std::to_string(momentum.size()) + " components, expected " +
                                std::to_string(model.spatial_dim()));
  }
  ExactMatrix h = ExactScalar(model.mass) * model.mass_matrix();
  for (int k = 1; k <= model.spatial_dim(); ++k) {
    if (sgn(momentum[static_cast<std::size_t>(k - 1)]) == 0) continue;
    h += ExactScalar(momentum[static_cast<std::size_t>(k - 1)]) * model.alpha(k);
  }
  return h;
}

}  // namespace diracsym
