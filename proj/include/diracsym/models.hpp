#pragma once

#include <string>
#include <vector>

#include "diracsym/clifford.hpp"
#include "diracsym/operator_symbol.hpp"

namespace diracsym {

/// Sign convention for the lower block of the doubled β.
enum class DoubledBeta {
  Opposite,  // β̃ = diag(β, -β)
  Same,      // β̃ = diag(β, β); kept for comparison, it breaks the doubled symmetries
};

/// Hamiltonian H = α_k p_k + branch·κ·β built on a gamma system.
struct DiracModel {
  GammaSystem gamma;
  Rational mass{0};
  int branch = 1;
  bool doubled = false;
  DoubledBeta doubled_beta = DoubledBeta::Opposite;
  std::vector<ExactMatrix> alphas;
  ExactMatrix beta;

  int spatial_dim() const { return gamma.spatial_dim; }
  std::size_t rep_dim() const { return beta.dim(); }
  /// α_k for k = 1..d.
  const ExactMatrix& alpha(int k) const { return alphas.at(static_cast<std::size_t>(k - 1)); }
  /// The matrix multiplying κ in the Hamiltonian (branch·β).
  ExactMatrix mass_matrix() const { return ExactScalar(branch) * beta; }
};

/// Throws std::invalid_argument for a negative mass or a branch outside {+1,-1}.
DiracModel make_model(const GammaSystem& gs, const Rational& mass, int branch = 1);

/// Block model with α̃ = diag(α, α) and β̃ = diag(branch·β, ∓branch·β). The
/// result has branch +1. Throws std::logic_error on an already doubled model.
DiracModel doubled(const DiracModel& model, DoubledBeta beta_sign = DoubledBeta::Opposite);

/// α_kα_l + α_lα_k == 2δ_kl, α_kβ + βα_k == 0, β² == 1.
bool model_relations_hold(const DiracModel& model);

enum class GeneratorKind { P0, Pk, Jkl, J0k };

struct GeneratorId {
  GeneratorKind kind = GeneratorKind::P0;
  int k = 0;
  int l = 0;

  static GeneratorId p0() { return {GeneratorKind::P0, 0, 0}; }
  static GeneratorId pk(int k) { return {GeneratorKind::Pk, k, 0}; }
  static GeneratorId jkl(int k, int l) { return {GeneratorKind::Jkl, k, l}; }
  static GeneratorId j0k(int k) { return {GeneratorKind::J0k, k, 0}; }
  std::string label() const;
};

OperatorSymbol hamiltonian(const DiracModel& model);

/// P0 = H, P_k = p_k, J_kl = x_k p_l - x_l p_k + (i/2) α_l α_k,
/// J_0k = t p_k - x_k H + (i/2) α_k (normal-ordered form of
/// t p_k - (x_k H + H x_k)/2). Throws std::out_of_range on bad indices.
OperatorSymbol generator(const DiracModel& model, GeneratorId which);

/// Every generator of the algebra: P0, P_k, J_kl (k < l), J_0k.
std::vector<GeneratorId> all_generators(int spatial_dim);

/// H·H as a normal-ordered symbol.
OperatorSymbol square_of_hamiltonian(const DiracModel& model);

/// Numeric Hamiltonian at fixed momentum, H(p) = Σ p_k α_k + branch κ β.
ExactMatrix hamiltonian_at(const DiracModel& model, const std::vector<Rational>& momentum);

}  // namespace diracsym
