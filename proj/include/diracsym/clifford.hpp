#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diracsym/exact_matrix.hpp"

namespace diracsym {

/// How the gamma matrices for d > 2 are generated from the 2x2 base system.
enum class GammaBasis {
  /// (γ_μ ⊗ σ2, i·1⊗σ3, i·1⊗σ1). The factor i makes the new spatial
  /// gammas square to -1.
  Recursive,
  /// α_k -> σ1 ⊗ α_k, then σ1 ⊗ β and σ2 ⊗ 1 as the two new alphas,
  /// β -> σ3 ⊗ 1. Gives the standard Dirac-Pauli matrices at d = 4, with
  /// odd alphas real, even alphas imaginary and β real for every d.
  Dirac,
};

std::string to_string(GammaBasis basis);
/// Accepts "recursive" or "dirac"; throws std::invalid_argument otherwise.
GammaBasis parse_gamma_basis(const std::string& name);

/// Gamma matrices γ_0..γ_d for P(1,d), metric diag(+1,-1,...,-1).
struct GammaSystem {
  int spatial_dim = 0;
  std::size_t rep_dim = 0;
  GammaBasis basis = GammaBasis::Recursive;
  std::vector<ExactMatrix> gammas;

  int metric(int mu) const { return mu == 0 ? 1 : -1; }
  const ExactMatrix& gamma(int mu) const { return gammas.at(static_cast<std::size_t>(mu)); }
  /// α_k = γ_0 γ_k for k = 1..d (index 0 of the result is α_1).
  std::vector<ExactMatrix> alphas() const;
  /// β = γ_0.
  const ExactMatrix& beta() const { return gammas.front(); }
};

/// d = 2: γ_0 = σ3, γ_1 = σ3σ1, γ_2 = σ3σ2, so α_1 = σ1, α_2 = σ2, β = σ3.
GammaSystem base_system();
/// Adds two spatial gammas and doubles rep_dim, following gs.basis.
GammaSystem extend(const GammaSystem& gs);
/// base_system() followed by (d-2)/2 extensions. Throws std::invalid_argument
/// for odd or nonpositive d.
GammaSystem system_for(int d, GammaBasis basis = GammaBasis::Recursive);

struct RelationCheck {
  int mu = 0;
  int nu = 0;
  bool holds = false;
};

/// {γ_μ, γ_ν} == 2 g_μν I for every pair μ <= ν.
std::vector<RelationCheck> check_relations(const GammaSystem& gs);
bool relations_hold(const GammaSystem& gs);
/// γ_0 Hermitian and γ_k anti-Hermitian.
bool hermiticity_holds(const GammaSystem& gs);

struct CliffordMonomial {
  std::vector<int> indices;  // strictly increasing
  ExactMatrix matrix;        // ordered product of the gammas
};

/// Ordered product of gammas; the empty product is the identity.
ExactMatrix clifford_product(const GammaSystem& gs, const std::vector<int>& indices);

/// All monomials with at most max_degree factors, ordered by degree and then
/// lexicographically. Throws std::invalid_argument if max_degree > d + 1.
std::vector<CliffordMonomial> monomial_basis(const GammaSystem& gs, int max_degree);

}  // namespace diracsym
