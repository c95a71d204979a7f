#include "diracsym/clifford.hpp"

#include <stdexcept>

namespace diracsym {

std::string to_string(GammaBasis basis) {
  return basis == GammaBasis::Recursive ? "recursive" : "dirac";
}

GammaBasis parse_gamma_basis(const std::string& name) {
  if (name == "recursive") return GammaBasis::Recursive;
  if (name == "dirac") return GammaBasis::Dirac;
  throw std::invalid_argument("unknown gamma basis '" + name + "' (expected recursive or dirac)");
}

std::vector<ExactMatrix> GammaSystem::alphas() const {
  std::vector<ExactMatrix> out;
  out.reserve(gammas.size() - 1);
  for (std::size_t k = 1; k < gammas.size(); ++k) out.push_back(gammas[0] * gammas[k]);
  return out;
}

GammaSystem base_system() {
  const ExactMatrix s3 = pauli::sigma3();
  return GammaSystem{2, 2, GammaBasis::Recursive, {s3, s3 * pauli::sigma1(), s3 * pauli::sigma2()}};
}

namespace {

GammaSystem extend_recursive(const GammaSystem& gs) {
  const ExactMatrix one = ExactMatrix::identity(gs.rep_dim);
  const ExactScalar i = ExactScalar::i();
  GammaSystem out{gs.spatial_dim + 2, gs.rep_dim * 2, gs.basis, {}};
  for (const auto& g : gs.gammas) out.gammas.push_back(kron(g, pauli::sigma2()));
  out.gammas.push_back(i * kron(one, pauli::sigma3()));
  out.gammas.push_back(i * kron(one, pauli::sigma1()));
  return out;
}

GammaSystem extend_dirac(const GammaSystem& gs) {
  const ExactMatrix one = ExactMatrix::identity(gs.rep_dim);
  std::vector<ExactMatrix> alphas;
  for (const auto& a : gs.alphas()) alphas.push_back(kron(pauli::sigma1(), a));
  alphas.push_back(kron(pauli::sigma1(), gs.beta()));
  alphas.push_back(kron(pauli::sigma2(), one));
  const ExactMatrix beta = kron(pauli::sigma3(), one);

  GammaSystem out{gs.spatial_dim + 2, gs.rep_dim * 2, gs.basis, {beta}};
  // γ_k = β α_k since β² = 1.
  for (const auto& a : alphas) out.gammas.push_back(beta * a);
  return out;
}

}  // namespace

GammaSystem extend(const GammaSystem& gs) {
  return gs.basis == GammaBasis::Recursive ? extend_recursive(gs) : extend_dirac(gs);
}

GammaSystem system_for(int d, GammaBasis basis) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument("spatial dimension must be even and >= 2, got " + std::to_string(d));
  }
  GammaSystem gs = base_system();
  gs.basis = basis;
  while (gs.spatial_dim < d) gs = extend(gs);
  return gs;
}

std::vector<RelationCheck> check_relations(const GammaSystem& gs) {
  std::vector<RelationCheck> out;
  const int count = static_cast<int>(gs.gammas.size());
  for (int mu = 0; mu < count; ++mu) {
    for (int nu = mu; nu < count; ++nu) {
      const ExactMatrix lhs = anticommutator(gs.gamma(mu), gs.gamma(nu));
      const ExactScalar expected = mu == nu ? ExactScalar(2L * gs.metric(mu)) : ExactScalar(0);
      out.push_back({mu, nu, lhs == ExactMatrix::scalar(gs.rep_dim, expected)});
    }
  }
  return out;
}

bool relations_hold(const GammaSystem& gs) {
  for (const auto& r : check_relations(gs))
    if (!r.holds) return false;
  return true;
}

bool hermiticity_holds(const GammaSystem& gs) {
  if (!(gs.gammas[0].adjoint() == gs.gammas[0])) return false;
  for (std::size_t k = 1; k < gs.gammas.size(); ++k)
    if (!(gs.gammas[k].adjoint() == -gs.gammas[k])) return false;
  return true;
}

ExactMatrix clifford_product(const GammaSystem& gs, const std::vector<int>& indices) {
  ExactMatrix m = ExactMatrix::identity(gs.rep_dim);
  for (int idx : indices) m = m * gs.gamma(idx);
  return m;
}

namespace {

void subsets_of_size(int n, int k, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < n; ++i) {
    current.push_back(i);
    subsets_of_size(n, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<CliffordMonomial> monomial_basis(const GammaSystem& gs, int max_degree) {
  const int generators = static_cast<int>(gs.gammas.size());
  if (max_degree < 0 || max_degree > generators) {
    throw std::invalid_argument("max_degree must lie in [0, d+1]");
  }
  std::vector<std::vector<int>> subsets;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<int> current;
    subsets_of_size(generators, k, 0, current, subsets);
  }
  std::vector<CliffordMonomial> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) {
    ExactMatrix m = clifford_product(gs, s);
    out.push_back({std::move(s), std::move(m)});
  }
  return out;
}

}  // namespace diracsym
