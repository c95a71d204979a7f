#include "diracsym/spectra.hpp"

#include "diracsym/linear_system.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace diracsym {

DispersionProof dispersion_check(const DiracModel& model, const std::vector<Rational>& momentum) {
  DispersionProof proof;
  proof.momentum = momentum;
  const ExactMatrix h = hamiltonian_at(model, momentum);
  proof.omega2 = model.mass * model.mass;
  for (const auto& p : momentum) proof.omega2 += p * p;
  proof.square_is_scalar = h * h == ExactMatrix::scalar(model.rep_dim(), ExactScalar(proof.omega2));
  proof.traceless = h.trace().is_zero();
  // H² = ω² I leaves ±ω as the only eigenvalues; tr H = 0 makes them equally frequent.
  if (proof.holds()) proof.multiplicity = model.rep_dim() / 2;
  return proof;
}

std::string RepLabel::to_string() const {
  std::ostringstream os;
  os << "D^" << (energy_sign > 0 ? '+' : '-') << '(' << diracsym::to_string(j1) << ',' << diracsym::to_string(j2)
     << ')';
  if (multiplicity != 1) os << " x" << multiplicity;
  return os.str();
}

namespace {

// Dimension of the common kernel of the given matrices.
std::size_t joint_nullity(const std::vector<ExactMatrix>& ms, std::size_t n) {
  RowEchelon ech(n);
  for (const auto& m : ms) {
    for (std::size_t r = 0; r < n; ++r) {
      LinearForm row;
      for (std::size_t c = 0; c < n; ++c)
        if (!m(r, c).is_zero()) row.emplace_back(c, m(r, c));
      if (!row.empty()) ech.add_row(std::move(row));
    }
  }
  return n - ech.rank();
}

}  // namespace

LittleGroupCasimirs little_group_casimirs(const DiracModel& model) {
  if (model.spatial_dim() != 4) throw std::invalid_argument("little-group labels are implemented for d = 4 only");
  if (sgn(model.mass) <= 0) throw std::invalid_argument("little-group labels need a positive mass");
  const std::size_t n = model.rep_dim();
  const ExactScalar half_i(Rational(0), make_rational(1, 2));
  const auto spin = [&](int k, int l) { return half_i * (model.alpha(l) * model.alpha(k)); };

  // ½ε_ijk S_jk = S_jk for cyclic (i, j, k).
  const int cyclic[3][2] = {{2, 3}, {3, 1}, {1, 2}};
  const ExactScalar half(make_rational(1, 2));
  LittleGroupCasimirs c{ExactMatrix(n), ExactMatrix(n)};
  for (int i = 1; i <= 3; ++i) {
    const ExactMatrix rot = spin(cyclic[i - 1][0], cyclic[i - 1][1]);
    const ExactMatrix boost = spin(i, 4);
    const ExactMatrix a = half * (rot + boost);
    const ExactMatrix b = half * (rot - boost);
    c.a2 += a * a;
    c.b2 += b * b;
  }
  return c;
}

std::vector<RepLabel> little_group_labels(const DiracModel& model) {
  const auto [a2, b2] = little_group_casimirs(model);
  const std::size_t n = model.rep_dim();
  const ExactScalar half(make_rational(1, 2));

  // H(0) = κ·mass_matrix, so the energy sign is the eigenvalue of mass_matrix.
  const ExactMatrix m = model.mass_matrix();
  const ExactMatrix one = ExactMatrix::identity(n);
  std::vector<RepLabel> labels;
  for (int sign : {1, -1}) {
    const ExactMatrix off_branch = half * (one - ExactScalar(sign) * m);  // kills the wanted branch
    const std::size_t branch_dim = joint_nullity({off_branch}, n);
    std::size_t found = 0;
    for (long twice1 = 0; twice1 <= static_cast<long>(n); ++twice1) {
      for (long twice2 = 0; twice2 <= static_cast<long>(n); ++twice2) {
        const Rational j1 = make_rational(twice1, 2), j2 = make_rational(twice2, 2);
        const std::size_t k = joint_nullity({off_branch, a2 - ExactMatrix::scalar(n, ExactScalar(j1 * (j1 + 1))),
                                             b2 - ExactMatrix::scalar(n, ExactScalar(j2 * (j2 + 1)))},
                                            n);
        if (k == 0) continue;
        const std::size_t block = static_cast<std::size_t>((twice1 + 1) * (twice2 + 1));
        if (k % block != 0) throw std::runtime_error("joint eigenspace is not a multiple of the block size");
        labels.push_back({sign, j1, j2, static_cast<int>(k / block)});
        found += k;
      }
    }
    if (found != branch_dim) throw std::runtime_error("Casimirs are not diagonalizable on an energy eigenspace");
  }
  return labels;
}

FiberHamiltonian sqrt_dirac_fiber(const Rational& mass, const std::vector<Rational>& momentum3, GammaBasis basis) {
  if (sgn(mass) <= 0) throw std::invalid_argument("fiber mass must be positive");
  if (momentum3.size() != 3) throw std::invalid_argument("fiber momentum must have three components");
  const GammaSystem gs = system_for(4, basis);
  const auto alphas = gs.alphas();
  FiberHamiltonian f;
  f.mass = mass;
  f.momentum = momentum3;
  f.hamiltonian = ExactScalar(mass) * gs.beta();
  f.omega2 = mass * mass;
  for (std::size_t k = 0; k < 3; ++k) {
    f.hamiltonian += ExactScalar(momentum3[k]) * alphas[k];
    f.omega2 += momentum3[k] * momentum3[k];
  }
  f.square_is_scalar = f.hamiltonian * f.hamiltonian == ExactMatrix::scalar(gs.rep_dim, ExactScalar(f.omega2));
  return f;
}

void MassProfile::validate() const {
  bool any_positive = false;
  for (const auto& [m2, g] : samples) {
    if (sgn(g) < 0) throw std::invalid_argument("negative profile weight");
    if (sgn(m2) <= 0) throw std::invalid_argument("profile masses squared must be positive");
    if (sgn(g) > 0) {
      any_positive = true;
      if (m2 < support_low || m2 > support_high) throw std::invalid_argument("nonzero weight outside the support");
    }
  }
  if (!any_positive) throw std::invalid_argument("profile has no positive weight");
}

MassProfile make_profile(std::vector<std::pair<Rational, Rational>> samples) {
  MassProfile p;
  bool first = true;
  for (const auto& [m2, g] : samples) {
    if (sgn(g) <= 0) continue;
    if (first || m2 < p.support_low) p.support_low = m2;
    if (first || m2 > p.support_high) p.support_high = m2;
    first = false;
  }
  p.samples = std::move(samples);
  p.validate();
  return p;
}

FiberState make_fiber(std::vector<Rational> momentum, Rational mass2, std::vector<ExactScalar> components) {
  Rational norm2{0};
  for (const auto& z : components) norm2 += z.norm2();
  if (norm2 != 1) throw std::invalid_argument("fiber spinor must have unit norm");
  return {std::move(momentum), std::move(mass2), std::move(components)};
}

ProfileAction profile_apply_P2(const MassProfile& profile, const std::vector<FiberState>& states) {
  profile.validate();
  if (states.size() != profile.samples.size()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.samples.size()) + " samples but " +
                                std::to_string(states.size()) + " fiber states were given");
  }
  ProfileAction out;
  Rational weighted{0}, total{0};
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto& [m2, g] = profile.samples[s];
    const auto& state = states[s];
    if (out.integrated.empty()) out.integrated.resize(state.components.size());
    if (state.components.size() != out.integrated.size()) throw std::invalid_argument("fiber spinor sizes differ");
    const bool inside = m2 >= profile.support_low && m2 <= profile.support_high;
    std::vector<ExactScalar> fiber = state.components;
    if (inside)
      for (auto& z : fiber) z *= ExactScalar(m2);
    for (std::size_t i = 0; i < fiber.size(); ++i) out.integrated[i] += ExactScalar(g) * fiber[i];
    out.fibers.push_back(std::move(fiber));
    weighted += m2 * g;
    total += g;
  }
  out.expectation = weighted / total;
  return out;
}

void validate_density(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  if (std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) > kDensityTolerance) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
}

ComplexMatrix to_complex(const ExactMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  ComplexMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const ExactScalar& z = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      out(r, c) = {z.re().get_d(), z.im().get_d()};
    }
  }
  return out;
}

ComplexMatrix hamiltonian_at(const DiracModel& model, const std::vector<double>& momentum) {
  if (static_cast<int>(momentum.size()) != model.spatial_dim()) {
    throw std::invalid_argument("momentum dimension does not match the model");
  }
  ComplexMatrix h = model.mass.get_d() * to_complex(model.mass_matrix());
  for (int k = 1; k <= model.spatial_dim(); ++k) h += momentum[static_cast<std::size_t>(k - 1)] * to_complex(model.alpha(k));
  return h;
}

DensityState density_evolve(const DiracModel& model, const DensityState& initial, double t, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be positive");
  validate_density(initial.rho);
  const ComplexMatrix h = hamiltonian_at(model, initial.momentum);
  if (h.rows() != initial.rho.rows()) throw std::invalid_argument("density matrix dimension does not match the model");

  double omega2 = model.mass.get_d() * model.mass.get_d();
  for (double p : initial.momentum) omega2 += p * p;
  const double omega = std::sqrt(omega2);
  const double dt = t / steps;
  const auto n = h.rows();
  const ComplexMatrix one = ComplexMatrix::Identity(n, n);
  ComplexMatrix u;
  if (omega == 0.0) {
    u = one;
  } else {
    const std::complex<double> i(0.0, 1.0);
    u = std::cos(omega * dt) * one - i * (std::sin(omega * dt) / omega) * h;
  }
  DensityState out = initial;
  for (int s = 0; s < steps; ++s) out.rho = u * out.rho * u.adjoint();
  return out;
}

}  // namespace diracsym
