#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "diracsym/models.hpp"

namespace diracsym {

// ---- exact part -----------------------------------------------------------

/// Exact certificate that H(p) has eigenvalues ±sqrt(omega2), each with
/// multiplicity rep_dim/2, without leaving rational arithmetic.
struct DispersionProof {
  std::vector<Rational> momentum;
  Rational omega2{0};
  bool square_is_scalar = false;  // H(p)² == omega2·I
  bool traceless = false;         // tr H(p) == 0
  std::size_t multiplicity = 0;   // of each sign

  bool holds() const { return square_is_scalar && traceless; }
};

DispersionProof dispersion_check(const DiracModel& model, const std::vector<Rational>& momentum);

/// Energy sign and SU(2)xSU(2) labels (j1, j2) of a rest-frame eigenspace.
struct RepLabel {
  int energy_sign = 1;
  Rational j1{0};
  Rational j2{0};
  int multiplicity = 0;

  std::string to_string() const;  // "D^+(1/2,0)"
  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

/// A² and B² for A_i, B_i = ½(½ε_ijk S_jk ± S_i4), S_kl = (i/2)α_lα_k.
/// Same preconditions as little_group_labels.
struct LittleGroupCasimirs {
  ExactMatrix a2;
  ExactMatrix b2;
};
LittleGroupCasimirs little_group_casimirs(const DiracModel& model);

/// Rest-frame labels for d = 4 with κ > 0. Throws std::invalid_argument
/// otherwise, or std::runtime_error if a Casimir fails to be scalar on an
/// eigenspace.
std::vector<RepLabel> little_group_labels(const DiracModel& model);

/// Fixed-mass fiber: the 3+1 Hamiltonian α·p + βm built from the first three
/// alphas of the d = 4 system.
struct FiberHamiltonian {
  Rational mass{0};
  std::vector<Rational> momentum;  // 3 components
  ExactMatrix hamiltonian;
  Rational omega2{0};
  bool square_is_scalar = false;
};

FiberHamiltonian sqrt_dirac_fiber(const Rational& mass, const std::vector<Rational>& momentum3,
                                  GammaBasis basis = GammaBasis::Dirac);

/// Weighted mass samples (m², g) discretizing a direct integral.
struct MassProfile {
  std::vector<std::pair<Rational, Rational>> samples;
  Rational support_low{0};
  Rational support_high{0};

  /// Throws std::invalid_argument when a weight is negative, a weight is
  /// nonzero outside the support, or every weight is zero.
  void validate() const;
};

/// Builds a profile from [m², g] pairs; the support is the hull of the
/// positive-weight samples.
MassProfile make_profile(std::vector<std::pair<Rational, Rational>> samples);

/// Spinor on one mass fiber. make_fiber enforces a unit norm exactly.
struct FiberState {
  std::vector<Rational> momentum;
  Rational mass2{0};
  std::vector<ExactScalar> components;
};

FiberState make_fiber(std::vector<Rational> momentum, Rational mass2, std::vector<ExactScalar> components);

struct ProfileAction {
  /// P² applied fiberwise: components times m² inside the support, untouched outside.
  std::vector<std::vector<ExactScalar>> fibers;
  /// Σ g m² ψ over the samples (components summed entrywise).
  std::vector<ExactScalar> integrated;
  /// Σ m² g / Σ g.
  Rational expectation{0};
};

/// Throws std::invalid_argument if state and sample counts differ.
ProfileAction profile_apply_P2(const MassProfile& profile, const std::vector<FiberState>& states);

// ---- floating-point part --------------------------------------------------

using ComplexMatrix = Eigen::MatrixXcd;

struct DensityState {
  std::vector<double> momentum;
  ComplexMatrix rho;
};

inline constexpr double kDensityTolerance = 1e-12;

/// Throws std::invalid_argument if ρ is not Hermitian or trace one within
/// kDensityTolerance.
void validate_density(const ComplexMatrix& rho);

ComplexMatrix to_complex(const ExactMatrix& m);
ComplexMatrix hamiltonian_at(const DiracModel& model, const std::vector<double>& momentum);

/// Solves i dρ/dt = [H(p), ρ] by conjugating with exp(-iH t/steps), `steps`
/// times. The exponential uses H² = ω² I: exp(-iHs) = cos(ωs) I - i sin(ωs) H/ω.
DensityState density_evolve(const DiracModel& model, const DensityState& initial, double t, int steps = 1);

}  // namespace diracsym
