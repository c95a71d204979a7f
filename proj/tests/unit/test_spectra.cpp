#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "diracsym/claims.hpp"
#include "diracsym/spectra.hpp"
#include "generators.hpp"

namespace diracsym {
namespace {

DiracModel model4(Variant v, long mass = 1) { return build_model(4, v, Rational(mass), GammaBasis::Dirac); }

TEST(Dispersion, Examples) {
  const DiracModel m = model4(Variant::Single, 3);
  const auto proof = dispersion_check(m, {0, 0, 0, 4});
  EXPECT_TRUE(proof.holds());
  EXPECT_EQ(proof.omega2, 25);
  EXPECT_EQ(proof.multiplicity, 2u);
  const auto rest = dispersion_check(m, {0, 0, 0, 0});
  EXPECT_EQ(rest.omega2, 9);
  EXPECT_EQ(hamiltonian_at(m, std::vector<Rational>{0, 0, 0, 0}), ExactScalar(3) * m.beta);
  const auto massless = dispersion_check(build_model(2, Variant::Massless, 0, GammaBasis::Dirac), {3, 4});
  EXPECT_TRUE(massless.holds());
  EXPECT_EQ(massless.omega2, 25);
}

TEST(Dispersion, RandomMomenta) {
  std::mt19937_64 rng(3);
  for (int d : {2, 4, 6}) {
    for (auto v : {Variant::Single, Variant::SingleMinus, Variant::Doubled, Variant::Massless}) {
      const DiracModel m = build_model(d, v, make_rational(5, 2), GammaBasis::Dirac);
      for (int i = 0; i < 10; ++i) EXPECT_TRUE(dispersion_check(m, testing::random_momentum(rng, d)).holds());
    }
  }
}

TEST(Labels, PublishedContent) {
  for (auto v : {Variant::Single, Variant::SingleMinus, Variant::Doubled}) {
    for (auto basis : {GammaBasis::Dirac, GammaBasis::Recursive}) {
      const DiracModel m = build_model(4, v, Rational(2), basis);
      const auto labels = claims::sorted_labels(little_group_labels(m));
      EXPECT_EQ(labels, claims::expected_labels(v)) << to_string(v);
      Rational total = 0;
      for (const auto& l : labels) total += l.multiplicity * (2 * l.j1 + 1) * (2 * l.j2 + 1);
      EXPECT_EQ(total, static_cast<long>(m.rep_dim()));
    }
  }
}

TEST(Labels, CasimirsCommute) {
  for (auto v : {Variant::Single, Variant::SingleMinus, Variant::Doubled}) {
    const DiracModel m = model4(v);
    const auto [a2, b2] = little_group_casimirs(m);
    const ExactMatrix h0 = hamiltonian_at(m, std::vector<Rational>(4, Rational(0)));
    EXPECT_TRUE(commutator(a2, h0).is_zero());
    EXPECT_TRUE(commutator(b2, h0).is_zero());
    EXPECT_TRUE(commutator(a2, b2).is_zero());
  }
}

TEST(Labels, Rejections) {
  EXPECT_THROW(little_group_labels(model4(Variant::Massless, 0)), std::invalid_argument);
  EXPECT_THROW(little_group_labels(build_model(2, Variant::Single, 1, GammaBasis::Dirac)), std::invalid_argument);
  EXPECT_EQ((RepLabel{1, make_rational(1, 2), 0, 1}).to_string(), "D^+(1/2,0)");
}

TEST(Fiber, SqrtDirac) {
  const auto f = sqrt_dirac_fiber(5, {0, 0, 12});
  EXPECT_TRUE(f.square_is_scalar);
  EXPECT_EQ(f.omega2, 169);
  const auto rest = sqrt_dirac_fiber(7, {0, 0, 0});
  EXPECT_EQ(rest.hamiltonian * rest.hamiltonian, ExactMatrix::scalar(4, 49));
  EXPECT_THROW(sqrt_dirac_fiber(0, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(sqrt_dirac_fiber(1, {0, 0}), std::invalid_argument);
}

std::vector<ExactScalar> unit_spinor() { return {make_rational(3, 5), 0, ExactScalar(0, make_rational(4, 5)), 0}; }

TEST(Profile, DeltaAndAverage) {
  const auto delta = make_profile({{9, 1}});
  const auto out = profile_apply_P2(delta, {make_fiber({0, 0, 1}, 9, unit_spinor())});
  EXPECT_EQ(out.expectation, 9);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(out.fibers[0][i], ExactScalar(9) * unit_spinor()[i]);

  const auto two = make_profile({{1, 1}, {4, 1}});
  const auto o2 = profile_apply_P2(two, {make_fiber({0, 0, 0}, 1, unit_spinor()), make_fiber({0, 0, 0}, 4, unit_spinor())});
  EXPECT_EQ(o2.expectation, make_rational(5, 2));
}

TEST(Profile, OutsideSupportUntouched) {
  auto p = make_profile({{2, 1}, {3, 1}, {10, 0}});
  EXPECT_EQ(p.support_low, 2);
  EXPECT_EQ(p.support_high, 3);
  std::vector<FiberState> states;
  for (long m2 : {2L, 3L, 10L}) states.push_back(make_fiber({0, 0, 0}, m2, unit_spinor()));
  const auto out = profile_apply_P2(p, states);
  EXPECT_EQ(out.fibers[2], unit_spinor());
}

TEST(Profile, Validation) {
  EXPECT_THROW(make_profile({{1, -1}}), std::invalid_argument);
  EXPECT_THROW(make_profile({{1, 0}}), std::invalid_argument);
  EXPECT_THROW(make_fiber({0, 0, 0}, 1, {1, 1, 0, 0}), std::invalid_argument);
  MassProfile bad{{{1, 1}, {5, 1}}, 1, 2};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(profile_apply_P2(make_profile({{1, 1}}), {}), std::invalid_argument);
}

TEST(Profile, LinearInWeights) {
  std::vector<FiberState> states;
  for (long m2 : {1L, 2L, 5L}) states.push_back(make_fiber({0, 0, 0}, m2, unit_spinor()));
  const auto a = profile_apply_P2(make_profile({{1, 1}, {2, 3}, {5, 2}}), states);
  const auto b = profile_apply_P2(make_profile({{1, 2}, {2, 1}, {5, 1}}), states);
  const auto ab = profile_apply_P2(make_profile({{1, 3}, {2, 4}, {5, 3}}), states);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(ab.integrated[i], a.integrated[i] + b.integrated[i]);
}

ComplexMatrix pure_state(const std::vector<std::complex<double>>& v) {
  Eigen::VectorXcd x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Eigen::Index>(i)) = v[i];
  x.normalize();
  return x * x.adjoint();
}

TEST(Density, StationaryProjector) {
  const DiracModel m = model4(Variant::Single, 2);
  const std::vector<double> p{0.3, -1.2, 0.5, 2.0};
  const ComplexMatrix h = hamiltonian_at(m, p);
  double w2 = 4;
  for (double q : p) w2 += q * q;
  const ComplexMatrix proj = 0.5 * (ComplexMatrix::Identity(4, 4) + h / std::sqrt(w2));
  const DensityState rho0{p, proj / proj.trace().real()};
  for (double t : {0.5, 3.0, 10.0}) {
    const auto out = density_evolve(m, rho0, t, 7);
    EXPECT_LT((out.rho - rho0.rho).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Density, PeriodAtRest) {
  const DiracModel m = model4(Variant::Single, 1);
  const DensityState rho0{{0, 0, 0, 0}, pure_state({1, 0, {0, 1}, 0})};
  const auto half = density_evolve(m, rho0, std::numbers::pi / 2);
  EXPECT_GT((half.rho - rho0.rho).cwiseAbs().maxCoeff(), 0.5);
  // ω = 1, so exp(-iHπ) = -I and ρ(π) = ρ0.
  EXPECT_LT((density_evolve(m, rho0, std::numbers::pi).rho - rho0.rho).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((density_evolve(m, rho0, 2 * std::numbers::pi).rho - rho0.rho).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Density, InvariantsAndComposition) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  const DiracModel m = model4(Variant::Doubled, 1);
  std::vector<std::complex<double>> v;
  for (int i = 0; i < 8; ++i) v.emplace_back(g(rng), g(rng));
  const std::vector<double> p{g(rng), g(rng), g(rng), g(rng)};
  const DensityState rho0{p, pure_state(v)};
  const Eigen::VectorXd spec0 = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(rho0.rho).eigenvalues();
  for (double t = 0; t <= 10; t += 2.5) {
    const auto out = density_evolve(m, rho0, t, 4);
    EXPECT_NEAR(out.rho.trace().real(), 1.0, 1e-12);
    EXPECT_LT((out.rho - out.rho.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    const Eigen::VectorXd spec = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(out.rho).eigenvalues();
    EXPECT_LT((spec - spec0).cwiseAbs().maxCoeff(), 1e-12);
  }
  const auto a = density_evolve(m, density_evolve(m, rho0, 1.7), 2.9);
  const auto b = density_evolve(m, rho0, 4.6);
  EXPECT_LT((a.rho - b.rho).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Density, Validation) {
  const DiracModel m = model4(Variant::Single);
  ComplexMatrix bad = ComplexMatrix::Identity(4, 4);
  EXPECT_THROW(density_evolve(m, {{0, 0, 0, 0}, bad}, 1.0), std::invalid_argument);
  bad = ComplexMatrix::Identity(4, 4) / 4.0;
  bad(0, 1) = 0.1;
  EXPECT_THROW(density_evolve(m, {{0, 0, 0, 0}, bad}, 1.0), std::invalid_argument);
  EXPECT_THROW(density_evolve(m, {{0, 0, 0, 0}, ComplexMatrix::Identity(4, 4) / 4.0}, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(density_evolve(m, {{0, 0}, ComplexMatrix::Identity(4, 4) / 4.0}, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace diracsym
