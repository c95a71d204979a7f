#include <gtest/gtest.h>

#include "diracsym/clifford.hpp"
#include "diracsym/linear_system.hpp"
#include "generators.hpp"

namespace diracsym {
namespace {

using testing::kI;

TEST(Clifford, BaseSystem) {
  const GammaSystem gs = base_system();
  EXPECT_EQ(gs.rep_dim, 2u);
  const auto a = gs.alphas();
  EXPECT_EQ(a[0], pauli::sigma1());
  EXPECT_EQ(a[1], pauli::sigma2());
  EXPECT_EQ(gs.beta(), pauli::sigma3());
  EXPECT_EQ(gs.gamma(1) * gs.gamma(1), -ExactMatrix::identity(2));
  EXPECT_TRUE(anticommutator(gs.gamma(0), gs.gamma(1)).is_zero());
}

TEST(Clifford, RecursiveExtension) {
  const GammaSystem gs = extend(base_system());
  EXPECT_EQ(gs.spatial_dim, 4);
  EXPECT_EQ(gs.gammas.size(), 5u);
  EXPECT_TRUE(relations_hold(gs));
  EXPECT_EQ(gs.gamma(4), kI * kron(pauli::identity(), pauli::sigma1()));
  EXPECT_EQ(gs.gamma(3), kI * kron(pauli::identity(), pauli::sigma3()));
  EXPECT_EQ(gs.gamma(0), kron(pauli::sigma3(), pauli::sigma2()));
  EXPECT_EQ(extend(gs).rep_dim, 8u);
}

TEST(Clifford, SystemFor) {
  EXPECT_EQ(system_for(2).gammas, base_system().gammas);
  EXPECT_EQ(system_for(4).rep_dim, 4u);
  EXPECT_EQ(system_for(8).rep_dim, 16u);
  EXPECT_THROW(system_for(3), std::invalid_argument);
  EXPECT_THROW(system_for(0), std::invalid_argument);
  EXPECT_THROW(system_for(-2), std::invalid_argument);
}

TEST(Clifford, DiracBasisIsStandardAtD4) {
  const GammaSystem gs = system_for(4, GammaBasis::Dirac);
  const ExactMatrix i2 = pauli::identity(), z2(2);
  EXPECT_EQ(gs.beta(), block(i2, z2, z2, -i2));
  const std::vector<ExactMatrix> s{pauli::sigma1(), pauli::sigma2(), pauli::sigma3()};
  const auto a = gs.alphas();
  for (int k = 0; k < 3; ++k) EXPECT_EQ(a[static_cast<std::size_t>(k)], kron(pauli::sigma1(), s[static_cast<std::size_t>(k)]));
  EXPECT_EQ(a[3], kron(pauli::sigma2(), i2));
}

class AllSystems : public ::testing::TestWithParam<std::tuple<int, GammaBasis>> {};

TEST_P(AllSystems, RelationsAndHermiticity) {
  const auto [d, basis] = GetParam();
  const GammaSystem gs = system_for(d, basis);
  EXPECT_EQ(gs.rep_dim, std::size_t{1} << (d / 2));
  const auto checks = check_relations(gs);
  EXPECT_EQ(checks.size(), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  for (const auto& c : checks) EXPECT_TRUE(c.holds) << c.mu << "," << c.nu;
  EXPECT_TRUE(hermiticity_holds(gs));
  for (const auto& g : gs.gammas)
    for (const auto& z : g.entries())
      EXPECT_TRUE(z.is_zero() || z.norm2() == 1) << "entries lie in {0, ±1, ±i}";
}

INSTANTIATE_TEST_SUITE_P(UpToTen, AllSystems,
                         ::testing::Combine(::testing::Values(2, 4, 6, 8, 10),
                                            ::testing::Values(GammaBasis::Recursive, GammaBasis::Dirac)));

TEST(Clifford, AlphaAlgebraAtD4) {
  for (auto basis : {GammaBasis::Recursive, GammaBasis::Dirac}) {
    const GammaSystem gs = system_for(4, basis);
    const auto a = gs.alphas();
    const ExactMatrix one = ExactMatrix::identity(4);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_TRUE(anticommutator(a[k], gs.beta()).is_zero());
      for (std::size_t l = 0; l < 4; ++l)
        EXPECT_EQ(anticommutator(a[k], a[l]), k == l ? ExactScalar(2) * one : ExactMatrix(4));
    }
  }
}

TEST(Clifford, MonomialCounts) {
  EXPECT_EQ(monomial_basis(system_for(2), 1).size(), 4u);
  const auto m = monomial_basis(system_for(4), 2);
  EXPECT_EQ(m.size(), 16u);
  EXPECT_TRUE(m[0].indices.empty());
  EXPECT_EQ(m[1].indices, std::vector<int>{0});
  EXPECT_EQ(m[6].indices, (std::vector<int>{0, 1}));
  EXPECT_EQ(m[15].indices, (std::vector<int>{3, 4}));
  EXPECT_THROW(monomial_basis(system_for(2), 4), std::invalid_argument);
  for (const auto& mono : m) EXPECT_EQ(mono.matrix, clifford_product(system_for(4), mono.indices));
}

TEST(Clifford, ProductOfAllGammasIsScalar) {
  for (auto basis : {GammaBasis::Recursive, GammaBasis::Dirac}) {
    const auto p = clifford_product(system_for(4, basis), {0, 1, 2, 3, 4});
    ASSERT_TRUE(p.scalar_value().has_value());
    EXPECT_EQ(p.scalar_value()->norm2(), 1);
  }
}

std::size_t span_rank(const std::vector<CliffordMonomial>& monos, std::size_t n) {
  RowEchelon ech(n * n);
  for (const auto& m : monos) {
    LinearForm row;
    for (std::size_t i = 0; i < n * n; ++i)
      if (!m.matrix.entries()[i].is_zero()) row.emplace_back(i, m.matrix.entries()[i]);
    ech.add_row(row);
  }
  return ech.rank();
}

TEST(Clifford, MonomialsSpanFullMatrixSpace) {
  for (int d : {2, 4, 6, 8}) {
    const GammaSystem gs = system_for(d);
    EXPECT_EQ(span_rank(monomial_basis(gs, d + 1), gs.rep_dim), gs.rep_dim * gs.rep_dim) << "d=" << d;
  }
}

// Averaging X over the finite group of signed monomials yields U with
// U γ_μ(recursive) = γ_μ(dirac) U; both bases are the same representation.
TEST(Clifford, BasesAreEquivalent) {
  for (int d : {2, 4, 6}) {
    const GammaSystem r = system_for(d, GammaBasis::Recursive), dir = system_for(d, GammaBasis::Dirac);
    const auto mr = monomial_basis(r, d + 1), md = monomial_basis(dir, d + 1);
    ExactMatrix u(r.rep_dim);
    for (std::size_t seed = 0; seed < r.rep_dim * r.rep_dim && u.is_zero(); ++seed) {
      ExactMatrix x(r.rep_dim);
      x(seed / r.rep_dim, seed % r.rep_dim) = 1;
      for (std::size_t s = 0; s < mr.size(); ++s) u += md[s].matrix * x * mr[s].matrix.adjoint();
    }
    ASSERT_TRUE(is_invertible(u)) << "d=" << d;
    for (int mu = 0; mu <= d; ++mu) EXPECT_EQ(u * r.gamma(mu), dir.gamma(mu) * u) << "d=" << d << " mu=" << mu;
  }
}

TEST(Clifford, ParseBasis) {
  EXPECT_EQ(parse_gamma_basis("dirac"), GammaBasis::Dirac);
  EXPECT_EQ(parse_gamma_basis("recursive"), GammaBasis::Recursive);
  EXPECT_EQ(to_string(GammaBasis::Dirac), "dirac");
  EXPECT_THROW(parse_gamma_basis("weyl"), std::invalid_argument);
}

}  // namespace
}  // namespace diracsym
