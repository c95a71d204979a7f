#include <gtest/gtest.h>

#include "diracsym/linear_system.hpp"
#include "generators.hpp"

namespace diracsym {
namespace {

using testing::kI;
using testing::random_matrix;
using testing::random_scalar;

TEST(ExactScalar, StaysCanonical) {
  const ExactScalar z(make_rational(6, -4), make_rational(10, 20));
  EXPECT_EQ(z.re().get_num(), -3);
  EXPECT_EQ(z.re().get_den(), 2);
  EXPECT_EQ(z.im(), make_rational(1, 2));
  EXPECT_EQ(to_string(z.re() * 2), "-3");
}

TEST(ExactScalar, FieldOperations) {
  const ExactScalar a(make_rational(1, 2), Rational(-3));
  EXPECT_EQ(a * a.inverse(), ExactScalar(1));
  EXPECT_EQ(a.conj(), ExactScalar(make_rational(1, 2), Rational(3)));
  EXPECT_EQ(a.norm2(), make_rational(37, 4));
  EXPECT_EQ(kI * kI, ExactScalar(-1));
  EXPECT_THROW(ExactScalar(0).inverse(), std::domain_error);
  EXPECT_EQ(a.to_string(), "1/2 - 3i");
}

TEST(ExactScalar, ParseRational) {
  EXPECT_EQ(parse_rational("-12/8"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational("123456789012345678901234567890"));
  EXPECT_THROW(parse_rational("1/0"), std::domain_error);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(ExactMatrix, MatmulExamples) {
  const auto s1 = pauli::sigma1(), s2 = pauli::sigma2(), s3 = pauli::sigma3();
  EXPECT_EQ(ExactMatrix::identity(2) * s3, s3);
  EXPECT_EQ(s1 * s2, kI * s3);
  // Hand multiplication: σ3σ1·σ3σ2 = −σ1σ2 = −iσ3.
  EXPECT_EQ((s3 * s1) * (s3 * s2), -(kI * s3));
  EXPECT_THROW(matmul(s1, ExactMatrix::identity(3)), std::invalid_argument);
}

TEST(ExactMatrix, KronExamples) {
  const auto i2 = pauli::identity(), s2 = pauli::sigma2(), s3 = pauli::sigma3();
  const ExactMatrix d1{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  const ExactMatrix d2{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  EXPECT_EQ(kron(i2, s3), d1);
  EXPECT_EQ(kron(s3, i2), d2);
  const ExactMatrix k = kron(s2, s2);
  EXPECT_TRUE(k.is_real());
  for (const auto& z : k.entries()) EXPECT_TRUE(z.is_zero() || z == ExactScalar(1) || z == ExactScalar(-1));
  EXPECT_EQ(kron(s3, ExactMatrix::identity(3)).dim(), 6u);
}

TEST(ExactMatrix, RejectsNonSquareLiteral) {
  EXPECT_THROW((ExactMatrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST(ExactMatrix, DeterminantRankInverse) {
  const auto s1 = pauli::sigma1();
  EXPECT_EQ(determinant(s1), ExactScalar(-1));
  EXPECT_EQ(rank(ExactMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_FALSE(is_invertible(ExactMatrix{{1, kI}, {kI, -1}}));
  EXPECT_TRUE(is_invertible(pauli::sigma2()));
}

TEST(ExactMatrix, Projective) {
  const auto s2 = pauli::sigma2();
  const ExactScalar u(make_rational(3, 5), make_rational(4, 5));
  EXPECT_TRUE(projectively_equal(u * s2, s2));
  EXPECT_FALSE(projectively_equal(s2, pauli::sigma1()));
  EXPECT_FALSE(projectively_equal(ExactMatrix(2), s2));
  EXPECT_EQ(proportionality(u * s2, s2), u);
  const ExactMatrix n = normalize_phase(u * s2);
  EXPECT_EQ(n(0, 1), ExactScalar(1));
}

class RingAxioms : public ::testing::TestWithParam<int> {};

TEST_P(RingAxioms, HoldExactly) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  const std::size_t n = 1 + static_cast<std::size_t>(GetParam() % 3);
  const auto a = random_matrix(rng, n), b = random_matrix(rng, n), c = random_matrix(rng, n);
  const auto d = random_matrix(rng, n);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  EXPECT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint());
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  const ExactScalar s = random_scalar(rng);
  EXPECT_EQ((s * a) * b, s * (a * b));
}

INSTANTIATE_TEST_SUITE_P(Random, RingAxioms, ::testing::Range(1, 41));

TEST(Nullspace, Examples) {
  EXPECT_TRUE(nullspace(std::vector<ExactVector>{{1, 0}, {0, 1}}).empty());
  const auto zero = nullspace(std::vector<ExactVector>{{0, 0, 0}});
  EXPECT_EQ(zero.size(), 3u);
  const auto ns = nullspace(std::vector<ExactVector>{{1, kI}, {-kI, 1}});
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], (ExactVector{-kI, 1}));
  EXPECT_THROW(nullspace(std::vector<ExactVector>{{1, 0}, {1}}), std::invalid_argument);
}

TEST(Nullspace, RejectsOutOfRangeUnknown) {
  RowEchelon ech(2);
  EXPECT_THROW(ech.add_row({{5, ExactScalar(1)}}), std::out_of_range);
}

class NullspaceProperties : public ::testing::TestWithParam<int> {};

TEST_P(NullspaceProperties, SoundAndRankNullity) {
  std::mt19937_64 rng(1000 + static_cast<std::uint64_t>(GetParam()));
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::bernoulli_distribution sparse(0.5);
  const std::size_t unknowns = size(rng), rows = size(rng);
  std::vector<LinearForm> forms;
  RowEchelon ech(unknowns);
  for (std::size_t r = 0; r < rows; ++r) {
    LinearForm f;
    for (std::size_t c = 0; c < unknowns; ++c)
      if (sparse(rng)) f.emplace_back(c, random_scalar(rng));
    forms.push_back(f);
    ech.add_row(f);
  }
  // Duplicate a combination so dependent rows are exercised.
  if (forms.size() >= 2) {
    LinearForm f = forms[0];
    for (const auto& [c, v] : forms[1]) f.emplace_back(c, v * ExactScalar(3));
    forms.push_back(f);
    ech.add_row(f);
  }
  const auto basis = nullspace(forms, unknowns);
  for (const auto& v : basis)
    for (const auto& f : forms) EXPECT_TRUE(evaluate(f, v).is_zero());
  EXPECT_EQ(basis.size() + ech.rank(), unknowns);
  // Basis vectors are independent: each has a 1 on its own free column.
  std::vector<ExactVector> as_rows(basis.begin(), basis.end());
  if (!as_rows.empty()) EXPECT_EQ(nullspace(as_rows).size(), unknowns - basis.size());
}

INSTANTIATE_TEST_SUITE_P(Random, NullspaceProperties, ::testing::Range(0, 60));

TEST(Nullspace, Deterministic) {
  const std::vector<ExactVector> rows{{1, 2, 3, 4}, {2, 4, 6, 9}};
  EXPECT_EQ(nullspace(rows), nullspace(rows));
}

}  // namespace
}  // namespace diracsym
