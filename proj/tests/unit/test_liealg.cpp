#include <gtest/gtest.h>

#include <random>

#include "pflat/error.hpp"
#include "pflat/lie_algebra.hpp"

using namespace pflat;

namespace {

LieAlgebra heisenberg() {
  return LieAlgebra("heisenberg", {"X", "Y", "Z"}, {{{0, 1}, {{2, Rational(1)}}}});
}

std::vector<Matrix> gl_basis(std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.push_back(Matrix::unit(n, a, b));
  return out;
}

std::vector<std::string> gl_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b) out.push_back("E" + std::to_string(a) + std::to_string(b));
  return out;
}

}  // namespace

TEST(Bracket, Antisymmetric) {
  const auto alg = heisenberg();
  const Vector x{1, 2, 3};
  EXPECT_TRUE(is_zero(bracket(alg, x, x)));
}

TEST(Bracket, HeisenbergDefiningRelation) {
  const auto alg = heisenberg();
  EXPECT_EQ(bracket(alg, unit_vector(3, 0), unit_vector(3, 1)), unit_vector(3, 2));
  EXPECT_EQ(bracket(alg, unit_vector(3, 1), unit_vector(3, 0)), -unit_vector(3, 2));
}

TEST(Bracket, Gl2FromMatrices) {
  const auto gl2 = LieAlgebra::from_matrices("gl2", gl_labels(2), gl_basis(2));
  // [E11, E21] = -E21
  EXPECT_EQ(bracket(gl2, unit_vector(4, 0), unit_vector(4, 2)), -unit_vector(4, 2));
}

TEST(Bracket, DimensionMismatch) {
  try {
    bracket(heisenberg(), Vector{1, 2}, Vector{1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Bracket, Bilinear) {
  const auto gl3 = LieAlgebra::from_matrices("gl3", gl_labels(3), gl_basis(3));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-5, 5);
  auto rv = [&] {
    Vector v(9);
    for (auto& x : v) x = Rational(d(rng), 1 + (d(rng) + 5) % 3);
    return v;
  };
  for (int t = 0; t < 20; ++t) {
    const Vector x = rv(), y = rv(), z = rv();
    const Rational a(d(rng), 3), b(d(rng), 2);
    EXPECT_EQ(bracket(gl3, a * x + b * y, z), a * bracket(gl3, x, z) + b * bracket(gl3, y, z));
  }
}

TEST(Jacobi, AbelianPasses) {
  EXPECT_TRUE(check_jacobi(LieAlgebra::abelian("a", {"F", "E"})).passed);
}

TEST(Jacobi, Gl3Passes) {
  const auto gl3 = LieAlgebra::from_matrices("gl3", gl_labels(3), gl_basis(3));
  EXPECT_TRUE(check_jacobi(gl3).passed);
}

TEST(Jacobi, CorruptedHeisenbergFails) {
  // [X,Y] = Z together with an injected [X,Z] = X.
  LieAlgebra bad("bad", {"X", "Y", "Z"},
                 {{{0, 1}, {{2, Rational(1)}}}, {{0, 2}, {{0, Rational(1)}}}});
  const auto report = check_jacobi(bad);
  ASSERT_FALSE(report.passed);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].i, 0u);
  EXPECT_EQ(report.violations[0].j, 1u);
  EXPECT_EQ(report.violations[0].k, 2u);
  EXPECT_FALSE(is_zero(report.violations[0].residual));
  try {
    validate(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotValidated);
    EXPECT_NE(std::string(e.what()).find("(X, Y, Z)"), std::string::npos);
  }
}

TEST(Construction, RejectsMalformedInput) {
  EXPECT_THROW(LieAlgebra("x", {"A", "A"}, {}), Error);
  EXPECT_THROW(LieAlgebra("x", {"A", "B"}, {{{1, 0}, {{0, Rational(1)}}}}), Error);
  EXPECT_THROW(LieAlgebra("x", {"A", "B"}, {{{0, 1}, {{5, Rational(1)}}}}), Error);
  EXPECT_THROW(LieAlgebra::from_matrices("x", {"A", "B"}, {Matrix::identity(2), Matrix::identity(2)}),
               Error);
  // span{E12, E21} is not closed.
  EXPECT_THROW(LieAlgebra::from_matrices("x", {"A", "B"}, {Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)}),
               Error);
}

TEST(Subalgebra, Checks) {
  const auto gl2 = make_validated(LieAlgebra::from_matrices("gl2", gl_labels(2), gl_basis(2)));
  EXPECT_TRUE(check_subalgebra(*gl2, Subspace(4)).passed);
  // Second column block {E12, E22}.
  const Subspace k = Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 3)});
  EXPECT_TRUE(check_subalgebra(*gl2, k).passed);
  EXPECT_NO_THROW(Subalgebra(gl2, k));

  const Subspace bad = Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 2)});
  const auto report = check_subalgebra(*gl2, bad);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.escaped_bracket, (Vector{1, 0, 0, -1}));
  EXPECT_THROW(Subalgebra(gl2, bad), Error);
}

TEST(Subalgebra, RequiresValidatedParent) {
  auto raw = std::make_shared<const LieAlgebra>(heisenberg());
  try {
    Subalgebra(raw, Subspace(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotValidated);
  }
}

TEST(CentralExtension, Su2) {
  // su(2): [H,A] = 2B, [H,B] = -2A, [A,B] = 2H.
  LieAlgebra su2("su2", {"H", "A", "B"},
                 {{{0, 1}, {{2, Rational(2)}}},
                  {{0, 2}, {{1, Rational(-2)}}},
                  {{1, 2}, {{0, Rational(2)}}}});
  const auto ext = central_extension(validate(std::move(su2)));
  EXPECT_EQ(ext.extended.dim(), 4u);
  EXPECT_EQ(ext.e_index, 3u);
  EXPECT_TRUE(ext.extended.validated());
  EXPECT_TRUE(is_central(ext.extended, unit_vector(4, 3)));
  EXPECT_TRUE(check_jacobi(ext.extended).passed);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
    {
      Vector expected = ext.base.bracket_basis(i, j);
      expected.push_back(Rational(0));
      EXPECT_EQ(ext.extended.bracket_basis(i, j), expected) << i << j;
    }
}

TEST(CentralExtension, AbelianLine) {
  const auto ext = central_extension(validate(LieAlgebra::abelian("r", {"F"})));
  EXPECT_EQ(ext.extended.dim(), 2u);
  EXPECT_TRUE(ext.extended.structure_constants().empty());
}

TEST(CentralExtension, Sl2GivesGl2) {
  const Matrix h{{1, 0}, {0, -1}}, xp = Matrix::unit(2, 0, 1), xm = Matrix::unit(2, 1, 0);
  const auto sl2 = validate(LieAlgebra::from_matrices("sl2", {"H", "X+", "X-"}, {h, xp, xm}));
  const auto ext = central_extension(sl2);
  const auto gl2 = LieAlgebra::from_matrices("gl2", {"H", "X+", "X-", "E"},
                                             {h, xp, xm, Matrix::identity(2)});
  EXPECT_EQ(ext.extended.structure_constants(), gl2.structure_constants());
}

TEST(CentralExtension, RequiresValidatedBase) {
  EXPECT_THROW(central_extension(heisenberg()), Error);
}

TEST(IsCentral, Heisenberg) {
  const auto alg = heisenberg();
  EXPECT_TRUE(is_central(alg, unit_vector(3, 2)));
  EXPECT_FALSE(is_central(alg, unit_vector(3, 0)));
  EXPECT_THROW(is_central(alg, Vector{1}), Error);
}
