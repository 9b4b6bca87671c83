#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "pflat/catalog.hpp"
#include "pflat/connection.hpp"
#include "pflat/error.hpp"
#include "pflat/linalg.hpp"

using namespace pflat;

namespace {

struct Quotient {
  AlgebraPtr algebra;
  Subalgebra k;
  Matrix q;
};

Quotient abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  auto alg = make_validated(LieAlgebra::abelian("abelian", labels));
  return {alg, Subalgebra::zero(alg), Matrix::identity(n)};
}

ConnectionData raw(const Quotient& quo, std::vector<Matrix> lambda) {
  return ConnectionData::from_raw(quo.algebra, quo.k, quo.q, std::move(lambda));
}

ConnectionData sample(const CatalogEntry& e, const std::string& id) {
  for (const auto& s : e.raw_samples)
    if (s.id == id) return ConnectionData::from_raw(s.algebra, s.k, s.q, s.lambda);
  throw std::runtime_error("no sample " + id);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Schema;
}

}  // namespace

TEST(TangentSection, Examples) {
  const auto q3 = abelian(3);
  EXPECT_EQ(tangent_section(q3.algebra, q3.k, q3.q).s_mat(), Matrix::identity(3));

  const auto gl = gl_column_block(2, 1);
  const auto s = tangent_section(gl.algebra, gl.k, gl.rep.q_mat());
  // e1 -> E11, e2 -> E21 in the basis E11, E12, E21, I.
  EXPECT_EQ(s.lift(0), unit_vector(4, 0));
  EXPECT_EQ(s.lift(1), unit_vector(4, 2));

  const auto h = heisenberg_flat();
  EXPECT_EQ(tangent_section(h.algebra, h.k, h.rep.q_mat()).s_mat(), Matrix::identity(3));
}

TEST(TangentSection, Errors) {
  const auto q2 = abelian(2);
  EXPECT_EQ(code_of([&] { tangent_section(q2.algebra, q2.k, Matrix{{1, 1}, {1, 1}}); }),
            ErrorCode::NotSurjective);
  const Subalgebra line(q2.algebra, Subspace::span(2, {unit_vector(2, 0)}));
  EXPECT_EQ(code_of([&] { tangent_section(q2.algebra, line, Matrix{{1, 0}}); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([&] {
              TangentSection::from_matrix(q2.algebra, q2.k, q2.q, Matrix::scalar(2, Rational(2)));
            }),
            ErrorCode::PreconditionViolated);
}

TEST(TangentSection, RandomizedIsRightInverse) {
  const auto gl = gl_column_block(3, 2);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto s = TangentSection::randomized(gl.algebra, gl.k, gl.rep.q_mat(), seed);
    EXPECT_EQ(gl.rep.q_mat() * s.s_mat(), Matrix::identity(6));
    EXPECT_NE(s.s_mat(), tangent_section(gl.algebra, gl.k, gl.rep.q_mat()).s_mat());
  }
}

TEST(Torsion, RepInducedVanishes) {
  for (const auto& id : catalog_ids()) {
    const auto e = catalog_entry(id);
    const auto c = ConnectionData::from_rep(e.rep, e.k);
    EXPECT_TRUE(torsion(c).is_zero()) << id;
    EXPECT_TRUE(curvature(c).is_zero()) << id;
    EXPECT_TRUE(check_flat(c).passed) << id;
  }
}

TEST(Torsion, HeisenbergZeroLambda) {
  const auto c = sample(heisenberg_flat(), "heisenberg_zero");
  const auto t = torsion(c);
  EXPECT_EQ(t.at(0, 1), (Vector{0, 0, -1}));
  EXPECT_EQ(t.at(1, 0), (Vector{0, 0, 1}));
  const auto f = check_flat(c);
  EXPECT_FALSE(f.passed);
  EXPECT_FALSE(f.torsion_zero);
  EXPECT_TRUE(f.curvature_zero);
  EXPECT_EQ(c.tangent_label(f.offending_pair->first), "X");
  EXPECT_EQ(c.tangent_label(f.offending_pair->second), "Y");
}

TEST(Curvature, HeisenbergCurved) {
  const auto c = sample(heisenberg_flat(), "heisenberg_curved");
  EXPECT_EQ(curvature(c).at(0, 1), (Matrix{{0, -1, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(curvature(c).at(1, 0), (Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(torsion(c).at(1, 2), (Vector{1, 0, 0}));
  EXPECT_EQ(ricci(c).entries, (Matrix{{0, 0, 0}, {0, -1, 0}, {0, 0, 0}}));
  EXPECT_FALSE(check_flat(c).passed);
}

TEST(Curvature, ZeroLambdaOnAbelian) {
  const auto q3 = abelian(3);
  const auto c = raw(q3, std::vector<Matrix>(3, Matrix(3, 3)));
  EXPECT_TRUE(curvature(c).is_zero());
  EXPECT_TRUE(check_flat(c).passed);
}

TEST(Ricci, OneDimensional) {
  const auto q1 = abelian(1);
  const auto c = raw(q1, {Matrix{{5}}});
  EXPECT_EQ(ricci(c).entries, Matrix(1, 1));
  EXPECT_EQ(code_of([&] { check_weyl(c); }), ErrorCode::DegenerateDimension);
  EXPECT_EQ(code_of([&] { check_codazzi(c); }), ErrorCode::DegenerateDimension);
}

TEST(Su2Samples, NeverFlat) {
  const auto e = su2_quaternionic();
  for (const auto& s : e.raw_samples) {
    const auto c = ConnectionData::from_raw(s.algebra, s.k, s.q, s.lambda);
    EXPECT_FALSE(check_flat(c).passed) << s.id;
  }
  EXPECT_TRUE(ricci(sample(e, "su2_zero")).entries.is_zero());
  EXPECT_TRUE(ricci(sample(e, "su2_ad")).entries.is_zero());
  const auto half = sample(e, "su2_half_ad");
  EXPECT_TRUE(torsion(half).is_zero());
  EXPECT_EQ(ricci(half).entries, Matrix::scalar(3, Rational(2)));
  EXPECT_TRUE(check_weyl(half).passed);
  EXPECT_TRUE(check_codazzi(half).passed);
  EXPECT_EQ(code_of([&] { check_weyl(sample(e, "su2_ad")); }), ErrorCode::PreconditionViolated);
}

TEST(Weyl, FlatConnectionsPass) {
  for (const auto& id : catalog_ids()) {
    const auto e = catalog_entry(id);
    const auto c = ConnectionData::from_rep(e.rep, e.k);
    if (c.dim_v() < 2) continue;
    EXPECT_TRUE(check_weyl(c).passed) << id;
    EXPECT_TRUE(check_codazzi(c).passed) << id;
  }
}

TEST(Weyl, TwoDimensionalCurved) {
  const auto q2 = abelian(2);
  const auto c = raw(q2, {Matrix{{0, 0}, {-1, 0}}, Matrix{{0, 1}, {0, 0}}});
  EXPECT_TRUE(torsion(c).is_zero());
  EXPECT_FALSE(curvature(c).is_zero());
  EXPECT_EQ(ricci(c).entries, (Matrix{{0, 1}, {1, 0}}));
  EXPECT_TRUE(check_weyl(c).passed);
  EXPECT_TRUE(check_codazzi(c).passed);

  const auto doubled = raw(q2, {Matrix{{0, 0}, {-2, 0}}, Matrix{{0, 2}, {0, 0}}});
  EXPECT_EQ(ricci(doubled).entries, (Matrix{{0, 4}, {4, 0}}));
  EXPECT_TRUE(check_weyl(doubled).passed);
  EXPECT_TRUE(check_codazzi(doubled).passed);
}

TEST(Weyl, BackSolvedFromIdentityRicci) {
  const auto q2 = abelian(2);
  const auto c = raw(q2, {Matrix{{2, 0}, {0, 1}}, Matrix{{0, 1}, {1, 0}}});
  EXPECT_TRUE(torsion(c).is_zero());
  EXPECT_EQ(ricci(c).entries, Matrix::identity(2));
  // R(e1,e2) z = Ric(e2,z) e1 - Ric(e1,z) e2
  EXPECT_EQ(curvature(c).at(0, 1), (Matrix{{0, 1}, {-1, 0}}));
  EXPECT_TRUE(check_weyl(c).passed);
  EXPECT_TRUE(check_codazzi(c).passed);
}

TEST(Weyl, ThreeDimensionalFailure) {
  const auto q3 = abelian(3);
  const auto c = raw(q3, {Matrix(3, 3), Matrix::unit(3, 0, 1), Matrix::unit(3, 1, 2)});
  EXPECT_TRUE(torsion(c).is_zero());
  EXPECT_TRUE(ricci(c).entries.is_zero());
  const auto w = check_weyl(c);
  EXPECT_FALSE(w.passed);
  EXPECT_FALSE(is_zero(w.residual));
  EXPECT_TRUE(check_codazzi(c).passed);
}

TEST(Codazzi, ThreeDimensionalFailure) {
  const auto q3 = abelian(3);
  const auto c = raw(q3, {Matrix::unit(3, 2, 0), -Matrix::unit(3, 0, 1), Matrix::unit(3, 0, 2)});
  EXPECT_TRUE(torsion(c).is_zero());
  EXPECT_EQ(ricci(c).entries, (Matrix{{0, 0, -1}, {0, 0, 0}, {-1, 0, 0}}));
  EXPECT_FALSE(check_weyl(c).passed);
  const auto cz = check_codazzi(c);
  EXPECT_FALSE(cz.passed);
  ASSERT_TRUE(cz.x && cz.y && cz.z);
  EXPECT_LT(*cz.x, *cz.y);

  // Scaling Λ by 2 leaves the verdict unchanged.
  const auto scaled = raw(q3, {Rational(2) * Matrix::unit(3, 2, 0), Rational(-2) * Matrix::unit(3, 0, 1),
                               Rational(2) * Matrix::unit(3, 0, 2)});
  EXPECT_FALSE(check_codazzi(scaled).passed);
}

TEST(Isotropy, Examples) {
  const auto q2 = abelian(2);
  EXPECT_TRUE(isotropy_action(tangent_section(q2.algebra, q2.k, q2.q)).empty());

  const auto gl = gl_column_block(2, 1);
  const auto s = tangent_section(gl.algebra, gl.k, gl.rep.q_mat());
  // k basis in canonical form: E11 - I = -E22, then E12.
  ASSERT_EQ(gl.k.subspace().basis(), (std::vector<Vector>{Vector{1, 0, 0, -1}, Vector{0, 1, 0, 0}}));
  const auto lam = isotropy_action(gl.algebra, gl.k, s);
  ASSERT_EQ(lam.size(), 2u);
  // λ(E22) e2 = q([E22, E21]) = q(E21) = e2.
  EXPECT_EQ(lam[0], (Matrix{{0, 0}, {0, -1}}));
  EXPECT_EQ(lam[1], (Matrix{{0, 1}, {0, 0}}));
}

TEST(Isotropy, CentralElementActsTrivially) {
  const auto gl = gl_column_block(3, 1);
  const auto s = tangent_section(gl.algebra, gl.k, gl.rep.q_mat());
  const Vector e = unit_vector(9, 8);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_TRUE(is_zero(gl.rep.q_of(bracket(*gl.algebra, e, s.lift(v)))));
}

TEST(Isotropy, IsRepresentationOfK) {
  for (const auto& [n, r] : {std::pair{3, 1}, {3, 2}, {4, 2}}) {
    const auto gl = gl_column_block(n, r);
    const auto s = tangent_section(gl.algebra, gl.k, gl.rep.q_mat());
    const auto lam = isotropy_action(s);
    const auto& kb = gl.k.subspace().basis();
    EchelonBasis coords(gl.algebra->dim());
    for (const auto& z : kb) coords.insert(z);
    for (std::size_t i = 0; i < kb.size(); ++i) {
      for (std::size_t j = 0; j < kb.size(); ++j) {
        const auto c = coords.express(bracket(*gl.algebra, kb[i], kb[j]));
        ASSERT_TRUE(c);
        EXPECT_EQ(combine(lam, *c, s.dim_v(), s.dim_v()), commutator(lam[i], lam[j]));
      }
    }
  }
}

TEST(Equivariance, Examples) {
  const auto gl = gl_column_block(3, 2);
  const auto c = ConnectionData::from_rep(gl.rep, gl.k);
  EXPECT_TRUE(check_equivariance_infinitesimal(c, gl.k).passed);
  const auto q2 = abelian(2);
  EXPECT_TRUE(check_equivariance_infinitesimal(raw(q2, {Matrix(2, 2), Matrix(2, 2)}), q2.k).passed);

  auto lambda = gl.rep.f_mats();
  // Perturb Λ on the first k basis vector, which has a single nonzero coordinate.
  const auto& z = gl.k.subspace().basis().front();
  std::size_t idx = 0;
  while (z[idx].is_zero()) ++idx;
  lambda[idx] = lambda[idx] + Matrix::identity(6);
  const auto bad = ConnectionData::from_raw_unchecked(gl.algebra, gl.k, gl.rep.q_mat(), lambda);
  const auto rep = check_equivariance_infinitesimal(bad, gl.k);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.failed_condition, "restriction");
  EXPECT_EQ(rep.z_index, 0u);
  EXPECT_EQ(code_of([&] { ConnectionData::from_raw(gl.algebra, gl.k, gl.rep.q_mat(), lambda); }),
            ErrorCode::PreconditionViolated);
}

TEST(Tensoriality, SectionIndependence) {
  for (const auto& id : catalog_ids()) {
    const auto e = catalog_entry(id);
    if (e.k.dim() == 0) continue;
    const auto base = ConnectionData::from_rep(e.rep, e.k);
    const auto t0 = torsion(base);
    const auto r0 = curvature(base);
    const auto ric0 = ricci(base);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto c =
          base.with_section(TangentSection::randomized(e.algebra, e.k, e.rep.q_mat(), seed));
      EXPECT_EQ(torsion(c), t0) << id;
      EXPECT_EQ(curvature(c), r0) << id;
      EXPECT_EQ(ricci(c), ric0) << id;
    }
  }
}

TEST(Orbit, RotationDilation) {
  const auto e = rotation_dilation();
  const Vector dir{0, 1};
  const auto pts = centro_affine_orbit(e.rep, unit_vector(2, 0), dir,
                                       {0.0, std::numbers::pi / 2, std::numbers::pi});
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].x, (std::vector<double>{1.0, 0.0}));
  EXPECT_NEAR(pts[1].x[0], 0.0, 1e-9);
  EXPECT_NEAR(pts[1].x[1], 1.0, 1e-9);
  EXPECT_NEAR(pts[2].x[0], -1.0, 1e-9);
  EXPECT_NEAR(pts[2].x[1], 0.0, 1e-9);
  // Dilation direction F scales by e^t.
  const auto grow = centro_affine_orbit(e.rep, unit_vector(2, 0), Vector{1, 0}, {1.0});
  EXPECT_NEAR(grow[0].x[0], std::exp(1.0), 1e-12 * std::exp(1.0));
}

TEST(Orbit, NilpotentDirectionIsLinear) {
  const auto e = heisenberg_flat();
  const Vector v0{1, 2, 3};
  for (double t : {0.0, 0.5, 3.0, -7.25}) {
    const auto p = centro_affine_orbit(e.rep, v0, unit_vector(3, 0), {t});
    EXPECT_EQ(p[0].x, (std::vector<double>{1.0, 2.0, 3.0 + 2.0 * t}));
  }
}

TEST(FlatOnBasis, AgreesWithSectionedCheck) {
  for (const auto& id : catalog_ids()) {
    const auto e = catalog_entry(id);
    EXPECT_TRUE(check_flat_on_basis(*e.algebra, e.rep.q_mat(), e.rep.f_mats()).passed) << id;
    for (const auto& s : e.raw_samples) {
      const auto basis = check_flat_on_basis(*s.algebra, s.q, s.lambda);
      const auto sectioned = check_flat(ConnectionData::from_raw(s.algebra, s.k, s.q, s.lambda));
      EXPECT_EQ(basis.passed, sectioned.passed) << s.id;
      EXPECT_EQ(basis.torsion_zero, sectioned.torsion_zero) << s.id;
      EXPECT_EQ(basis.curvature_zero, sectioned.curvature_zero) << s.id;
    }
  }
}

TEST(FlatOnBasis, CorruptedTranslationPart) {
  // q(Z) = e2 leaves q without a right inverse, so only the basis form applies.
  const auto h = heisenberg_flat();
  Matrix q = Matrix::identity(3);
  q.set_column(2, unit_vector(3, 1));
  const AffineRep bad(h.algebra, h.rep.f_mats(), q);
  EXPECT_EQ(code_of([&] { ConnectionData::from_rep(bad, h.k); }), ErrorCode::NotSurjective);
  const auto r = check_flat_on_basis(*h.algebra, q, bad.f_mats());
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.torsion_zero);
  EXPECT_TRUE(r.curvature_zero);
  ASSERT_TRUE(r.offending_pair);
  EXPECT_EQ(*r.offending_pair, (std::pair<std::size_t, std::size_t>{0, 1}));
}
