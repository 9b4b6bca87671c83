#include "pflat/catalog.hpp"

#include <regex>

#include "pflat/error.hpp"
#include "pflat/linalg.hpp"

namespace pflat {

namespace {

constexpr Verdict P = Verdict::Pass;
constexpr Verdict F = Verdict::Fail;

const std::vector<std::string> kConnectionChecks{"jacobi",  "subalgebra", "affine_rep",  "membership",
                                                 "flat",    "weyl",       "codazzi",     "equivariance"};

std::map<std::string, Verdict> all_pass(const std::vector<std::string>& checks) {
  std::map<std::string, Verdict> m;
  for (const auto& c : checks) m[c] = P;
  return m;
}

Matrix diag_block(std::initializer_list<std::initializer_list<Rational>> rows) { return Matrix(rows); }

AlgebraPtr su2_algebra() {
  return make_validated(LieAlgebra("su2", {"H", "A", "B"},
                                   {{{0, 1}, {{2, Rational(2)}}},
                                    {{0, 2}, {{1, Rational(-2)}}},
                                    {{1, 2}, {{0, Rational(2)}}}}));
}

AlgebraPtr heisenberg_algebra() {
  return make_validated(LieAlgebra("heisenberg", {"X", "Y", "Z"}, {{{0, 1}, {{2, Rational(1)}}}}));
}

std::vector<Matrix> su2_ad() {
  // Columns are the brackets [e_i, e_j] in the basis H, A, B.
  const auto alg = su2_algebra();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < 3; ++j) cols.push_back(alg->bracket_basis(i, j));
    out.push_back(Matrix::from_columns(3, cols));
  }
  return out;
}

std::vector<RawLambdaSample> su2_samples() {
  const auto alg = su2_algebra();
  const Subalgebra k = Subalgebra::zero(alg);
  const Matrix q = Matrix::identity(3);
  std::vector<RawLambdaSample> out;
  const std::map<std::string, Verdict> not_flat{{"flat", F}};
  out.push_back({"su2_zero", "Λ = 0 on su(2)", alg, k, q, std::vector<Matrix>(3, Matrix(3, 3)), not_flat});
  out.push_back({"su2_ad", "Λ = ad on su(2)", alg, k, q, su2_ad(), not_flat});
  std::vector<Matrix> half;
  for (const auto& m : su2_ad()) half.push_back(Rational(1, 2) * m);
  out.push_back({"su2_half_ad", "Λ = ad/2 on su(2): torsion-free, Ricci = 2I", alg, k, q, half,
                 {{"flat", F}, {"weyl", P}, {"codazzi", P}}});
  return out;
}

}  // namespace

CatalogEntry gl_column_block(std::size_t n, std::size_t r) {
  if (n < 2 || r < 1 || r >= n) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "column block needs n >= 2 and 1 <= r <= n - 1 (got n=" + std::to_string(n) +
                    ", r=" + std::to_string(r) + ")");
  }
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == n - 1 && b == n - 1) {
        basis.push_back(Matrix::identity(n));
        labels.push_back("I");
      } else {
        basis.push_back(Matrix::unit(n, a, b));
        labels.push_back("E" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
      }
    }
  }
  const std::string name = "gl" + std::to_string(n);
  const auto alg = make_validated(LieAlgebra::from_matrices(name, labels, basis));
  const std::size_t d = n * n;

  EchelonBasis coords(d);
  for (const auto& m : basis) coords.insert(m.entries());
  const auto to_coords = [&](const Matrix& m) { return *coords.express(m.entries()); };

  std::vector<Vector> k_vectors;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = r; b < n; ++b) k_vectors.push_back(to_coords(Matrix::unit(n, a, b)));
  const Subalgebra k(alg, Subspace::span(d, k_vectors));

  // V = matrices supported on the first r columns, coordinates (a, b) -> a * r + b.
  const std::size_t dim_v = n * r;
  std::vector<Matrix> f;
  Matrix q(dim_v, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& x = basis[i];
    Matrix fx(dim_v, dim_v);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t col = 0; col < r; ++col) fx(a * r + col, c * r + col) = x(a, c);
    f.push_back(std::move(fx));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t col = 0; col < r; ++col) q(a * r + col, i) = x(a, col);
  }
  AffineRep rep = validate(AffineRep(alg, std::move(f), std::move(q), d - 1));

  auto expected = all_pass(kConnectionChecks);
  expected["irreducible"] = r == 1 ? P : F;
  expected["pf"] = P;
  expected["class_ii"] = F;
  expected["classify"] = r == 1 ? P : F;
  expected["theorem_3_3"] = P;
  return CatalogEntry{"example_3_1:" + std::to_string(n) + ":" + std::to_string(r),
                      "gl(" + std::to_string(n) + ",R) acting by left multiplication on the first " +
                          std::to_string(r) + " column(s); k is the complementary column block",
                      alg,
                      k,
                      std::move(rep),
                      dim_v - 1,
                      std::move(expected),
                      r == 1 ? "CaseA" : "NotIrreducible",
                      std::nullopt,
                      {}};
}

CatalogEntry heisenberg_flat() {
  const auto alg = heisenberg_algebra();
  const Subalgebra k = Subalgebra::zero(alg);
  AffineRep rep = validate(AffineRep(alg, {Matrix::unit(3, 2, 1), Matrix(3, 3), Matrix(3, 3)},
                                     Matrix::identity(3)));
  auto expected = all_pass(kConnectionChecks);
  expected["irreducible"] = F;

  std::vector<RawLambdaSample> raw;
  raw.push_back({"heisenberg_zero", "Λ = 0 on the Heisenberg algebra: torsion T(e1,e2) = -e3", alg, k,
                 Matrix::identity(3), std::vector<Matrix>(3, Matrix(3, 3)), {{"flat", F}}});
  raw.push_back({"heisenberg_curved",
                 "Λ(X) = E32, Λ(Y) = E13, Λ(Z) = 0 on the Heisenberg algebra: R(e1,e2) = -E12", alg, k,
                 Matrix::identity(3),
                 {Matrix::unit(3, 2, 1), Matrix::unit(3, 0, 2), Matrix(3, 3)},
                 {{"flat", F}}});
  return CatalogEntry{"heisenberg_flat",
                      "left invariant flat structure on the three-dimensional Heisenberg group",
                      alg,
                      k,
                      std::move(rep),
                      std::nullopt,
                      std::move(expected),
                      std::nullopt,
                      std::nullopt,
                      std::move(raw)};
}

CatalogEntry su2_quaternionic() {
  const auto ext = central_extension(*su2_algebra());
  const auto alg = std::make_shared<const LieAlgebra>(ext.extended);
  const Subalgebra k = Subalgebra::zero(alg);
  // Coordinates (Re z, Im z, Re w, Im w) on C^2.
  const Matrix fh = diag_block({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  const Matrix fa = diag_block({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
  const Matrix fb = diag_block({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}});
  const Matrix q = Matrix::from_columns(
      4, {unit_vector(4, 1), -unit_vector(4, 2), unit_vector(4, 3), unit_vector(4, 0)});
  AffineRep rep = validate(AffineRep(alg, {fh, fa, fb, Matrix::identity(4)}, q, ext.e_index));
  // v -> [[0,-1],[1,0]] conj(v)
  const Matrix j = diag_block({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});

  std::map<std::string, Verdict> expected = all_pass(kConnectionChecks);
  for (const char* c : {"irreducible", "pf", "class_ii", "classify", "theorem_3_3"}) expected[c] = P;
  return CatalogEntry{"remark_3_5_2",
                      "su(2) ⊕ RE on C^2 viewed as R^4, E acting as the identity; carries the complex "
                      "structure v -> [[0,-1],[1,0]] conj(v)",
                      alg,
                      k,
                      std::move(rep),
                      3,
                      std::move(expected),
                      "CaseA",
                      ScaledComplexStructure{j, Rational(0), Rational(1)},
                      su2_samples()};
}

CatalogEntry rotation_dilation() {
  const auto alg = make_validated(LieAlgebra::abelian("rotation_dilation", {"F", "E"}));
  const Subalgebra k = Subalgebra::zero(alg);
  const Matrix j0{{0, -1}, {1, 0}};
  AffineRep rep = validate(AffineRep(alg, {Matrix::identity(2), j0}, Matrix::identity(2), 1));
  std::map<std::string, Verdict> expected = all_pass(kConnectionChecks);
  expected["irreducible"] = P;
  expected["pf"] = F;
  expected["class_ii"] = P;
  expected["classify"] = P;
  expected["theorem_3_3"] = P;
  return CatalogEntry{"rotation_dilation",
                      "abelian span{F, E} on R^2: F dilates, E rotates by a right angle",
                      alg,
                      k,
                      std::move(rep),
                      1,
                      std::move(expected),
                      "CaseB",
                      ScaledComplexStructure{j0, Rational(0), Rational(1)},
                      {}};
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t r = 1; r < n; ++r) ids.push_back("example_3_1:" + std::to_string(n) + ":" + std::to_string(r));
  ids.push_back("heisenberg_flat");
  ids.push_back("remark_3_5_2");
  ids.push_back("rotation_dilation");
  return ids;
}

CatalogEntry catalog_entry(const std::string& id) {
  if (id == "heisenberg_flat") return heisenberg_flat();
  if (id == "remark_3_5_2") return su2_quaternionic();
  if (id == "rotation_dilation") return rotation_dilation();
  static const std::regex pattern(R"(example_3_1:([0-9]{1,3}):([0-9]{1,3}))");
  if (std::smatch m; std::regex_match(id, m, pattern)) {
    return gl_column_block(std::stoul(m[1].str()), std::stoul(m[2].str()));
  }
  throw Error(ErrorCode::UnknownId, "unknown catalog id '" + id + "'");
}

const std::vector<ClassificationTable>& classification_tables() {
  static const std::vector<ClassificationTable> tables{
      {"semisimple_projectively_flat",
       "real semisimple Lie algebras whose groups admit a left invariant projectively flat connection",
       {{"sl(n+1,R)", "n >= 1", ""},
        {"su*(2n)", "n >= 1",
         "{ [[Z1, Z2], [-conj(Z2), conj(Z1)]] : Z1, Z2 in M(n,C), Tr Z1 + Tr conj(Z1) = 0 }"}}},
      {"symmetric_projectively_flat",
       "irreducible simply connected Riemannian symmetric spaces admitting an invariant projectively "
       "flat connection",
       {{"S^n = SO(n+1)/SO(n)", "n >= 2", ""},
        {"SL(n+1,R)/SO(n+1)", "n >= 2", ""},
        {"SU*(2n)/Sp(n)", "n >= 3", ""},
        {"SO_0(n,1)/SO(n)", "n >= 2", ""},
        {"SL(n+1,C)/SU(n+1)", "n >= 1", ""},
        {"E6/F4", "", "non-compact type EIV"}}},
  };
  return tables;
}

}  // namespace pflat
