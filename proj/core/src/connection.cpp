#include "pflat/connection.hpp"

#include <cmath>
#include <random>

#include "pflat/error.hpp"
#include "pflat/linalg.hpp"

namespace pflat {

namespace {

void check_quotient(const AlgebraPtr& algebra, const Subalgebra& k, const Matrix& q) {
  if (!algebra || !algebra->validated()) {
    throw Error(ErrorCode::NotValidated, "tangent section over an unvalidated algebra");
  }
  if (q.cols() != algebra->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "q must have one column per basis element");
  }
  if (k.parent()->dim() != algebra->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subalgebra lives in a different algebra");
  }
  if (rank(q) != q.rows()) throw Error(ErrorCode::NotSurjective, "q is not surjective");
  if (kernel(q) != k.subspace()) {
    throw Error(ErrorCode::PreconditionViolated, "kernel of q differs from k");
  }
}

Vector q_bracket(const TangentSection& s, const Vector& x, const Vector& y) {
  return s.q_mat() * bracket(*s.algebra(), x, y);
}

void require_tensor_hypotheses(const ConnectionData& conn, const BilinearForm& ric) {
  if (conn.dim_v() < 2) {
    throw Error(ErrorCode::DegenerateDimension, "Weyl and Codazzi checks need dim V >= 2");
  }
  if (!torsion(conn).is_zero()) throw Error(ErrorCode::PreconditionViolated, "torsion is not zero");
  if (!ric.is_symmetric()) throw Error(ErrorCode::PreconditionViolated, "Ricci form is not symmetric");
}

using DMatrix = std::vector<std::vector<double>>;

DMatrix dmul(const DMatrix& a, const DMatrix& b) {
  const std::size_t n = a.size();
  DMatrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0.0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

DMatrix dexp(DMatrix a) {
  const std::size_t n = a.size();
  double norm = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (double v : row) s += std::fabs(v);
    norm = std::max(norm, s);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& row : a)
    for (double& v : row) v *= scale;
  DMatrix result(n, std::vector<double>(n, 0.0)), term(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = term[i][i] = 1.0;
  for (int m = 1; m <= 40; ++m) {
    term = dmul(term, a);
    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        term[i][j] /= m;
        result[i][j] += term[i][j];
        largest = std::max(largest, std::fabs(term[i][j]));
      }
    if (largest < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = dmul(result, result);
  return result;
}

}  // namespace

TangentSection TangentSection::pivot(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q) {
  check_quotient(algebra, k, q);
  const auto pivots = rref(q).pivot_columns;
  std::vector<Vector> cols;
  for (std::size_t p : pivots) cols.push_back(q.column(p));
  const Matrix inv = *inverse(Matrix::from_columns(q.rows(), cols));
  Matrix s(q.cols(), q.rows());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < q.rows(); ++c) s(pivots[i], c) = inv(i, c);
  return TangentSection(std::move(algebra), k, q, std::move(s));
}

TangentSection TangentSection::randomized(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q,
                                          std::uint64_t seed, int range) {
  TangentSection base = pivot(std::move(algebra), k, q);
  const auto& kb = k.subspace().basis();
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * range + 1);
  Matrix s = base.s_;
  for (std::size_t c = 0; c < s.cols(); ++c) {
    Vector col = s.column(c);
    for (const auto& z : kb) {
      const auto coeff = static_cast<long>(rng() % span) - range;
      if (coeff != 0) col = col + Rational(coeff) * z;
    }
    s.set_column(c, col);
  }
  return TangentSection(base.algebra_, base.k_, base.q_, std::move(s));
}

TangentSection TangentSection::from_matrix(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q,
                                           Matrix s) {
  check_quotient(algebra, k, q);
  if (s.rows() != q.cols() || s.cols() != q.rows() || q * s != Matrix::identity(q.rows())) {
    throw Error(ErrorCode::PreconditionViolated, "section is not a right inverse of q");
  }
  return TangentSection(std::move(algebra), k, q, std::move(s));
}

TangentSection tangent_section(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q) {
  return TangentSection::pivot(std::move(algebra), k, q);
}

std::vector<Matrix> isotropy_action(const TangentSection& section) {
  const std::size_t n = section.dim_v();
  std::vector<Matrix> out;
  for (const auto& z : section.k().subspace().basis()) {
    std::vector<Vector> cols;
    for (std::size_t v = 0; v < n; ++v) cols.push_back(q_bracket(section, z, section.lift(v)));
    out.push_back(Matrix::from_columns(n, cols));
  }
  return out;
}

std::vector<Matrix> isotropy_action(const AlgebraPtr& algebra, const Subalgebra& k,
                                    const TangentSection& section) {
  if (algebra.get() != section.algebra().get() || k.subspace() != section.k().subspace()) {
    throw Error(ErrorCode::PreconditionViolated, "section belongs to a different quotient");
  }
  return isotropy_action(section);
}

ConnectionData::ConnectionData(TangentSection section, std::vector<Matrix> lambda, bool rep_induced)
    : section_(std::move(section)), lambda_(std::move(lambda)), rep_induced_(rep_induced) {
  const std::size_t n = section_.dim_v();
  if (lambda_.size() != section_.algebra()->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "one Λ matrix per basis element required");
  }
  for (const auto& m : lambda_) {
    if (m.rows() != n || m.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "Λ matrices must be dim V x dim V");
    }
  }
}

ConnectionData ConnectionData::from_rep(const AffineRep& rep, const Subalgebra& k) {
  ConnectionData c(tangent_section(rep.algebra(), k, rep.q_mat()), rep.f_mats(), true);
  const auto eq = check_equivariance_infinitesimal(c, k);
  if (!eq.passed) {
    throw Error(ErrorCode::PreconditionViolated,
                "f does not descend to the quotient (" + eq.failed_condition + " condition)");
  }
  return c;
}

ConnectionData ConnectionData::from_raw(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q,
                                        std::vector<Matrix> lambda) {
  ConnectionData c = from_raw_unchecked(std::move(algebra), k, q, std::move(lambda));
  const auto eq = check_equivariance_infinitesimal(c, k);
  if (!eq.passed) {
    const std::string z = "k basis vector " + std::to_string(*eq.z_index + 1);
    throw Error(ErrorCode::PreconditionViolated,
                "raw Λ does not define a connection on the quotient: " + eq.failed_condition +
                    " condition fails at " + z);
  }
  return c;
}

ConnectionData ConnectionData::from_raw_unchecked(AlgebraPtr algebra, const Subalgebra& k,
                                                  const Matrix& q, std::vector<Matrix> lambda) {
  return ConnectionData(tangent_section(std::move(algebra), k, q), std::move(lambda), false);
}

ConnectionData ConnectionData::with_section(TangentSection section) const {
  if (section.algebra().get() != algebra().get() || section.q_mat() != section_.q_mat()) {
    throw Error(ErrorCode::PreconditionViolated, "section belongs to a different quotient");
  }
  return ConnectionData(std::move(section), lambda_, rep_induced_);
}

Matrix ConnectionData::lambda_of(const Vector& x) const {
  if (x.size() != lambda_.size()) throw Error(ErrorCode::DimensionMismatch, "algebra vector length");
  return combine(lambda_, x, dim_v(), dim_v());
}

std::string ConnectionData::tangent_label(std::size_t u) const {
  const Vector s = section_.lift(u);
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].is_zero()) continue;
    if (hit || s[i] != Rational(1)) return "v" + std::to_string(u + 1);
    hit = i;
  }
  return hit ? algebra()->basis_labels()[*hit] : "v" + std::to_string(u + 1);
}

bool TorsionTable::is_zero() const {
  for (const auto& v : values)
    if (!pflat::is_zero(v)) return false;
  return true;
}

bool CurvatureTable::is_zero() const {
  for (const auto& m : values)
    if (!m.is_zero()) return false;
  return true;
}

Rational BilinearForm::operator()(const Vector& x, const Vector& y) const { return dot(x, entries * y); }

TorsionTable torsion(const ConnectionData& conn) {
  const std::size_t n = conn.dim_v();
  const auto& sec = conn.section();
  TorsionTable t{n, std::vector<Vector>(n * n, zero_vector(n))};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      const Vector su = sec.lift(u), sw = sec.lift(w);
      Vector v = conn.lambda_of(su) * unit_vector(n, w) - conn.lambda_of(sw) * unit_vector(n, u) -
                 q_bracket(sec, su, sw);
      t.values[w * n + u] = -v;
      t.values[u * n + w] = std::move(v);
    }
  }
  return t;
}

CurvatureTable curvature(const ConnectionData& conn) {
  const std::size_t n = conn.dim_v();
  const auto& sec = conn.section();
  CurvatureTable r{n, std::vector<Matrix>(n * n, Matrix(n, n))};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      const Vector su = sec.lift(u), sw = sec.lift(w);
      Matrix m = commutator(conn.lambda_of(su), conn.lambda_of(sw)) -
                 conn.lambda_of(bracket(*conn.algebra(), su, sw));
      r.values[w * n + u] = -m;
      r.values[u * n + w] = std::move(m);
    }
  }
  return r;
}

BilinearForm ricci(const ConnectionData& conn) {
  const std::size_t n = conn.dim_v();
  const CurvatureTable r = curvature(conn);
  Matrix ric(n, n);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t i = 0; i < n; ++i) ric(w, z) += r.at(i, w)(i, z);
  return BilinearForm{std::move(ric)};
}

FlatReport check_flat(const ConnectionData& conn) {
  FlatReport rep;
  const std::size_t n = conn.dim_v();
  const TorsionTable t = torsion(conn);
  const CurvatureTable r = curvature(conn);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      if (!is_zero(t.at(u, w))) {
        if (rep.torsion_zero) rep.offending_pair = {u, w};
        rep.torsion_zero = false;
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      if (!r.at(u, w).is_zero()) {
        if (rep.torsion_zero && rep.curvature_zero) rep.offending_pair = {u, w};
        rep.curvature_zero = false;
      }
    }
  }
  rep.passed = rep.torsion_zero && rep.curvature_zero;
  return rep;
}

FlatReport check_flat_on_basis(const LieAlgebra& alg, const Matrix& q, const std::vector<Matrix>& lambda) {
  const std::size_t d = alg.dim();
  if (lambda.size() != d || q.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "one Λ matrix and one q column per basis element expected");
  }
  FlatReport rep;
  std::optional<std::pair<std::size_t, std::size_t>> first_curved;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector& b = alg.bracket_basis(i, j);
      if (rep.torsion_zero && !is_zero(lambda[i] * q.column(j) - lambda[j] * q.column(i) - q * b)) {
        rep.torsion_zero = false;
        rep.offending_pair = {i, j};
      }
      if (rep.curvature_zero && !(commutator(lambda[i], lambda[j]) - combine(lambda, b, q.rows(), q.rows())).is_zero()) {
        rep.curvature_zero = false;
        first_curved = {i, j};
      }
    }
  }
  if (rep.torsion_zero) rep.offending_pair = first_curved;
  rep.passed = rep.torsion_zero && rep.curvature_zero;
  return rep;
}

TripleReport check_weyl(const ConnectionData& conn) {
  const BilinearForm ric = ricci(conn);
  require_tensor_hypotheses(conn, ric);
  const std::size_t n = conn.dim_v();
  const CurvatureTable r = curvature(conn);
  const Rational inv(1, static_cast<long>(n - 1));
  TripleReport rep;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = 0; w < n; ++w) {
      for (std::size_t z = 0; z < n; ++z) {
        Vector res = r.at(u, w) * unit_vector(n, z);
        res[u] -= inv * ric.entries(w, z);
        res[w] += inv * ric.entries(u, z);
        if (!is_zero(res)) {
          rep.passed = false;
          rep.x = u;
          rep.y = w;
          rep.z = z;
          rep.residual = std::move(res);
          return rep;
        }
      }
    }
  }
  return rep;
}

TripleReport check_codazzi(const ConnectionData& conn) {
  const BilinearForm ric = ricci(conn);
  require_tensor_hypotheses(conn, ric);
  const std::size_t n = conn.dim_v();
  std::vector<Matrix> lam;
  for (std::size_t x = 0; x < n; ++x) lam.push_back(conn.lambda_of(conn.section().lift(x)));
  // dric[x](y, z) = -Ric(Λ(s x) y, z) - Ric(y, Λ(s x) z)
  std::vector<Matrix> dric;
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& l = lam[x];
    dric.push_back(-(l.transpose() * ric.entries + ric.entries * l));
  }
  TripleReport rep;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const Rational d = dric[x](y, z) - dric[y](x, z);
        if (!d.is_zero()) {
          rep.passed = false;
          rep.x = x;
          rep.y = y;
          rep.z = z;
          rep.residual = Vector{d};
          return rep;
        }
      }
    }
  }
  return rep;
}

EquivarianceReport check_equivariance_infinitesimal(const ConnectionData& conn, const Subalgebra& k) {
  EquivarianceReport rep;
  const auto lambda_k = isotropy_action(conn.algebra(), k, conn.section());
  const auto& kb = k.subspace().basis();
  const std::size_t d = conn.algebra()->dim();
  for (std::size_t zi = 0; zi < kb.size(); ++zi) {
    if (conn.lambda_of(kb[zi]) != lambda_k[zi]) {
      rep.passed = false;
      rep.failed_condition = "restriction";
      rep.z_index = zi;
      return rep;
    }
  }
  for (std::size_t zi = 0; zi < kb.size(); ++zi) {
    for (std::size_t x = 0; x < d; ++x) {
      const Vector ex = unit_vector(d, x);
      if (conn.lambda_of(bracket(*conn.algebra(), kb[zi], ex)) !=
          commutator(lambda_k[zi], conn.lambda_of(ex))) {
        rep.passed = false;
        rep.failed_condition = "bracket";
        rep.z_index = zi;
        rep.x_index = x;
        return rep;
      }
    }
  }
  return rep;
}

std::vector<OrbitPoint> centro_affine_orbit(const AffineRep& rep, const Vector& v0,
                                            const Vector& direction, const std::vector<double>& t_values) {
  const std::size_t n = rep.dim_v();
  if (v0.size() != n) throw Error(ErrorCode::DimensionMismatch, "v0 length differs from dim V");
  const Matrix a = rep.f_of(direction);
  std::vector<double> x0(n);
  for (std::size_t i = 0; i < n; ++i) x0[i] = v0[i].to_double();
  std::vector<OrbitPoint> out;
  for (double t : t_values) {
    DMatrix m(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = t * a(i, j).to_double();
    const DMatrix e = dexp(std::move(m));
    OrbitPoint p{t, std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.x[i] += e[i][j] * x0[j];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace pflat
