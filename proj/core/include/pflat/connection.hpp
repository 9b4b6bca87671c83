#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pflat/affine_rep.hpp"

namespace pflat {

/// Right inverse s of q: q s = I, identifying V with a complement of k.
class TangentSection {
 public:
  /// s[pivots, :] = inverse of the pivot columns of q. Throws NotSurjective when
  /// q has rank < dim V and PreconditionViolated when ker q differs from k.
  static TangentSection pivot(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q);
  /// Pivot section plus K R with K a basis of k and R drawn from a fixed-seed
  /// generator with entries in [-range, range].
  static TangentSection randomized(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q,
                                   std::uint64_t seed, int range = 3);
  /// Throws PreconditionViolated unless q s = I.
  static TangentSection from_matrix(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q, Matrix s);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Subalgebra& k() const noexcept { return k_; }
  const Matrix& q_mat() const noexcept { return q_; }
  const Matrix& s_mat() const noexcept { return s_; }
  std::size_t dim_v() const noexcept { return q_.rows(); }
  Vector lift(std::size_t u) const { return s_.column(u); }

 private:
  TangentSection(AlgebraPtr algebra, Subalgebra k, Matrix q, Matrix s)
      : algebra_(std::move(algebra)), k_(std::move(k)), q_(std::move(q)), s_(std::move(s)) {}

  AlgebraPtr algebra_;
  Subalgebra k_;
  Matrix q_;
  Matrix s_;
};

TangentSection tangent_section(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q);

/// λ(Z) v = q([Z, s v]) for each basis vector Z of k.
std::vector<Matrix> isotropy_action(const TangentSection& section);
std::vector<Matrix> isotropy_action(const AlgebraPtr& algebra, const Subalgebra& k,
                                    const TangentSection& section);

/// Origin data Λ(e_i) of an invariant connection on G/K, with a tangent section.
class ConnectionData {
 public:
  /// Λ = f. The representation need not be validated.
  static ConnectionData from_rep(const AffineRep& rep, const Subalgebra& k);
  /// Rejects (PreconditionViolated) a Λ that does not descend to the quotient.
  static ConnectionData from_raw(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q,
                                 std::vector<Matrix> lambda);
  /// As from_raw without the descent check.
  static ConnectionData from_raw_unchecked(AlgebraPtr algebra, const Subalgebra& k, const Matrix& q,
                                           std::vector<Matrix> lambda);

  ConnectionData with_section(TangentSection section) const;

  const TangentSection& section() const noexcept { return section_; }
  const AlgebraPtr& algebra() const noexcept { return section_.algebra(); }
  std::size_t dim_v() const noexcept { return section_.dim_v(); }
  const std::vector<Matrix>& lambda() const noexcept { return lambda_; }
  Matrix lambda_of(const Vector& x) const;
  bool rep_induced() const noexcept { return rep_induced_; }

  /// Label of the tangent basis vector u: the algebra label when s(e_u) is a
  /// basis element, otherwise "v<u+1>".
  std::string tangent_label(std::size_t u) const;

 private:
  ConnectionData(TangentSection section, std::vector<Matrix> lambda, bool rep_induced);

  TangentSection section_;
  std::vector<Matrix> lambda_;
  bool rep_induced_;
};

/// T(u, w) for tangent basis vectors u, w.
struct TorsionTable {
  std::size_t dim = 0;
  std::vector<Vector> values;  // index u * dim + w
  const Vector& at(std::size_t u, std::size_t w) const { return values[u * dim + w]; }
  bool is_zero() const;
  friend bool operator==(const TorsionTable&, const TorsionTable&) = default;
};

struct CurvatureTable {
  std::size_t dim = 0;
  std::vector<Matrix> values;
  const Matrix& at(std::size_t u, std::size_t w) const { return values[u * dim + w]; }
  bool is_zero() const;
  friend bool operator==(const CurvatureTable&, const CurvatureTable&) = default;
};

struct BilinearForm {
  Matrix entries;
  Rational operator()(const Vector& x, const Vector& y) const;
  bool is_symmetric() const { return entries == entries.transpose(); }
  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

/// T(u,w) = Λ(s u) w - Λ(s w) u - q([s u, s w]).
TorsionTable torsion(const ConnectionData& conn);
/// R(u,w) = [Λ(s u), Λ(s w)] - Λ([s u, s w]).
CurvatureTable curvature(const ConnectionData& conn);
/// Ric(w, z) = trace of u -> R(u, w) z.
BilinearForm ricci(const ConnectionData& conn);

struct FlatReport {
  bool passed = true;
  bool torsion_zero = true;
  bool curvature_zero = true;
  /// First tangent pair with nonzero torsion, else with nonzero curvature.
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
};

FlatReport check_flat(const ConnectionData& conn);

/// Torsion Λ(X) q(Y) - Λ(Y) q(X) - q([X,Y]) and curvature [Λ(X), Λ(Y)] - Λ([X,Y])
/// on algebra basis pairs, with no tangent section. Usable when q is not onto V;
/// offending_pair holds algebra basis indices.
FlatReport check_flat_on_basis(const LieAlgebra& alg, const Matrix& q, const std::vector<Matrix>& lambda);

struct TripleReport {
  bool passed = true;
  std::optional<std::size_t> x, y, z;
  Vector residual;
};

/// R(u,w)z = (Ric(w,z) u - Ric(u,z) w) / (n - 1). Requires zero torsion and
/// symmetric Ricci (PreconditionViolated) and dim V >= 2 (DegenerateDimension).
TripleReport check_weyl(const ConnectionData& conn);

/// With (D_x Ric)(y, z) = -Ric(Λ(s x) y, z) - Ric(y, Λ(s x) z) at the origin,
/// checks (D_x Ric)(y, z) = (D_y Ric)(x, z). Same preconditions as check_weyl.
TripleReport check_codazzi(const ConnectionData& conn);

struct EquivarianceReport {
  bool passed = true;
  /// "restriction" for Λ(Z) != λ(Z), "bracket" for Λ([Z,X]) != [λ(Z), Λ(X)].
  std::string failed_condition;
  std::optional<std::size_t> z_index;  // index into the basis of k
  std::optional<std::size_t> x_index;  // algebra basis index
};

EquivarianceReport check_equivariance_infinitesimal(const ConnectionData& conn, const Subalgebra& k);

struct OrbitPoint {
  double t = 0.0;
  std::vector<double> x;
};

/// exp(t f(direction)) v0 in double precision by scaling and squaring.
/// Approximate; never used for a verdict.
std::vector<OrbitPoint> centro_affine_orbit(const AffineRep& rep, const Vector& v0,
                                            const Vector& direction, const std::vector<double>& t_values);

}  // namespace pflat
