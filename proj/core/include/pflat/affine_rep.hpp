#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pflat/lie_algebra.hpp"
#include "pflat/polynomial.hpp"

namespace pflat {

/// Affine representation (f, q, V) of a Lie algebra: f(e_i) is a linear map of
/// V = Q^dim_v and column i of q is the translation part q(e_i).
class AffineRep {
 public:
  AffineRep(AlgebraPtr algebra, std::vector<Matrix> f, Matrix q,
            std::optional<std::size_t> e_index = std::nullopt);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t dim_v() const noexcept { return q_.rows(); }
  std::size_t dim() const noexcept { return f_.size(); }
  const std::vector<Matrix>& f_mats() const noexcept { return f_; }
  const Matrix& f(std::size_t i) const { return f_.at(i); }
  const Matrix& q_mat() const noexcept { return q_; }
  Vector q(std::size_t i) const { return q_.column(i); }
  std::optional<std::size_t> e_index() const noexcept { return e_index_; }

  /// f and q extended linearly to algebra coordinates.
  Matrix f_of(const Vector& x) const;
  Vector q_of(const Vector& x) const;

  bool validated() const noexcept { return validated_; }

 private:
  friend AffineRep validate(AffineRep rep);

  AlgebraPtr algebra_;
  std::vector<Matrix> f_;
  Matrix q_;
  std::optional<std::size_t> e_index_;
  bool validated_ = false;
};

struct AffineRepReport {
  bool passed = true;
  /// "homomorphism" for [f(X), f(Y)] = f([X,Y]), "cocycle" for the q law.
  std::string failed_law;
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
  Matrix f_residual;  // [f(X), f(Y)] - f([X,Y])
  Vector q_residual;  // q([X,Y]) - f(X)q(Y) + f(Y)q(X)
};

AffineRepReport check_affine_rep(const AffineRep& rep);

/// Marks the representation validated; throws Error{NotValidated} naming the
/// first failing pair.
AffineRep validate(AffineRep rep);

struct RescaledRep {
  AffineRep rep;
  Subalgebra k;
};

/// Same representation and subalgebra in the basis where E is replaced by c*E.
RescaledRep rescale_central(const AffineRep& rep, const Subalgebra& k, const Rational& c);

struct MembershipReport {
  bool passed = false;
  bool surjective = false;
  bool kernel_matches = false;
  bool dimension_matches = false;
  std::size_t rank = 0;
  Subspace kernel;
};

/// dim V = dim algebra - dim k, q surjective and ker q = k.
MembershipReport check_f_membership(const AffineRep& rep, const Subalgebra& k);

/// Basis of the unital associative algebra generated by the f matrices.
std::vector<Matrix> envelope(const AffineRep& rep);
/// Basis of {C : C f(X) = f(X) C for all X}.
std::vector<Matrix> commutant(const AffineRep& rep);

/// Real division algebra type of an endomorphism ring, or Split when it is
/// not a division algebra after extending scalars to the reals.
enum class RealType { Real, Complex, Quaternion, Split };
std::string_view to_string(RealType t);

enum class Irreducibility { Irreducible, Reducible, Undetermined };
std::string_view to_string(Irreducibility s);

struct IrreducibilityOptions {
  std::size_t budget = 64;
  FactorOptions factor;
  /// Decide from the trace radical and commutant when the element sweep
  /// yields neither certificate nor witness.
  bool structural_fallback = true;
};

struct IrreducibilityVerdict {
  Irreducibility status = Irreducibility::Undetermined;
  /// Proper invariant subspace over the rationals, when one was found.
  std::optional<Subspace> witness;
  std::string certificate;
  std::size_t elements_tried = 0;
  std::size_t commutant_dim = 0;
  std::optional<RealType> real_type;
};

/// Irreducibility over the reals.
IrreducibilityVerdict is_irreducible(const AffineRep& rep, const IrreducibilityOptions& options = {});

/// True iff 0 < dim W < dim V and f(X) W ⊆ W for every basis X.
bool is_invariant_proper(const AffineRep& rep, const Subspace& w);

/// J = K / b with K^2 = -b^2 I, b^2 > 0 rational.
struct ScaledComplexStructure {
  Matrix k_mat;
  Rational a;
  Rational b_squared;
};

/// Checks K^2 = -b^2 I, b^2 > 0 and K f(X) = f(X) K for every X.
bool verify_complex_structure(const AffineRep& rep, const ScaledComplexStructure& s);

std::optional<ScaledComplexStructure> find_scaled_complex_structure(const AffineRep& rep);

struct PfReport {
  bool passed = false;
  MembershipReport membership;
  std::optional<Rational> c;  // f(E) = c I
  bool q_e_nonzero = false;
};

PfReport is_pf(const AffineRep& rep, const Subalgebra& k);

/// span{f(X) v : X basis element other than E}.
Subspace orbit_tangent(const AffineRep& rep, const Vector& v);
/// f(k) v = 0 and V = f(g) v ⊕ R f(E) v.
bool is_cyclic_vector(const AffineRep& rep, const Subalgebra& k, const Vector& v);

std::optional<Vector> find_v0(const AffineRep& rep, const Subalgebra& k);

enum class Verdict { Pass, Fail, Undetermined };
std::string_view to_string(Verdict v);

struct ClassIIReport {
  Verdict verdict = Verdict::Fail;
  IrreducibilityVerdict irreducibility;
  bool dimension_matches = false;
  std::optional<ScaledComplexStructure> structure;
  std::optional<Vector> v0;
};

ClassIIReport is_class_ii(const AffineRep& rep, const Subalgebra& k, std::size_t dim_m,
                          const IrreducibilityOptions& options = {});

}  // namespace pflat
