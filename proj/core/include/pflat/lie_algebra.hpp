#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pflat/matrix.hpp"
#include "pflat/subspace.hpp"

namespace pflat {

/// Sparse coordinate vector: basis index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

/// Finite-dimensional real Lie algebra given by rational structure constants
/// [e_i, e_j] for i < j. The (j, i) brackets follow from antisymmetry and are
/// never stored.
class LieAlgebra {
 public:
  using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             StructureConstants brackets);

  /// Structure constants of the span of `matrices` under the commutator.
  /// Throws PreconditionViolated if the span is not closed or the matrices
  /// are linearly dependent.
  static LieAlgebra from_matrices(std::string name, std::vector<std::string> labels,
                                  const std::vector<Matrix>& matrices);
  static LieAlgebra abelian(std::string name, std::vector<std::string> labels);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const StructureConstants& structure_constants() const noexcept { return brackets_; }

  /// Dense coordinates of [e_i, e_j] for any i, j.
  const Vector& bracket_basis(std::size_t i, std::size_t j) const;

  /// Set only by validate(); downstream constructors refuse unvalidated algebras.
  bool validated() const noexcept { return validated_; }

 private:
  friend LieAlgebra validate(LieAlgebra algebra);

  std::string name_;
  std::vector<std::string> labels_;
  StructureConstants brackets_;
  std::vector<Vector> dense_;  // dense_[i * dim + j]
  bool validated_ = false;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y);

struct JacobiViolation {
  std::size_t i, j, k;
  Vector residual;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct JacobiReport {
  bool passed = true;
  std::vector<JacobiViolation> violations;
};

JacobiReport check_jacobi(const LieAlgebra& alg);

/// Runs check_jacobi and returns the algebra marked validated; throws
/// Error{NotValidated} naming the first failing triple otherwise.
LieAlgebra validate(LieAlgebra algebra);
AlgebraPtr make_validated(LieAlgebra algebra);

struct SubalgebraReport {
  bool passed = true;
  /// First basis pair of the subspace whose bracket escapes it.
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
  Vector escaped_bracket;
};

SubalgebraReport check_subalgebra(const LieAlgebra& alg, const Subspace& s);

/// Subspace of a validated algebra closed under the bracket.
class Subalgebra {
 public:
  /// Throws NotValidated for an unvalidated parent and PreconditionViolated
  /// when `basis` is not closed under the bracket.
  Subalgebra(AlgebraPtr parent, Subspace basis);
  static Subalgebra zero(AlgebraPtr parent);

  const AlgebraPtr& parent() const noexcept { return parent_; }
  const Subspace& subspace() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.dim(); }

 private:
  AlgebraPtr parent_;
  Subspace basis_;
};

struct CentralExtension {
  LieAlgebra base;
  LieAlgebra extended;
  std::size_t e_index;
};

/// g ⊕ RE with E central, E appended as the last basis element.
CentralExtension central_extension(const LieAlgebra& base, std::string e_label = "E");

bool is_central(const LieAlgebra& alg, const Vector& v);

/// Same algebra in the basis where e_index is replaced by c * e_index.
/// Coordinates transform by dividing entry `index` by c.
LieAlgebra rescale_basis_element(const LieAlgebra& alg, std::size_t index, const Rational& c);

}  // namespace pflat
