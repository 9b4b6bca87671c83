#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "pflat/matrix.hpp"

namespace pflat {

/// Linear subspace of Q^n stored by its unique reduced-echelon basis, so two
/// subspaces are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_full() const noexcept { return basis_.size() == ambient_; }

  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Basis vectors as the rows of a dim x ambient matrix.
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

std::ostream& operator<<(std::ostream& os, const Subspace& s);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& outer, const Subspace& inner);
/// True iff a + b is direct: dim(a + b) = dim a + dim b (equivalently a ∩ b = 0).
bool direct_sum_check(const Subspace& a, const Subspace& b);
/// {x : <u, x> = 0 for every u in s}.
Subspace annihilator(const Subspace& s);
/// Image of a subspace under a linear map.
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace pflat
