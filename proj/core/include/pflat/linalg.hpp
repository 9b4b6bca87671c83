#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pflat/matrix.hpp"
#include "pflat/subspace.hpp"

namespace pflat {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// {v : m v = 0} in canonical form.
Subspace kernel(const Matrix& m);

/// One exact solution of a x = b, or nothing if the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Sylvester inertia of a symmetric matrix.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const Matrix& symmetric);

/// Incrementally grown semi-echelon basis. Each accepted vector is stored
/// reduced against the earlier rows, so membership and coordinates with
/// respect to the inserted vectors come out of a single sweep.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Adds v if it is independent of the current span; returns whether it was.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  /// Coefficients c with v = sum_i c_i * (i-th accepted vector), if v lies in the span.
  std::optional<Vector> express(const Vector& v) const;

  const std::vector<Vector>& accepted() const noexcept { return originals_; }

 private:
  struct Row {
    Vector entries;
    std::size_t pivot;
    Vector combination;  // row = sum combination[i] * originals_[i]
  };

  // Returns the residual of v and, alongside, the combination consumed.
  Vector reduce(const Vector& v, Vector* combination) const;

  std::size_t ambient_;
  std::vector<Row> rows_;
  std::vector<Vector> originals_;
};

/// Smallest subspace containing `seeds` and invariant under every generator.
Subspace spin(const std::vector<Matrix>& generators, const std::vector<Vector>& seeds);

}  // namespace pflat
