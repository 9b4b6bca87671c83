#include "pflat/subspace.hpp"

#include "pflat/error.hpp"
#include "pflat/linalg.hpp"

namespace pflat {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const Matrix m = Matrix::from_rows(ambient_dim, vectors);
  const RrefResult r = rref(m);
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
  s.pivots_ = r.pivot_columns;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, units);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(ambient_, basis_); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "vector does not match subspace ambient dimension");
  }
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_[i][j].is_zero()) r[j] -= f * basis_[i][j];
    }
  }
  return pflat::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (const auto& v : other.basis()) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace annihilator(const Subspace& s) {
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel(s.basis_matrix());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  // a ∩ b = (a^⊥ + b^⊥)^⊥ for the standard pairing.
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  return outer.contains(inner);
}

bool direct_sum_check(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return subspace_sum(a, b).dim() == a.dim() + b.dim() &&
         subspace_intersect(a, b).is_zero();
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map does not act on the subspace");
  }
  std::vector<Vector> images;
  for (const auto& v : s.basis()) images.push_back(m * v);
  return Subspace::span(m.rows(), images);
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  os << "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    os << (i ? ", (" : "(");
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) os << (j ? ", " : "") << s.basis()[i][j];
    os << ")";
  }
  return os << "} in Q^" << s.ambient_dim();
}

}  // namespace pflat
