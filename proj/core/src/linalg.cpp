#include "pflat/linalg.hpp"

#include <utility>

#include "pflat/error.hpp"

namespace pflat {

RrefResult rref(const Matrix& m) {
  RrefResult out{m, {}, 0};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(lead, j));
    }
    const Rational inv = a(lead, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(lead, j).is_zero()) a(r, j) -= f * a(lead, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++lead;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivot_columns) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivot_columns[i]] = -r.reduced(i, free);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length does not match rows");
  }
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == a.cols()) {
    return std::nullopt;
  }
  Vector x(a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    x[red.pivot_columns[i]] = red.reduced(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  }
  return inv;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Inertia inertia(const Matrix& symmetric) {
  if (!symmetric.is_square() || symmetric != symmetric.transpose()) {
    throw Error(ErrorCode::PreconditionViolated, "inertia requires a symmetric matrix");
  }
  Matrix a = symmetric;
  std::size_t n = a.rows();
  Inertia out;
  // Congruence diagonalisation on the trailing block [k, n).
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p).is_zero()) ++p;
    if (p == n) {
      // No nonzero diagonal entry left: borrow an off-diagonal one.
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
          if (!a(r, c).is_zero()) { i = r; j = c; break; }
        }
      }
      if (i == n) {
        out.zero += n - k;
        break;
      }
      // row_i += row_j, col_i += col_j makes a(i, i) = 2 a(i, j) != 0.
      for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
      p = i;
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, p), a(r, k));
    }
    const Rational d = a(k, k);
    (d.sign() > 0 ? out.positive : out.negative) += 1;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      const Rational f = a(r, k) / d;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = k; c < n; ++c) a(c, r) = a(r, c);
    }
  }
  return out;
}

Vector EchelonBasis::reduce(const Vector& v, Vector* combination) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "vector does not match echelon ambient dimension");
  }
  Vector r = v;
  if (combination) *combination = Vector(originals_.size());
  for (const Row& row : rows_) {
    if (r[row.pivot].is_zero()) continue;
    const Rational f = r[row.pivot];
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!row.entries[j].is_zero()) r[j] -= f * row.entries[j];
    }
    if (combination) {
      for (std::size_t i = 0; i < row.combination.size(); ++i) {
        if (!row.combination[i].is_zero()) (*combination)[i] += f * row.combination[i];
      }
    }
  }
  return r;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector used;
  Vector r = reduce(v, &used);
  std::size_t pivot = 0;
  while (pivot < ambient_ && r[pivot].is_zero()) ++pivot;
  if (pivot == ambient_) return false;
  const Rational inv = r[pivot].inverse();
  for (auto& x : r) x *= inv;
  // row = (v - sum used_i * orig_i) / pivot value
  Vector combination(originals_.size() + 1);
  for (std::size_t i = 0; i < used.size(); ++i) combination[i] = -used[i] * inv;
  combination.back() = inv;
  for (auto& row : rows_) row.combination.resize(originals_.size() + 1);
  rows_.push_back(Row{std::move(r), pivot, std::move(combination)});
  originals_.push_back(v);
  return true;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v, nullptr)); }

std::optional<Vector> EchelonBasis::express(const Vector& v) const {
  Vector used;
  if (!is_zero(reduce(v, &used))) return std::nullopt;
  return used;
}

Subspace spin(const std::vector<Matrix>& generators, const std::vector<Vector>& seeds) {
  if (seeds.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "spin needs at least one seed");
  }
  const std::size_t n = seeds.front().size();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "spin generator does not act on the seed space");
    }
  }
  EchelonBasis basis(n);
  std::vector<Vector> queue;
  for (const auto& s : seeds) {
    if (basis.insert(s)) queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size() && basis.size() < n; ++head) {
    const Vector v = queue[head];
    for (const auto& g : generators) {
      Vector w = g * v;
      if (basis.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::span(n, basis.accepted());
}

}  // namespace pflat
