#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pflat/rational.hpp"

namespace pflat {

/// Dense column vector over the rationals.
using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Rational dot(const Vector& a, const Vector& b);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& s);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  /// Elementary matrix with a single 1 at (r, c).
  static Matrix unit(std::size_t n, std::size_t r, std::size_t c);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const noexcept { return entries_; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  /// The scalar s when this matrix equals s*I, otherwise nothing.
  std::optional<Rational> scalar_value() const;
  Matrix transpose() const;
  Rational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend Matrix operator-(Matrix m) { return m *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Linear combination sum_i coeffs[i] * mats[i]; all matrices share a shape.
Matrix combine(const std::vector<Matrix>& mats, const Vector& coeffs,
               std::size_t rows, std::size_t cols);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace pflat
