#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pflat/matrix.hpp"
#include "pflat/rational.hpp"

namespace pflat {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// x - root
  static Polynomial linear(const Rational& root);
  static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1));

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;
  bool is_monic() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  /// p(M) by Horner's rule.
  Matrix evaluate(const Matrix& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, e.g. "x^2 - 2*x + 1/2".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Quotient and remainder of a / b; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Monic polynomial of least degree annihilating m, found from the first linear
/// dependency among I, m, m^2, ...
Polynomial minimal_polynomial(const Matrix& m);

struct FactorOptions {
  /// Largest |value| whose divisors the trial factorisation may enumerate.
  long coefficient_bound = 1'000'000;
  /// Cap on interpolation candidates tried per residual factor.
  std::size_t max_candidates = 2'000'000;
};

struct Factor {
  Polynomial factor;  // monic, irreducible over Q
  std::size_t multiplicity = 1;
};

/// Complete factorisation into monic irreducibles over Q (squarefree
/// decomposition, rational roots, then Kronecker trial division). Throws
/// Error{FactorizationIncomplete} when a residual cannot be certified within
/// the configured bounds. Output is sorted by degree, then coefficients.
std::vector<Factor> factor_over_rationals(const Polynomial& p, const FactorOptions& options = {});

}  // namespace pflat
