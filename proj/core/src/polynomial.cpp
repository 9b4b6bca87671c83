#include "pflat/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "pflat/error.hpp"
#include "pflat/linalg.hpp"

namespace pflat {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> cs(degree + 1);
  cs[degree] = c;
  return Polynomial(std::move(cs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::PreconditionViolated, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = leading().inverse();
  return inv * *this;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  }
  return Polynomial(std::move(d));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "polynomial of a non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m + Matrix::scalar(m.rows(), *it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::PreconditionViolated, "polynomial division by zero");
  Polynomial rem = a;
  if (rem.degree() < b.degree()) return {Polynomial{}, rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - b.degree() + 1));
  const Rational lead_inv = b.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Rational f = rem.leading() * lead_inv;
    quot[shift] = f;
    rem -= Polynomial::monomial(shift, f) * b;
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  EchelonBasis powers(n * n);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (auto coords = powers.express(power.entries())) {
      std::vector<Rational> cs(k + 1);
      for (std::size_t i = 0; i < k; ++i) cs[i] = -(*coords)[i];
      cs[k] = 1;
      return Polynomial(std::move(cs));
    }
    powers.insert(power.entries());
    power = power * m;
  }
  // Cayley-Hamilton guarantees a dependency by degree n.
  throw Error(ErrorCode::PreconditionViolated, "minimal polynomial search exceeded matrix size");
}

namespace {

[[noreturn]] void incomplete(const std::string& why) {
  throw Error(ErrorCode::FactorizationIncomplete, why);
}

// Squarefree decomposition (Yun): returns (part, multiplicity) pairs.
std::vector<std::pair<Polynomial, std::size_t>> squarefree_parts(const Polynomial& f) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  const Polynomial fp = f.derivative();
  const Polynomial a0 = gcd(f, fp);
  Polynomial b = divmod(f, a0).first;
  Polynomial c = divmod(fp, a0).first;
  Polynomial d = c - b.derivative();
  std::size_t i = 1;
  while (b.degree() > 0) {
    Polynomial a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// Integer coefficients of a primitive multiple of p.
std::vector<mpz_class> primitive_integer(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  }
  std::vector<mpz_class> z;
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.numerator() * (l / c.denominator());
    z.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (content != 0) {
    for (auto& v : z) v /= content;
  }
  return z;
}

Polynomial from_integer(const std::vector<mpz_class>& z) {
  std::vector<Rational> cs;
  cs.reserve(z.size());
  for (const auto& v : z) cs.emplace_back(v);
  return Polynomial(std::move(cs));
}

std::vector<mpz_class> positive_divisors(const mpz_class& value, const FactorOptions& opt) {
  const mpz_class n = abs(value);
  if (n > opt.coefficient_bound) {
    incomplete("value " + n.get_str() + " exceeds coefficient bound " +
               std::to_string(opt.coefficient_bound));
  }
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Rational> rational_roots(const Polynomial& p, const FactorOptions& opt) {
  const auto z = primitive_integer(p);
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 >= z.size()) return roots;
  const auto ps = positive_divisors(z[low], opt);
  const auto qs = positive_divisors(z.back(), opt);
  for (const auto& num : ps) {
    for (const auto& den : qs) {
      for (int s : {1, -1}) {
        Rational cand(mpq_class(s * num, den));
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (p.evaluate(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  return roots;
}

// Evaluation nodes 0, 1, -1, 2, -2, ...
long node(std::size_t j) {
  if (j == 0) return 0;
  const long k = static_cast<long>((j + 1) / 2);
  return (j % 2 == 1) ? k : -k;
}

// Newton interpolation through (x_j, y_j); returns coefficients lowest first.
Polynomial interpolate(const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> dd;
  dd.reserve(m);
  for (const auto& y : ys) dd.emplace_back(y);
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  Polynomial p = Polynomial::constant(dd[m - 1]);
  for (std::size_t i = m - 1; i-- > 0;) {
    p = p * Polynomial::linear(Rational(xs[i])) + Polynomial::constant(dd[i]);
  }
  return p;
}

bool integral(const Polynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Rational& c) { return c.is_integer(); });
}

// Splits a squarefree primitive polynomial without rational roots into
// irreducible factors by Kronecker's method.
void kronecker_split(const Polynomial& p, const FactorOptions& opt, std::vector<Polynomial>& out) {
  const int n = p.degree();
  if (n <= 3) {
    out.push_back(p.monic());
    return;
  }
  const auto z = primitive_integer(p);
  const Polynomial pz = from_integer(z);
  for (int d = 2; d <= n / 2; ++d) {
    const auto points = static_cast<std::size_t>(d + 1);
    std::vector<long> xs(points);
    std::vector<std::vector<mpz_class>> choices(points);
    std::size_t total = 1;
    for (std::size_t j = 0; j < points; ++j) {
      xs[j] = node(j);
      const Rational v = pz.evaluate(Rational(xs[j]));
      auto divs = positive_divisors(v.numerator(), opt);
      std::vector<mpz_class> signed_divs;
      for (const auto& dv : divs) {
        signed_divs.push_back(dv);
        // The overall sign of a factor is fixed by taking g(x_0) > 0.
        if (j > 0) signed_divs.push_back(-dv);
      }
      choices[j] = std::move(signed_divs);
      total *= choices[j].size();
      if (total > opt.max_candidates) {
        incomplete("trial factorisation of " + p.str() + " exceeds the candidate budget");
      }
    }
    std::vector<std::size_t> idx(points, 0);
    std::vector<mpz_class> ys(points);
    for (std::size_t count = 0; count < total; ++count) {
      for (std::size_t j = 0; j < points; ++j) ys[j] = choices[j][idx[j]];
      const Polynomial g = interpolate(xs, ys);
      if (g.degree() == d && integral(g)) {
        auto [q, r] = divmod(pz, g);
        if (r.is_zero()) {
          kronecker_split(g, opt, out);
          kronecker_split(q, opt, out);
          return;
        }
      }
      for (std::size_t j = 0; j < points; ++j) {
        if (++idx[j] < choices[j].size()) break;
        idx[j] = 0;
      }
    }
  }
  out.push_back(p.monic());
}

// Monic quadratic: rational roots exactly when the discriminant is a square.
std::vector<Polynomial> split_quadratic(const Polynomial& q) {
  const Rational b = q.coefficient(1);
  const Rational c = q.coefficient(0);
  const Rational disc = b * b - Rational(4) * c;
  if (disc.sign() >= 0) {
    const mpz_class num = disc.numerator();
    const mpz_class den = disc.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
      const Rational root(mpq_class(mpz_class(sqrt(num)), mpz_class(sqrt(den))));
      const Rational half(1, 2);
      return {Polynomial::linear(half * (-b - root)), Polynomial::linear(half * (-b + root))};
    }
  }
  return {q};
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coefficients();
  const auto& cb = b.factor.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<Factor> factor_over_rationals(const Polynomial& p, const FactorOptions& options) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::PreconditionViolated, "factorisation needs degree >= 1");
  }
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_parts(p.monic())) {
    if (part.degree() == 1) {
      out.push_back({part, mult});
      continue;
    }
    if (part.degree() == 2) {
      for (auto& f : split_quadratic(part)) out.push_back({std::move(f), mult});
      continue;
    }
    Polynomial residual = part;
    for (const auto& root : rational_roots(part, options)) {
      out.push_back({Polynomial::linear(root), mult});
      residual = divmod(residual, Polynomial::linear(root)).first;
    }
    if (residual.degree() < 1) continue;
    std::vector<Polynomial> irreducibles;
    kronecker_split(residual, options, irreducibles);
    for (auto& f : irreducibles) out.push_back({std::move(f), mult});
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace pflat
