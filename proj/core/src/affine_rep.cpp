#include "pflat/affine_rep.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "pflat/error.hpp"
#include "pflat/linalg.hpp"

namespace pflat {

namespace {

void require_validated(const AffineRep& rep) {
  if (!rep.validated()) {
    throw Error(ErrorCode::NotValidated,
                "affine representation of '" + rep.algebra()->name() + "' is not validated");
  }
}

std::size_t require_e(const AffineRep& rep) {
  if (!rep.e_index()) {
    throw Error(ErrorCode::MissingCentralElement,
                "representation of '" + rep.algebra()->name() + "' has no central element E");
  }
  return *rep.e_index();
}

Matrix unflatten(std::size_t n, const Vector& v) { return Matrix(n, n, v); }

/// Distinct non-scalar generators; scalars never change a spin or a commutant.
std::vector<Matrix> effective_generators(const AffineRep& rep) {
  std::vector<Matrix> out;
  for (const auto& m : rep.f_mats()) {
    if (m.scalar_value()) continue;
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

std::vector<Matrix> transposed(const std::vector<Matrix>& ms) {
  std::vector<Matrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.transpose());
  return out;
}

/// Element t of the sweep: basis elements first, then pairwise sums b_i + b_j (i < j).
std::optional<Matrix> sweep_element(const std::vector<Matrix>& basis, std::size_t t) {
  const std::size_t m = basis.size();
  if (t < m) return basis[t];
  t -= m;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t row = m - i - 1;
    if (t < row) return basis[i] + basis[i + 1 + t];
    t -= row;
  }
  return std::nullopt;
}

std::size_t sweep_length(std::size_t m) { return m + m * (m - 1) / 2; }

/// Coefficient vectors x with sum_i x_i mats[i] commuting with every mats[j].
Subspace center_coordinates(const std::vector<Matrix>& mats) {
  const std::size_t d = mats.size();
  if (d == 0) return Subspace(0);
  const std::size_t nn = mats.front().entries().size();
  Matrix sys(d * nn, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix cm = commutator(mats[i], mats[j]);
      const auto& c = cm.entries();
      for (std::size_t r = 0; r < nn; ++r) sys(j * nn + r, i) = c[r];
    }
  }
  return kernel(sys);
}

Matrix trace_gram(const std::vector<Matrix>& mats) {
  const std::size_t d = mats.size();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      g(i, j) = (mats[i] * mats[j]).trace();
      g(j, i) = g(i, j);
    }
  }
  return g;
}

/// Type of the real algebra C ⊗ R for a commutant C given by a basis containing I.
RealType real_type(const std::vector<Matrix>& c) {
  const std::size_t d = c.size();
  if (d == 1) return RealType::Real;
  if (d == 2) {
    for (const auto& m : c) {
      if (m.scalar_value()) continue;
      const Polynomial p = minimal_polynomial(m);
      if (p.degree() != 2) return RealType::Split;
      const Rational b = p.coefficient(1), q = p.coefficient(0);
      return (b * b - Rational(4) * q).sign() < 0 ? RealType::Complex : RealType::Split;
    }
    return RealType::Split;
  }
  if (d == 4 && center_coordinates(c).dim() == 1) {
    const Inertia in = inertia(trace_gram(c));
    if (in.positive == 1 && in.negative == 3) return RealType::Quaternion;
  }
  return RealType::Split;
}

Subspace column_span(const std::vector<Matrix>& mats, std::size_t n) {
  std::vector<Vector> cols;
  for (const auto& m : mats)
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(n, cols);
}

std::optional<Subspace> proper_spin(const AffineRep& rep, const std::vector<Matrix>& gens,
                                    const Vector& seed) {
  Subspace s = spin(gens, {seed});
  if (s.is_full() || s.is_zero()) return std::nullopt;
  if (!is_invariant_proper(rep, s)) throw std::logic_error("spin produced a non-invariant subspace");
  return s;
}

IrreducibilityVerdict reducible(const AffineRep& rep, Subspace w, std::string how,
                                std::size_t tried) {
  if (!is_invariant_proper(rep, w)) throw std::logic_error("reducibility witness failed re-verification");
  IrreducibilityVerdict v;
  v.status = Irreducibility::Reducible;
  v.witness = std::move(w);
  v.certificate = std::move(how);
  v.elements_tried = tried;
  return v;
}

std::string describe_real_type(RealType t, std::size_t dim) {
  return "commutant of dimension " + std::to_string(dim) + " is " +
         (t == RealType::Split ? std::string("not a real division algebra")
                               : "the real division algebra of type " + std::string(to_string(t)));
}

IrreducibilityVerdict from_real_type(const AffineRep& rep, std::string prefix, std::size_t tried) {
  const auto c = commutant(rep);
  const RealType t = real_type(c);
  IrreducibilityVerdict v;
  v.elements_tried = tried;
  v.commutant_dim = c.size();
  v.real_type = t;
  v.status = t == RealType::Split ? Irreducibility::Reducible : Irreducibility::Irreducible;
  v.certificate = std::move(prefix) + "; " + describe_real_type(t, c.size());
  if (t == RealType::Split) v.certificate += "; no rational invariant subspace exists";
  return v;
}

std::optional<IrreducibilityVerdict> structural_decision(const AffineRep& rep,
                                                         const IrreducibilityOptions& options,
                                                         std::size_t tried) {
  const std::size_t n = rep.dim_v();
  const auto a = envelope(rep);
  const Subspace rad = kernel(trace_gram(a));
  if (!rad.is_zero()) {
    std::vector<Matrix> elements;
    for (const auto& coeffs : rad.basis()) elements.push_back(combine(a, coeffs, n, n));
    return reducible(rep, column_span(elements, n),
                     "image of the trace-form radical of the enveloping algebra", tried);
  }
  const auto c = commutant(rep);
  const std::size_t limit = std::min(options.budget, sweep_length(c.size()));
  for (std::size_t t = 0; t < limit; ++t) {
    const Matrix z = *sweep_element(c, t);
    if (z.scalar_value()) continue;
    std::vector<Factor> factors;
    try {
      factors = factor_over_rationals(minimal_polynomial(z), options.factor);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FactorizationIncomplete) throw;
      continue;
    }
    if (factors.size() == 1 && factors.front().multiplicity == 1) continue;
    const Subspace w = kernel(factors.front().factor.evaluate(z));
    return reducible(rep, w,
                     "kernel of " + factors.front().factor.str() +
                         " at a zero divisor of the commutant",
                     tried);
  }
  return from_real_type(rep, "enveloping algebra is semisimple", tried);
}

}  // namespace

AffineRep::AffineRep(AlgebraPtr algebra, std::vector<Matrix> f, Matrix q,
                     std::optional<std::size_t> e_index)
    : algebra_(std::move(algebra)), f_(std::move(f)), q_(std::move(q)), e_index_(e_index) {
  if (!algebra_ || !algebra_->validated()) {
    throw Error(ErrorCode::NotValidated, "affine representation of an unvalidated algebra");
  }
  const std::size_t d = algebra_->dim();
  const std::size_t n = q_.rows();
  if (f_.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(d) +
                                                  " f matrices, got " + std::to_string(f_.size()));
  }
  if (q_.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch,
                "q must have one column per basis element (" + std::to_string(d) + ")");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (f_[i].rows() != n || f_[i].cols() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "f(" + algebra_->basis_labels()[i] + ") must be " + std::to_string(n) + "x" +
                      std::to_string(n));
    }
  }
  if (e_index_) {
    if (*e_index_ >= d) throw Error(ErrorCode::DimensionMismatch, "e_index out of range");
    if (!is_central(*algebra_, unit_vector(d, *e_index_))) {
      throw Error(ErrorCode::MissingCentralElement,
                  "basis element '" + algebra_->basis_labels()[*e_index_] + "' is not central");
    }
  }
}

Matrix AffineRep::f_of(const Vector& x) const {
  if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "algebra vector length");
  return combine(f_, x, dim_v(), dim_v());
}

Vector AffineRep::q_of(const Vector& x) const {
  if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "algebra vector length");
  return q_ * x;
}

AffineRepReport check_affine_rep(const AffineRep& rep) {
  AffineRepReport report;
  const auto& alg = *rep.algebra();
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    for (std::size_t j = i + 1; j < rep.dim(); ++j) {
      const Vector& br = alg.bracket_basis(i, j);
      Matrix fr = commutator(rep.f(i), rep.f(j)) - rep.f_of(br);
      Vector qr = rep.q_of(br) - rep.f(i) * rep.q(j) + rep.f(j) * rep.q(i);
      const bool f_ok = fr.is_zero();
      if (f_ok && is_zero(qr)) continue;
      report.passed = false;
      report.failed_law = f_ok ? "cocycle" : "homomorphism";
      report.offending_pair = {i, j};
      report.f_residual = std::move(fr);
      report.q_residual = std::move(qr);
      return report;
    }
  }
  return report;
}

AffineRep validate(AffineRep rep) {
  const auto report = check_affine_rep(rep);
  if (!report.passed) {
    const auto& l = rep.algebra()->basis_labels();
    throw Error(ErrorCode::NotValidated, "affine representation violates the " +
                                             report.failed_law + " law on (" +
                                             l[report.offending_pair->first] + ", " +
                                             l[report.offending_pair->second] + ")");
  }
  rep.validated_ = true;
  return rep;
}

RescaledRep rescale_central(const AffineRep& rep, const Subalgebra& k, const Rational& c) {
  const std::size_t e = require_e(rep);
  if (c.is_zero()) throw Error(ErrorCode::ParameterOutOfRange, "rescaling factor must be nonzero");
  auto alg = std::make_shared<const LieAlgebra>(rescale_basis_element(*rep.algebra(), e, c));
  std::vector<Matrix> f = rep.f_mats();
  f[e] = c * f[e];
  Matrix q = rep.q_mat();
  q.set_column(e, c * q.column(e));
  std::vector<Vector> kv = k.subspace().basis();
  for (auto& v : kv) v[e] /= c;
  Subalgebra k2(alg, Subspace::span(alg->dim(), kv));
  AffineRep out(alg, std::move(f), std::move(q), e);
  return {rep.validated() ? validate(std::move(out)) : std::move(out), std::move(k2)};
}

MembershipReport check_f_membership(const AffineRep& rep, const Subalgebra& k) {
  require_validated(rep);
  if (k.parent()->dim() != rep.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subalgebra lives in a different algebra");
  }
  MembershipReport r;
  r.rank = rank(rep.q_mat());
  r.surjective = r.rank == rep.dim_v();
  r.kernel = kernel(rep.q_mat());
  r.kernel_matches = r.kernel == k.subspace();
  r.dimension_matches = rep.dim_v() + k.dim() == rep.dim();
  r.passed = r.surjective && r.kernel_matches && r.dimension_matches;
  return r;
}

std::vector<Matrix> envelope(const AffineRep& rep) {
  require_validated(rep);
  const std::size_t n = rep.dim_v();
  const auto gens = effective_generators(rep);
  EchelonBasis span(n * n);
  std::vector<Matrix> basis{Matrix::identity(n)};
  span.insert(basis.front().entries());
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    for (const auto& g : gens) {
      Matrix p = g * basis[idx];
      if (span.insert(p.entries())) basis.push_back(std::move(p));
    }
  }
  return basis;
}

std::vector<Matrix> commutant(const AffineRep& rep) {
  require_validated(rep);
  const std::size_t n = rep.dim_v();
  std::vector<Matrix> current;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) current.push_back(Matrix::unit(n, r, c));
  // Cut the solution space down one generator at a time.
  for (const auto& g : effective_generators(rep)) {
    Matrix sys(n * n, current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Matrix cm = commutator(current[i], g);
      const auto& e = cm.entries();
      for (std::size_t r = 0; r < n * n; ++r) sys(r, i) = e[r];
    }
    std::vector<Matrix> next;
    const Subspace solutions = kernel(sys);
    for (const auto& coeffs : solutions.basis()) next.push_back(combine(current, coeffs, n, n));
    current = std::move(next);
  }
  std::vector<Vector> flat;
  for (const auto& m : current) flat.push_back(m.entries());
  std::vector<Matrix> out;
  const Subspace canonical = Subspace::span(n * n, flat);
  for (const auto& v : canonical.basis()) out.push_back(unflatten(n, v));
  return out;
}

std::string_view to_string(RealType t) {
  switch (t) {
    case RealType::Real: return "real";
    case RealType::Complex: return "complex";
    case RealType::Quaternion: return "quaternion";
    case RealType::Split: return "split";
  }
  return "?";
}

std::string_view to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::Irreducible: return "Irreducible";
    case Irreducibility::Reducible: return "Reducible";
    case Irreducibility::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

bool is_invariant_proper(const AffineRep& rep, const Subspace& w) {
  if (w.ambient_dim() != rep.dim_v() || w.is_zero() || w.is_full()) return false;
  for (const auto& f : rep.f_mats())
    for (const auto& v : w.basis())
      if (!w.contains(f * v)) return false;
  return true;
}

IrreducibilityVerdict is_irreducible(const AffineRep& rep, const IrreducibilityOptions& options) {
  require_validated(rep);
  const std::size_t n = rep.dim_v();
  if (n == 0) throw Error(ErrorCode::DegenerateDimension, "representation space is zero");
  if (n == 1) {
    IrreducibilityVerdict v;
    v.status = Irreducibility::Irreducible;
    v.certificate = "one-dimensional representation space";
    v.commutant_dim = 1;
    v.real_type = RealType::Real;
    return v;
  }
  const auto gens = effective_generators(rep);
  const auto gens_t = transposed(gens);
  const auto a = envelope(rep);
  const std::size_t limit = std::min(options.budget, sweep_length(a.size()));
  bool incomplete = false;
  for (std::size_t t = 0; t < limit; ++t) {
    const Matrix z = *sweep_element(a, t);
    std::vector<Factor> factors;
    try {
      factors = factor_over_rationals(minimal_polynomial(z), options.factor);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FactorizationIncomplete) throw;
      incomplete = true;
      continue;
    }
    for (const auto& fac : factors) {
      const Matrix pz = fac.factor.evaluate(z);
      const Subspace ker = kernel(pz);
      const auto deg = static_cast<std::size_t>(fac.factor.degree());
      const std::string where = "sweep element " + std::to_string(t) + ", factor " + fac.factor.str();
      if (ker.dim() != deg) {
        for (const auto& v : ker.basis()) {
          if (auto w = proper_spin(rep, gens, v)) {
            return reducible(rep, *w, "spin of a kernel vector at " + where, t + 1);
          }
        }
        continue;
      }
      if (auto w = proper_spin(rep, gens, ker.basis().front())) {
        return reducible(rep, *w, "spin of a kernel vector at " + where, t + 1);
      }
      const Subspace ker_t = kernel(pz.transpose());
      const Subspace s = spin(gens_t, {ker_t.basis().front()});
      if (!s.is_full()) {
        return reducible(rep, annihilator(s),
                         "annihilator of a transposed spin at " + where, t + 1);
      }
      return from_real_type(rep,
                            "rationally irreducible: " + where + " has nullity " +
                                std::to_string(deg) + " and both spins are full",
                            t + 1);
    }
  }
  if (options.structural_fallback) {
    if (auto v = structural_decision(rep, options, limit)) return *v;
  }
  IrreducibilityVerdict v;
  v.status = Irreducibility::Undetermined;
  v.elements_tried = limit;
  v.certificate = incomplete ? "factorization incomplete within the coefficient bound"
                             : "element budget exhausted without a certificate";
  return v;
}

bool verify_complex_structure(const AffineRep& rep, const ScaledComplexStructure& s) {
  const std::size_t n = rep.dim_v();
  if (s.b_squared.sign() <= 0 || s.k_mat.rows() != n || s.k_mat.cols() != n) return false;
  if (s.k_mat * s.k_mat != Matrix::scalar(n, -s.b_squared)) return false;
  for (const auto& f : rep.f_mats())
    if (s.k_mat * f != f * s.k_mat) return false;
  return true;
}

std::optional<ScaledComplexStructure> find_scaled_complex_structure(const AffineRep& rep) {
  require_validated(rep);
  const std::size_t n = rep.dim_v();
  if (n % 2 == 1) return std::nullopt;
  std::vector<Matrix> candidates;
  if (rep.e_index()) candidates.push_back(rep.f(*rep.e_index()));
  const auto c = commutant(rep);
  for (std::size_t t = 0; t < sweep_length(c.size()); ++t) candidates.push_back(*sweep_element(c, t));
  for (const auto& m : candidates) {
    if (m.scalar_value()) continue;
    const Polynomial p = minimal_polynomial(m);
    if (p.degree() != 2) continue;
    const Rational b = p.coefficient(1), q = p.coefficient(0);
    if ((b * b - Rational(4) * q).sign() >= 0) continue;
    ScaledComplexStructure s{m + Matrix::scalar(n, b / Rational(2)), -b / Rational(2),
                             q - b * b / Rational(4)};
    if (verify_complex_structure(rep, s)) return s;
  }
  return std::nullopt;
}

PfReport is_pf(const AffineRep& rep, const Subalgebra& k) {
  const std::size_t e = require_e(rep);
  PfReport r;
  r.membership = check_f_membership(rep, k);
  r.c = rep.f(e).scalar_value();
  r.q_e_nonzero = !is_zero(rep.q(e));
  r.passed = r.membership.passed && r.c && !r.c->is_zero() && r.q_e_nonzero;
  return r;
}

Subspace orbit_tangent(const AffineRep& rep, const Vector& v) {
  const std::size_t e = require_e(rep);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < rep.dim(); ++i)
    if (i != e) images.push_back(rep.f(i) * v);
  return Subspace::span(rep.dim_v(), images);
}

bool is_cyclic_vector(const AffineRep& rep, const Subalgebra& k, const Vector& v) {
  const std::size_t e = require_e(rep);
  if (v.size() != rep.dim_v() || is_zero(v)) return false;
  for (const auto& z : k.subspace().basis())
    if (!is_zero(rep.f_of(z) * v)) return false;
  const Vector fe = rep.f(e) * v;
  if (is_zero(fe)) return false;
  const Subspace g_part = orbit_tangent(rep, v);
  const Subspace e_part = Subspace::span(rep.dim_v(), {fe});
  return direct_sum_check(g_part, e_part) && subspace_sum(g_part, e_part).is_full();
}

std::optional<Vector> find_v0(const AffineRep& rep, const Subalgebra& k) {
  require_validated(rep);
  const std::size_t e = require_e(rep);
  if (auto v = solve(rep.f(e), rep.q(e)); v && is_cyclic_vector(rep, k, *v)) return v;

  Subspace w = Subspace::full(rep.dim_v());
  for (const auto& z : k.subspace().basis()) w = subspace_intersect(w, kernel(rep.f_of(z)));
  const std::size_t m = std::min<std::size_t>(4, w.dim());
  if (m == 0) return std::nullopt;

  // Odometer over {0, 1, -1, 2, -2}^m with the first slot fastest, then stably by L1 norm.
  static constexpr int digits[] = {0, 1, -1, 2, -2};
  std::vector<std::vector<int>> grid;
  std::vector<int> idx(m, 0);
  while (true) {
    std::vector<int> c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = digits[idx[i]];
    grid.push_back(std::move(c));
    std::size_t pos = 0;
    while (pos < m && ++idx[pos] == 5) idx[pos++] = 0;
    if (pos == m) break;
  }
  const auto l1 = [](const std::vector<int>& c) {
    int s = 0;
    for (int x : c) s += std::abs(x);
    return s;
  };
  std::stable_sort(grid.begin(), grid.end(),
                   [&](const auto& x, const auto& y) { return l1(x) < l1(y); });
  for (const auto& coeffs : grid) {
    Vector v = zero_vector(rep.dim_v());
    for (std::size_t i = 0; i < m; ++i)
      if (coeffs[i] != 0) v = v + Rational(coeffs[i]) * w.basis()[i];
    if (is_cyclic_vector(rep, k, v)) return v;
  }
  return std::nullopt;
}

ClassIIReport is_class_ii(const AffineRep& rep, const Subalgebra& k, std::size_t dim_m,
                          const IrreducibilityOptions& options) {
  require_e(rep);
  ClassIIReport r;
  r.irreducibility = is_irreducible(rep, options);
  r.dimension_matches = rep.dim_v() == dim_m + 1;
  r.structure = find_scaled_complex_structure(rep);
  r.v0 = find_v0(rep, k);
  const bool rest = r.dimension_matches && r.structure && r.v0;
  switch (r.irreducibility.status) {
    case Irreducibility::Irreducible: r.verdict = rest ? Verdict::Pass : Verdict::Fail; break;
    case Irreducibility::Reducible: r.verdict = Verdict::Fail; break;
    case Irreducibility::Undetermined: r.verdict = rest ? Verdict::Undetermined : Verdict::Fail; break;
  }
  return r;
}

}  // namespace pflat
