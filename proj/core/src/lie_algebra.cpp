#include "pflat/lie_algebra.hpp"

#include <algorithm>

#include "pflat/error.hpp"
#include "pflat/linalg.hpp"

namespace pflat {

namespace {

void require_length(const LieAlgebra& alg, const Vector& v) {
  if (v.size() != alg.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in algebra '" + alg.name() +
                    "' of dimension " + std::to_string(alg.dim()));
  }
}

std::string triple_name(const LieAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  const auto& l = alg.basis_labels();
  return "(" + l[i] + ", " + l[j] + ", " + l[k] + ")";
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       StructureConstants brackets)
    : name_(std::move(name)), labels_(std::move(basis_labels)), brackets_(std::move(brackets)) {
  const std::size_t n = labels_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (labels_[a] == labels_[b]) {
        throw Error(ErrorCode::PreconditionViolated, "duplicate basis label '" + labels_[a] + "'");
      }
    }
  }
  dense_.assign(n * n, Vector(n));
  for (auto it = brackets_.begin(); it != brackets_.end();) {
    const auto [i, j] = it->first;
    if (i >= j || j >= n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "structure constant (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") must satisfy i < j < dim");
    }
    SparseVector& terms = it->second;
    for (auto t = terms.begin(); t != terms.end();) {
      if (t->first >= n) {
        throw Error(ErrorCode::DimensionMismatch, "structure constant term index out of range");
      }
      t = t->second.is_zero() ? terms.erase(t) : std::next(t);
    }
    if (terms.empty()) {
      it = brackets_.erase(it);
      continue;
    }
    for (const auto& [k, c] : terms) {
      dense_[i * n + j][k] = c;
      dense_[j * n + i][k] = -c;
    }
    ++it;
  }
}

LieAlgebra LieAlgebra::from_matrices(std::string name, std::vector<std::string> labels,
                                     const std::vector<Matrix>& matrices) {
  if (labels.size() != matrices.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one label per matrix required");
  }
  if (matrices.empty()) return LieAlgebra(std::move(name), std::move(labels), {});
  const std::size_t rows = matrices.front().rows();
  const std::size_t cols = matrices.front().cols();
  EchelonBasis span(rows * cols);
  for (const auto& m : matrices) {
    if (m.rows() != rows || m.cols() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "matrices must share a shape");
    }
    if (!span.insert(m.entries())) {
      throw Error(ErrorCode::PreconditionViolated, "matrices are linearly dependent");
    }
  }
  StructureConstants brackets;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      const auto coords = span.express(commutator(matrices[i], matrices[j]).entries());
      if (!coords) {
        throw Error(ErrorCode::PreconditionViolated,
                    "commutator [" + labels[i] + ", " + labels[j] + "] leaves the span");
      }
      SparseVector terms;
      for (std::size_t k = 0; k < coords->size(); ++k) {
        if (!(*coords)[k].is_zero()) terms[k] = (*coords)[k];
      }
      if (!terms.empty()) brackets[{i, j}] = std::move(terms);
    }
  }
  return LieAlgebra(std::move(name), std::move(labels), std::move(brackets));
}

LieAlgebra LieAlgebra::abelian(std::string name, std::vector<std::string> labels) {
  return LieAlgebra(std::move(name), std::move(labels), {});
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

const Vector& LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  return dense_[i * dim() + j];
}

Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  require_length(alg, x);
  require_length(alg, y);
  const std::size_t n = alg.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Vector& b = alg.bracket_basis(i, j);
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero()) out[k] += c * b[k];
    }
  }
  return out;
}

JacobiReport check_jacobi(const LieAlgebra& alg) {
  JacobiReport report;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        const Vector r = bracket(alg, alg.bracket_basis(i, j), ek) +
                         bracket(alg, alg.bracket_basis(j, k), ei) +
                         bracket(alg, alg.bracket_basis(k, i), ej);
        if (!is_zero(r)) {
          report.passed = false;
          report.violations.push_back({i, j, k, r});
        }
      }
    }
  }
  return report;
}

LieAlgebra validate(LieAlgebra algebra) {
  const JacobiReport report = check_jacobi(algebra);
  if (!report.passed) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::NotValidated, "algebra '" + algebra.name() +
                                             "' violates the Jacobi identity on " +
                                             triple_name(algebra, v.i, v.j, v.k));
  }
  algebra.validated_ = true;
  return algebra;
}

AlgebraPtr make_validated(LieAlgebra algebra) {
  return std::make_shared<const LieAlgebra>(validate(std::move(algebra)));
}

SubalgebraReport check_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspace ambient dimension differs from algebra");
  }
  SubalgebraReport report;
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Vector br = bracket(alg, b[i], b[j]);
      if (!s.contains(br)) {
        report.passed = false;
        report.offending_pair = {i, j};
        report.escaped_bracket = std::move(br);
        return report;
      }
    }
  }
  return report;
}

Subalgebra::Subalgebra(AlgebraPtr parent, Subspace basis)
    : parent_(std::move(parent)), basis_(std::move(basis)) {
  if (!parent_ || !parent_->validated()) {
    throw Error(ErrorCode::NotValidated, "subalgebra of an unvalidated algebra");
  }
  if (!check_subalgebra(*parent_, basis_).passed) {
    throw Error(ErrorCode::PreconditionViolated,
                "subspace is not closed under the bracket of '" + parent_->name() + "'");
  }
}

Subalgebra Subalgebra::zero(AlgebraPtr parent) {
  const std::size_t n = parent ? parent->dim() : 0;
  return Subalgebra(std::move(parent), Subspace(n));
}

CentralExtension central_extension(const LieAlgebra& base, std::string e_label) {
  if (!base.validated()) {
    throw Error(ErrorCode::NotValidated, "central extension of an unvalidated algebra");
  }
  std::vector<std::string> labels = base.basis_labels();
  labels.push_back(std::move(e_label));
  LieAlgebra extended(base.name() + "+RE", std::move(labels), base.structure_constants());
  const std::size_t e = base.dim();
  return CentralExtension{base, validate(std::move(extended)), e};
}

bool is_central(const LieAlgebra& alg, const Vector& v) {
  require_length(alg, v);
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (!is_zero(bracket(alg, v, unit_vector(alg.dim(), i)))) return false;
  }
  return true;
}

LieAlgebra rescale_basis_element(const LieAlgebra& alg, std::size_t index, const Rational& c) {
  if (index >= alg.dim()) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  if (c.is_zero()) throw Error(ErrorCode::ParameterOutOfRange, "rescaling factor must be nonzero");
  LieAlgebra::StructureConstants out;
  for (const auto& [ij, terms] : alg.structure_constants()) {
    const Rational outer = (ij.first == index || ij.second == index) ? c : Rational(1);
    SparseVector scaled;
    for (const auto& [k, v] : terms) scaled[k] = k == index ? outer * v / c : outer * v;
    out[ij] = std::move(scaled);
  }
  LieAlgebra result(alg.name(), alg.basis_labels(), std::move(out));
  return alg.validated() ? validate(std::move(result)) : result;
}

}  // namespace pflat
