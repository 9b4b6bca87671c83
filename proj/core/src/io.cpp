#include "pflat/io.hpp"

#include <set>

#include "pflat/error.hpp"

namespace pflat::io {

namespace {

std::string at(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }
std::string at(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }

const json& require(const json& doc, const std::string& pointer, const std::string& key) {
  if (!doc.is_object()) throw SchemaError(pointer, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(at(pointer, key), "missing required field");
  return *it;
}

const json& require_array(const json& value, const std::string& pointer, std::optional<std::size_t> length = {}) {
  if (!value.is_array()) throw SchemaError(pointer, "expected an array");
  if (length && value.size() != *length) {
    throw SchemaError(pointer, "expected " + std::to_string(*length) + " entries, found " +
                                   std::to_string(value.size()));
  }
  return value;
}

std::size_t parse_count(const json& value, const std::string& pointer) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw SchemaError(pointer, "expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

void require_algebra_name(const json& doc, const std::string& pointer, const LieAlgebra& alg) {
  const json& name = require(doc, pointer, "algebra");
  if (!name.is_string()) throw SchemaError(at(pointer, "algebra"), "expected the algebra name");
  if (name.get<std::string>() != alg.name()) {
    throw SchemaError(at(pointer, "algebra"),
                      "refers to '" + name.get<std::string>() + "' but the algebra is '" + alg.name() + "'");
  }
}

std::vector<Vector> parse_vectors(const json& value, const std::string& pointer, std::size_t length) {
  require_array(value, pointer);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(parse_vector(value[i], at(pointer, i), length));
  return out;
}

std::vector<Matrix> parse_matrices(const json& value, const std::string& pointer, std::size_t count,
                                   std::size_t n) {
  require_array(value, pointer, count);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(parse_matrix(value[i], at(pointer, i), n, n));
  return out;
}

json vectors_to_json(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json matrices_to_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

}  // namespace

Rational parse_rational(const json& value, const std::string& pointer) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(mpq_class(std::to_string(value.get<unsigned long long>())));
    return Rational(mpq_class(std::to_string(value.get<long long>())));
  }
  if (!value.is_string()) throw SchemaError(pointer, "expected a rational as \"p/q\" or an integer");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(pointer, e.what());
  }
}

Vector parse_vector(const json& value, const std::string& pointer, std::optional<std::size_t> length) {
  require_array(value, pointer, length);
  Vector out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(parse_rational(value[i], at(pointer, i)));
  return out;
}

Matrix parse_matrix(const json& value, const std::string& pointer, std::size_t rows, std::size_t cols) {
  require_array(value, pointer, rows);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = parse_vector(value[r], at(pointer, r), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const Subspace& s) {
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", vectors_to_json(s.basis())}};
}

LieAlgebra parse_algebra(const json& doc, const std::string& pointer) {
  const json& name = require(doc, pointer, "name");
  if (!name.is_string()) throw SchemaError(at(pointer, "name"), "expected a string");
  const std::size_t dim = parse_count(require(doc, pointer, "dim"), at(pointer, "dim"));
  const json& basis = require_array(require(doc, pointer, "basis"), at(pointer, "basis"), dim);
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!basis[i].is_string()) throw SchemaError(at(at(pointer, "basis"), i), "expected a label");
    if (!seen.insert(basis[i].get<std::string>()).second) {
      throw SchemaError(at(at(pointer, "basis"), i), "duplicate basis label");
    }
    labels.push_back(basis[i].get<std::string>());
  }

  const std::string bp = at(pointer, "brackets");
  const json& brackets = require_array(require(doc, pointer, "brackets"), bp);
  LieAlgebra::StructureConstants sc;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string p = at(bp, b);
    const std::size_t i = parse_count(require(brackets[b], p, "i"), at(p, "i"));
    const std::size_t j = parse_count(require(brackets[b], p, "j"), at(p, "j"));
    if (!(i < j && j < dim)) throw SchemaError(p, "bracket indices must satisfy i < j < dim");
    if (sc.count({i, j})) throw SchemaError(p, "bracket (i, j) given twice");
    const std::string tp = at(p, "terms");
    const json& terms = require_array(require(brackets[b], p, "terms"), tp);
    SparseVector v;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string term_p = at(tp, t);
      require_array(terms[t], term_p, 2);
      const std::size_t k = parse_count(terms[t][0], at(term_p, 0));
      if (k >= dim) throw SchemaError(at(term_p, 0), "basis index out of range");
      if (v.count(k)) throw SchemaError(term_p, "basis index repeated within a bracket");
      v[k] = parse_rational(terms[t][1], at(term_p, 1));
    }
    sc[{i, j}] = std::move(v);
  }
  return LieAlgebra(name.get<std::string>(), std::move(labels), std::move(sc));
}

json algebra_to_json(const LieAlgebra& alg) {
  json brackets = json::array();
  for (const auto& [ij, terms] : alg.structure_constants()) {
    json t = json::array();
    for (const auto& [k, c] : terms) t.push_back(json::array({k, c.str()}));
    brackets.push_back(json{{"i", ij.first}, {"j", ij.second}, {"terms", std::move(t)}});
  }
  return json{{"name", alg.name()}, {"dim", alg.dim()}, {"basis", alg.basis_labels()}, {"brackets", brackets}};
}

SubalgebraDoc parse_subalgebra(const json& doc, const std::string& pointer, const LieAlgebra& alg) {
  require_algebra_name(doc, pointer, alg);
  return {parse_vectors(require(doc, pointer, "vectors"), at(pointer, "vectors"), alg.dim())};
}

json subalgebra_to_json(const LieAlgebra& alg, const Subspace& k) {
  return json{{"algebra", alg.name()}, {"vectors", vectors_to_json(k.basis())}};
}

RepDoc parse_rep(const json& doc, const std::string& pointer, const LieAlgebra& alg) {
  require_algebra_name(doc, pointer, alg);
  RepDoc out;
  out.dim_v = parse_count(require(doc, pointer, "dim_v"), at(pointer, "dim_v"));
  out.f = parse_matrices(require(doc, pointer, "f"), at(pointer, "f"), alg.dim(), out.dim_v);
  out.q = parse_matrix(require(doc, pointer, "q"), at(pointer, "q"), out.dim_v, alg.dim());
  if (doc.contains("e_index") && !doc["e_index"].is_null()) {
    out.e_index = parse_count(doc["e_index"], at(pointer, "e_index"));
    if (*out.e_index >= alg.dim()) throw SchemaError(at(pointer, "e_index"), "basis index out of range");
  }
  return out;
}

json rep_to_json(const AffineRep& rep) {
  json out{{"algebra", rep.algebra()->name()},
           {"dim_v", rep.dim_v()},
           {"f", matrices_to_json(rep.f_mats())},
           {"q", to_json(rep.q_mat())}};
  if (rep.e_index()) out["e_index"] = *rep.e_index();
  return out;
}

RawLambdaDoc parse_raw_lambda(const json& doc, const std::string& pointer, const LieAlgebra& alg) {
  require_algebra_name(doc, pointer, alg);
  RawLambdaDoc out;
  out.dim_v = parse_count(require(doc, pointer, "dim_v"), at(pointer, "dim_v"));
  out.k = parse_vectors(require(doc, pointer, "k"), at(pointer, "k"), alg.dim());
  out.lambda = parse_matrices(require(doc, pointer, "lambda"), at(pointer, "lambda"), alg.dim(), out.dim_v);
  out.q = parse_matrix(require(doc, pointer, "q"), at(pointer, "q"), out.dim_v, alg.dim());
  return out;
}

json raw_lambda_to_json(const RawLambdaSample& sample) {
  return json{{"algebra", sample.algebra->name()},
              {"k", vectors_to_json(sample.k.subspace().basis())},
              {"dim_v", sample.q.rows()},
              {"lambda", matrices_to_json(sample.lambda)},
              {"q", to_json(sample.q)}};
}

}  // namespace pflat::io
