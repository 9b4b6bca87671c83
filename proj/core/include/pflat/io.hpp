#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pflat/affine_rep.hpp"
#include "pflat/catalog.hpp"

namespace pflat::io {

using nlohmann::json;

// Parsers take the JSON pointer of the value they read so that every
// SchemaError names the offending location.

Rational parse_rational(const json& value, const std::string& pointer);
Vector parse_vector(const json& value, const std::string& pointer, std::optional<std::size_t> length = {});
Matrix parse_matrix(const json& value, const std::string& pointer, std::size_t rows, std::size_t cols);

json to_json(const Rational& r);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Subspace& s);

/// {name, dim, basis, brackets: [{i, j, terms: [[k, "p/q"], ...]}]}. The
/// result is not validated.
LieAlgebra parse_algebra(const json& doc, const std::string& pointer);
json algebra_to_json(const LieAlgebra& alg);

struct SubalgebraDoc {
  std::vector<Vector> vectors;
};

/// {algebra, vectors}; `algebra` must name `alg`.
SubalgebraDoc parse_subalgebra(const json& doc, const std::string& pointer, const LieAlgebra& alg);
json subalgebra_to_json(const LieAlgebra& alg, const Subspace& k);

struct RepDoc {
  std::size_t dim_v = 0;
  std::vector<Matrix> f;
  Matrix q;
  std::optional<std::size_t> e_index;
};

/// {algebra, dim_v, f: [matrix per basis element], q, e_index?}.
RepDoc parse_rep(const json& doc, const std::string& pointer, const LieAlgebra& alg);
json rep_to_json(const AffineRep& rep);

struct RawLambdaDoc {
  std::size_t dim_v = 0;
  std::vector<Vector> k;
  std::vector<Matrix> lambda;
  Matrix q;
};

/// {algebra, k: [vectors], dim_v, lambda: [matrix per basis element], q}.
RawLambdaDoc parse_raw_lambda(const json& doc, const std::string& pointer, const LieAlgebra& alg);
json raw_lambda_to_json(const RawLambdaSample& sample);

}  // namespace pflat::io
