#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pflat/affine_rep.hpp"

namespace pflat {

/// A raw Λ: one endomorphism of V per algebra basis element, with the quotient map q.
struct RawLambdaSample {
  std::string id;
  std::string description;
  AlgebraPtr algebra;
  Subalgebra k;
  Matrix q;
  std::vector<Matrix> lambda;
  std::map<std::string, Verdict> expected;
};

struct CatalogEntry {
  std::string id;
  std::string citation;
  AlgebraPtr algebra;
  Subalgebra k;
  AffineRep rep;
  std::optional<std::size_t> dim_m;
  /// Check id -> expected verdict.
  std::map<std::string, Verdict> expected;
  std::optional<std::string> expected_classification;
  /// A complex structure known in closed form, when one is.
  std::optional<ScaledComplexStructure> known_structure;
  std::vector<RawLambdaSample> raw_samples;
};

/// gl(n) acting on its first r columns by left multiplication; k is the block
/// of matrices vanishing on those columns. The basis is E_ab in row-major
/// order with E_nn replaced by the identity, which is the central element.
CatalogEntry gl_column_block(std::size_t n, std::size_t r);
/// Three-dimensional Heisenberg algebra acting simply transitively on R^3.
CatalogEntry heisenberg_flat();
/// su(2) ⊕ RE on C^2 = R^4: E acts as the identity and q̃ is bijective.
CatalogEntry su2_quaternionic();
/// Abelian span{F, E} on R^2 with f(E) a rotation by a right angle.
CatalogEntry rotation_dilation();

/// Every catalog id, in listing order.
std::vector<std::string> catalog_ids();
/// Throws Error{UnknownId}.
CatalogEntry catalog_entry(const std::string& id);

struct FamilyRecord {
  std::string family;
  std::string parameters;
  std::string note;
};

struct ClassificationTable {
  std::string id;
  std::string description;
  std::vector<FamilyRecord> families;
};

/// Semisimple Lie algebras with a left invariant projectively flat
/// connection, and irreducible symmetric spaces with an invariant one.
const std::vector<ClassificationTable>& classification_tables();

}  // namespace pflat
