#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pflat/affine_rep.hpp"

namespace pflat {

enum class CaseTag { CaseA, CaseB, NotIrreducible, NotInF0, Undetermined, NonConforming };
std::string_view to_string(CaseTag t);

/// f(E) = a I with a != 0; the normalized rep uses E' = E / a.
struct CaseAWitness {
  Rational a;
  AffineRep normalized_rep;
};

/// f(E) = a I + K with K^2 = -b^2 I, and V = f(g) v0 ⊕ R f(E) v0.
struct CaseBWitness {
  ScaledComplexStructure structure;
  Vector v0;
  Subspace g_part;  // f(g) v0
  Subspace e_part;  // R f(E) v0
  bool translation_identity = false;  // q(Y) = f(Y) v0 for every basis element Y
};

struct ClassificationOutcome {
  CaseTag tag = CaseTag::Undetermined;
  std::optional<CaseAWitness> case_a;
  std::optional<CaseBWitness> case_b;
  std::optional<Polynomial> minimal_polynomial;  // of f(E)
  IrreducibilityVerdict irreducibility;
  /// Class-II conditions were also found to hold (only set for CaseA).
  bool also_class_ii = false;
  std::vector<std::string> diagnostics;
};

ClassificationOutcome classify(const AffineRep& rep, const Subalgebra& k,
                               const IrreducibilityOptions& options = {});

/// Steps after the irreducibility test, trusting the supplied verdict.
/// Lets callers probe how inconsistent inputs are reported.
ClassificationOutcome classify_given(const AffineRep& rep, const Subalgebra& k,
                                     IrreducibilityVerdict irreducibility);

struct CoverageReport {
  Verdict verdict = Verdict::Fail;
  bool in_f0 = false;
  MembershipReport membership;
  IrreducibilityVerdict irreducibility;
  std::optional<PfReport> pf;
  std::optional<ClassIIReport> class_ii;
  bool even_dimension = false;
  bool overlap = false;
  std::vector<std::string> diagnostics;
};

/// For a member of F0: projectively flat or class II, and never class II when
/// dim_m is even. Representations outside F0 pass vacuously with in_f0 = false.
CoverageReport verify_coverage(const AffineRep& rep, const Subalgebra& k, std::size_t dim_m,
                               const IrreducibilityOptions& options = {});

}  // namespace pflat
