#include "pflat/classify.hpp"

#include "pflat/error.hpp"

namespace pflat {

std::string_view to_string(CaseTag t) {
  switch (t) {
    case CaseTag::CaseA: return "CaseA";
    case CaseTag::CaseB: return "CaseB";
    case CaseTag::NotIrreducible: return "NotIrreducible";
    case CaseTag::NotInF0: return "NotInF0";
    case CaseTag::Undetermined: return "Undetermined";
    case CaseTag::NonConforming: return "NonConforming";
  }
  return "?";
}

ClassificationOutcome classify(const AffineRep& rep, const Subalgebra& k,
                               const IrreducibilityOptions& options) {
  if (!rep.e_index()) {
    throw Error(ErrorCode::MissingCentralElement, "classification needs a central element E");
  }
  if (!check_f_membership(rep, k).passed) return classify_given(rep, k, {});
  return classify_given(rep, k, is_irreducible(rep, options));
}

ClassificationOutcome classify_given(const AffineRep& rep, const Subalgebra& k,
                                     IrreducibilityVerdict irreducibility) {
  if (!rep.e_index()) {
    throw Error(ErrorCode::MissingCentralElement, "classification needs a central element E");
  }
  const std::size_t e = *rep.e_index();
  const std::size_t n = rep.dim_v();
  ClassificationOutcome out;

  const auto membership = check_f_membership(rep, k);
  if (!membership.passed) {
    out.tag = CaseTag::NotInF0;
    if (!membership.surjective) out.diagnostics.push_back("q is not surjective");
    if (!membership.kernel_matches) out.diagnostics.push_back("kernel of q differs from k");
    if (!membership.dimension_matches) out.diagnostics.push_back("dim V differs from dim g~ - dim k");
    return out;
  }
  out.irreducibility = std::move(irreducibility);
  if (out.irreducibility.status != Irreducibility::Irreducible) {
    out.tag = out.irreducibility.status == Irreducibility::Reducible ? CaseTag::NotIrreducible
                                                                    : CaseTag::Undetermined;
    out.diagnostics.push_back(out.irreducibility.certificate);
    return out;
  }

  const Matrix& fe = rep.f(e);
  const Polynomial p = minimal_polynomial(fe);
  out.minimal_polynomial = p;
  out.diagnostics.push_back("minimal polynomial of f(E): " + p.str());

  if (p.degree() == 1) {
    const Rational a = -p.coefficient(0);
    if (a.is_zero()) {
      out.tag = CaseTag::NonConforming;
      out.diagnostics.push_back(
          "f(E) = 0 forces f(X) q(E) = 0 for all X, so q(E) lies in an invariant proper subspace "
          "or vanishes, contradicting ker q = k");
      return out;
    }
    out.tag = CaseTag::CaseA;
    out.case_a = CaseAWitness{a, rescale_central(rep, k, a.inverse()).rep};
    const auto s = find_scaled_complex_structure(rep);
    const auto v0 = s ? find_v0(rep, k) : std::nullopt;
    if (s && v0) {
      out.also_class_ii = true;
      out.diagnostics.push_back(
          "class-II conditions also hold: the projectively flat and class-II sets overlap here");
    }
    return out;
  }

  if (p.degree() == 2) {
    const Rational pc = p.coefficient(1), qc = p.coefficient(0);
    const Rational a = -pc / Rational(2);
    const Rational b2 = qc - pc * pc / Rational(4);
    if (b2.sign() <= 0) {
      out.tag = CaseTag::NonConforming;
      out.diagnostics.push_back(
          "f(E) has real eigenvalues but is not scalar (or is not semisimple); irreducibility "
          "forces f(E) = aI or aI + bJ");
      return out;
    }
    CaseBWitness w;
    w.structure = ScaledComplexStructure{fe - Matrix::scalar(n, a), a, b2};
    if (!verify_complex_structure(rep, w.structure)) {
      out.tag = CaseTag::NonConforming;
      out.diagnostics.push_back("K = f(E) - aI does not commute with every f(X)");
      return out;
    }
    const Rational norm = a * a + b2;
    w.v0 = norm.inverse() * ((Matrix::scalar(n, Rational(2) * a) - fe) * rep.q(e));
    bool kills_k = true;
    for (const auto& z : k.subspace().basis())
      if (!is_zero(rep.f_of(z) * w.v0)) kills_k = false;
    w.g_part = orbit_tangent(rep, w.v0);
    w.e_part = Subspace::span(n, {fe * w.v0});
    const bool direct = direct_sum_check(w.g_part, w.e_part) && subspace_sum(w.g_part, w.e_part).is_full();
    w.translation_identity = true;
    for (std::size_t y = 0; y < rep.dim(); ++y)
      if (rep.q(y) != rep.f(y) * w.v0) w.translation_identity = false;
    if (!kills_k || !direct) {
      out.tag = CaseTag::NonConforming;
      out.diagnostics.push_back(!kills_k ? "f(k) v0 != 0" : "V is not f(g) v0 ⊕ R f(E) v0");
      return out;
    }
    out.tag = CaseTag::CaseB;
    out.case_b = std::move(w);
    return out;
  }

  out.tag = CaseTag::NonConforming;
  out.diagnostics.push_back(
      "f(E) is neither scalar nor of the form aI + bJ; a completely reducible representation "
      "cannot have this minimal polynomial");
  return out;
}

CoverageReport verify_coverage(const AffineRep& rep, const Subalgebra& k, std::size_t dim_m,
                               const IrreducibilityOptions& options) {
  if (!rep.e_index()) {
    throw Error(ErrorCode::MissingCentralElement, "coverage check needs a central element E");
  }
  CoverageReport r;
  r.even_dimension = dim_m % 2 == 0;
  r.membership = check_f_membership(rep, k);
  r.irreducibility = is_irreducible(rep, options);
  if (r.irreducibility.status == Irreducibility::Undetermined && r.membership.passed) {
    r.verdict = Verdict::Undetermined;
    r.diagnostics.push_back("membership in F0 undetermined: " + r.irreducibility.certificate);
    return r;
  }
  r.in_f0 = r.membership.passed && r.irreducibility.status == Irreducibility::Irreducible;
  if (!r.in_f0) {
    r.verdict = Verdict::Pass;
    r.diagnostics.push_back("not in F0; the statement holds vacuously");
    return r;
  }
  r.pf = is_pf(rep, k);
  r.class_ii = is_class_ii(rep, k, dim_m, options);
  const bool ii = r.class_ii->verdict == Verdict::Pass;
  r.overlap = r.pf->passed && ii;
  const bool covered = r.pf->passed || ii;
  const bool parity_ok = !r.even_dimension || r.class_ii->verdict == Verdict::Fail;
  if (!covered) r.diagnostics.push_back("neither projectively flat nor class II");
  if (!parity_ok) r.diagnostics.push_back("class II holds although dim M is even");
  if (r.pf->passed) r.diagnostics.push_back("covered by the projectively flat branch");
  if (ii) r.diagnostics.push_back("covered by the class-II branch");
  if (r.overlap) r.diagnostics.push_back("overlap: both branches hold; disjointness is not asserted");
  r.verdict = covered && parity_ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

}  // namespace pflat
