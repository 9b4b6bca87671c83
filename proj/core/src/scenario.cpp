#include "pflat/scenario.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "pflat/classify.hpp"
#include "pflat/connection.hpp"
#include "pflat/error.hpp"

namespace pflat {

using io::json;

namespace {

const std::map<std::string, std::string>& citations() {
  static const std::map<std::string, std::string> m{
      {"jacobi", "Jacobi identity for the structure constants"},
      {"subalgebra", "closure of the isotropy subalgebra k under the bracket"},
      {"affine_rep", "affine representation laws: f is a homomorphism and q a cocycle"},
      {"membership", "q surjective with kernel k and dim V = dim g - dim k"},
      {"flat", "vanishing torsion and curvature of the invariant connection at the origin"},
      {"weyl", "projective Weyl tensor vanishes at the origin"},
      {"codazzi", "Codazzi equation for the Ricci tensor at the origin"},
      {"equivariance", "Λ extends the isotropy action and is k-equivariant"},
      {"irreducible", "irreducibility of f over the reals"},
      {"pf", "projectively flat class: f(E) scalar and q(E) nonzero"},
      {"class_ii", "class II: irreducible, invariant complex structure and cyclic vector"},
      {"classify", "constructive classification into the scalar and complex-structure cases"},
      {"theorem_3_3", "members of F0 are projectively flat or class II; even dim M excludes class II"},
  };
  return m;
}

const std::set<std::string> kNeedsRep{"affine_rep", "membership", "irreducible", "pf",
                                      "class_ii",   "classify",   "theorem_3_3"};
const std::set<std::string> kNeedsConnection{"flat", "weyl", "codazzi", "equivariance"};
const std::set<std::string> kNeedsDimM{"class_ii", "theorem_3_3"};

CheckStatus parse_status(const json& v, const std::string& pointer) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    for (auto st : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Undetermined, CheckStatus::Error}) {
      if (s == to_string(st)) return st;
    }
  }
  throw SchemaError(pointer, "expected one of pass, fail, undetermined, error");
}

std::string status_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Undetermined: return "undetermined";
  }
  return "error";
}

json read_json_file(const std::filesystem::path& path, const std::string& pointer) {
  std::ifstream in(path);
  if (!in) throw SchemaError(pointer, "cannot read '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(pointer, "invalid JSON in '" + path.string() + "': " + e.what());
  }
}

void reject_unknown_keys(const json& doc, const std::string& pointer, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) throw SchemaError(pointer + "/" + key, "unknown field");
  }
}

std::optional<std::size_t> optional_count(const json& doc, const std::string& key, const std::string& pointer) {
  if (!doc.contains(key)) return std::nullopt;
  const json& v = doc[key];
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw SchemaError(pointer + "/" + key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json labels(const LieAlgebra& alg, std::initializer_list<std::size_t> idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(alg.basis_labels().at(i));
  return out;
}

std::string join(const json& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i].get<std::string>();
  return s + ")";
}

json structure_to_json(const ScaledComplexStructure& s) {
  return json{{"k", io::to_json(s.k_mat)}, {"a", io::to_json(s.a)}, {"b_squared", io::to_json(s.b_squared)}};
}

json irreducibility_to_json(const IrreducibilityVerdict& v) {
  json out{{"status", std::string(to_string(v.status))},
           {"certificate", v.certificate},
           {"elements_tried", v.elements_tried},
           {"commutant_dim", v.commutant_dim}};
  if (v.real_type) out["real_type"] = std::string(to_string(*v.real_type));
  if (v.witness) out["witness"] = io::to_json(*v.witness);
  return out;
}

json membership_to_json(const MembershipReport& m) {
  return json{{"passed", m.passed},
              {"surjective", m.surjective},
              {"kernel_matches", m.kernel_matches},
              {"dimension_matches", m.dimension_matches},
              {"rank", m.rank},
              {"kernel", io::to_json(m.kernel)}};
}

json pf_to_json(const PfReport& r) {
  json out{{"passed", r.passed}, {"q_e_nonzero", r.q_e_nonzero}, {"membership", membership_to_json(r.membership)}};
  if (r.c) out["c"] = io::to_json(*r.c);
  return out;
}

json class_ii_to_json(const ClassIIReport& r) {
  json out{{"verdict", status_name(r.verdict)},
           {"dimension_matches", r.dimension_matches},
           {"irreducibility", irreducibility_to_json(r.irreducibility)}};
  if (r.structure) out["structure"] = structure_to_json(*r.structure);
  if (r.v0) out["v0"] = io::to_json(*r.v0);
  return out;
}

CheckStatus from_verdict(Verdict v) {
  switch (v) {
    case Verdict::Pass: return CheckStatus::Pass;
    case Verdict::Fail: return CheckStatus::Fail;
    case Verdict::Undetermined: return CheckStatus::Undetermined;
  }
  return CheckStatus::Error;
}

CheckStatus from_bool(bool passed) { return passed ? CheckStatus::Pass : CheckStatus::Fail; }

/// Lazily built objects shared by the checks of one scenario.
class Context {
 public:
  Context(const Scenario& sc, const RunOptions& run) : sc_(sc) {
    if (auto b = run.budget ? run.budget : sc.options.budget) irr_.budget = *b;
    if (auto c = run.coeff_bound ? run.coeff_bound : sc.options.coeff_bound) irr_.factor.coefficient_bound = *c;
    irr_.structural_fallback = sc.options.structural_fallback;
  }

  const Scenario& scenario() const { return sc_; }
  const IrreducibilityOptions& irreducibility_options() const { return irr_; }

  const AlgebraPtr& algebra() {
    if (!alg_) alg_ = make_validated(sc_.algebra);
    return *alg_;
  }

  const Subalgebra& k() {
    if (!k_) {
      if (sc_.subalgebra) {
        k_ = Subalgebra(algebra(), Subspace::span(sc_.algebra.dim(), sc_.subalgebra->vectors));
      } else if (sc_.raw_lambda) {
        k_ = Subalgebra(algebra(), Subspace::span(sc_.algebra.dim(), sc_.raw_lambda->k));
      } else {
        k_ = Subalgebra::zero(algebra());
      }
    }
    return *k_;
  }

  const AffineRep& raw_rep() {
    if (!raw_rep_) {
      const auto& d = *sc_.rep;
      raw_rep_ = AffineRep(algebra(), d.f, d.q, d.e_index);
    }
    return *raw_rep_;
  }

  const AffineRep& rep() {
    if (!rep_) rep_ = validate(raw_rep());
    return *rep_;
  }

  const Subalgebra& connection_k() {
    if (!conn_k_) {
      conn_k_ = sc_.raw_lambda ? Subalgebra(algebra(), Subspace::span(sc_.algebra.dim(), sc_.raw_lambda->k)) : k();
    }
    return *conn_k_;
  }

  const ConnectionData& connection() {
    if (!conn_) {
      if (sc_.raw_lambda) {
        conn_ = ConnectionData::from_raw(algebra(), connection_k(), sc_.raw_lambda->q, sc_.raw_lambda->lambda);
      } else {
        conn_ = ConnectionData::from_rep(raw_rep(), k());
      }
    }
    return *conn_;
  }

  std::size_t dim_m() const { return *sc_.options.dim_m; }

 private:
  const Scenario& sc_;
  IrreducibilityOptions irr_;
  std::optional<AlgebraPtr> alg_;
  std::optional<Subalgebra> k_;
  std::optional<AffineRep> raw_rep_;
  std::optional<AffineRep> rep_;
  std::optional<Subalgebra> conn_k_;
  std::optional<ConnectionData> conn_;
};

using CheckFn = std::function<void(Context&, CheckRecord&, ScenarioReport&)>;

void run_jacobi(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const LieAlgebra& alg = ctx.scenario().algebra;
  const auto r = check_jacobi(alg);
  rec.status = from_bool(r.passed);
  rec.witnesses["violations"] = r.violations.size();
  if (r.passed) {
    rec.summary = "Jacobi identity holds on all basis triples";
    return;
  }
  const auto& v = r.violations.front();
  const json triple = labels(alg, {v.i, v.j, v.k});
  rec.witnesses["triple"] = triple;
  rec.witnesses["residual"] = io::to_json(v.residual);
  rec.summary = "Jacobi identity fails on " + join(triple);
}

void run_subalgebra(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto& sc = ctx.scenario();
  const auto& vectors = sc.subalgebra ? sc.subalgebra->vectors : sc.raw_lambda->k;
  const Subspace s = Subspace::span(sc.algebra.dim(), vectors);
  const auto r = check_subalgebra(sc.algebra, s);
  rec.status = from_bool(r.passed);
  rec.witnesses["dim"] = s.dim();
  if (r.passed) {
    rec.summary = "k is closed under the bracket";
    return;
  }
  rec.witnesses["offending_pair"] = json::array({r.offending_pair->first, r.offending_pair->second});
  rec.witnesses["escaped_bracket"] = io::to_json(r.escaped_bracket);
  rec.summary = "bracket of k basis vectors " + std::to_string(r.offending_pair->first) + " and " +
                std::to_string(r.offending_pair->second) + " leaves k";
}

void run_affine_rep(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto& rep = ctx.raw_rep();
  const auto r = check_affine_rep(rep);
  rec.status = from_bool(r.passed);
  if (r.passed) {
    rec.summary = "homomorphism and cocycle laws hold on all basis pairs";
    return;
  }
  const json pair = labels(*rep.algebra(), {r.offending_pair->first, r.offending_pair->second});
  rec.witnesses["failed_law"] = r.failed_law;
  rec.witnesses["pair"] = pair;
  rec.witnesses["f_residual"] = io::to_json(r.f_residual);
  rec.witnesses["q_residual"] = io::to_json(r.q_residual);
  rec.summary = r.failed_law + " law fails on " + join(pair);
}

void run_membership(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto r = check_f_membership(ctx.rep(), ctx.k());
  rec.status = from_bool(r.passed);
  rec.witnesses = membership_to_json(r);
  rec.summary = r.passed ? "q is onto V with kernel k" : "q is not onto V with kernel k";
}

void run_flat_on_basis(Context& ctx, CheckRecord& rec, const Error& why) {
  const auto& rep = ctx.raw_rep();
  const auto r = check_flat_on_basis(*rep.algebra(), rep.q_mat(), rep.f_mats());
  rec.status = from_bool(r.passed);
  rec.diagnostics.push_back("no tangent section (" + std::string(why.what()) +
                            "); evaluated on algebra basis pairs with X_o = q(X)");
  rec.witnesses["torsion_zero"] = r.torsion_zero;
  rec.witnesses["curvature_zero"] = r.curvature_zero;
  if (r.passed) {
    rec.summary = "torsion and curvature vanish on basis pairs";
    return;
  }
  const auto [i, j] = *r.offending_pair;
  const json pair = labels(*rep.algebra(), {i, j});
  rec.witnesses["pair"] = pair;
  rec.summary = std::string(r.torsion_zero ? "curvature" : "torsion") + " nonzero on " + join(pair);
}

void run_flat(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  if (ctx.scenario().rep && !ctx.scenario().raw_lambda) {
    try {
      ctx.connection();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSurjective && e.code() != ErrorCode::PreconditionViolated) throw;
      run_flat_on_basis(ctx, rec, e);
      return;
    }
  }
  const auto& conn = ctx.connection();
  const auto r = check_flat(conn);
  rec.status = from_bool(r.passed);
  rec.witnesses["torsion_zero"] = r.torsion_zero;
  rec.witnesses["curvature_zero"] = r.curvature_zero;
  if (r.passed) {
    rec.summary = "torsion and curvature vanish";
    return;
  }
  const auto [u, w] = *r.offending_pair;
  const json pair = json::array({conn.tangent_label(u), conn.tangent_label(w)});
  rec.witnesses["pair"] = pair;
  rec.witnesses["torsion"] = io::to_json(torsion(conn).at(u, w));
  rec.witnesses["curvature"] = io::to_json(curvature(conn).at(u, w));
  rec.summary = std::string(r.torsion_zero ? "curvature" : "torsion") + " nonzero on " + join(pair);
}

void record_triple(const ConnectionData& conn, const TripleReport& r, CheckRecord& rec, const std::string& what) {
  rec.status = from_bool(r.passed);
  if (r.passed) {
    rec.summary = what + " holds on all tangent triples";
    return;
  }
  const json triple =
      json::array({conn.tangent_label(*r.x), conn.tangent_label(*r.y), conn.tangent_label(*r.z)});
  rec.witnesses["triple"] = triple;
  rec.witnesses["residual"] = io::to_json(r.residual);
  rec.summary = what + " fails on " + join(triple);
}

void run_weyl(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto& conn = ctx.connection();
  record_triple(conn, check_weyl(conn), rec, "Weyl identity");
  rec.witnesses["ricci"] = io::to_json(ricci(conn).entries);
}

void run_codazzi(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto& conn = ctx.connection();
  record_triple(conn, check_codazzi(conn), rec, "Codazzi equation");
  rec.witnesses["ricci"] = io::to_json(ricci(conn).entries);
}

void run_equivariance(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto& conn = ctx.connection();
  const auto r = check_equivariance_infinitesimal(conn, ctx.connection_k());
  rec.status = from_bool(r.passed);
  if (r.passed) {
    rec.summary = "Λ is compatible with the isotropy action";
    return;
  }
  rec.witnesses["failed_condition"] = r.failed_condition;
  if (r.z_index) rec.witnesses["k_index"] = *r.z_index;
  if (r.x_index) rec.witnesses["x"] = conn.algebra()->basis_labels().at(*r.x_index);
  rec.summary = r.failed_condition + " condition fails";
}

void run_irreducible(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto v = is_irreducible(ctx.rep(), ctx.irreducibility_options());
  rec.status = v.status == Irreducibility::Irreducible ? CheckStatus::Pass
               : v.status == Irreducibility::Reducible ? CheckStatus::Fail
                                                       : CheckStatus::Undetermined;
  rec.witnesses = irreducibility_to_json(v);
  rec.summary = std::string(to_string(v.status));
  if (v.witness) rec.summary += ", invariant subspace of dim " + std::to_string(v.witness->dim());
}

void run_pf(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto r = is_pf(ctx.rep(), ctx.k());
  rec.status = from_bool(r.passed);
  rec.witnesses = pf_to_json(r);
  rec.summary = r.c ? "f(E) = " + r.c->str() + " I" : "f(E) is not scalar";
  if (!r.q_e_nonzero) rec.summary += ", q(E) = 0";
}

void run_class_ii(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto r = is_class_ii(ctx.rep(), ctx.k(), ctx.dim_m(), ctx.irreducibility_options());
  rec.status = from_verdict(r.verdict);
  rec.witnesses = class_ii_to_json(r);
  rec.summary = r.verdict == Verdict::Pass ? "complex structure and cyclic vector found"
                : !r.dimension_matches     ? "dim V differs from dim M + 1"
                : !r.structure             ? "no invariant complex structure"
                                           : "no cyclic vector found";
  if (r.verdict == Verdict::Undetermined) rec.summary = "irreducibility undetermined";
}

void run_classify(Context& ctx, CheckRecord& rec, ScenarioReport& report) {
  const auto out = classify(ctx.rep(), ctx.k(), ctx.irreducibility_options());
  const std::string tag(to_string(out.tag));
  report.classification = tag;
  rec.status = (out.tag == CaseTag::CaseA || out.tag == CaseTag::CaseB) ? CheckStatus::Pass
               : out.tag == CaseTag::Undetermined                       ? CheckStatus::Undetermined
                                                                        : CheckStatus::Fail;
  rec.witnesses["tag"] = tag;
  rec.witnesses["irreducibility"] = irreducibility_to_json(out.irreducibility);
  rec.witnesses["also_class_ii"] = out.also_class_ii;
  if (out.minimal_polynomial) {
    std::ostringstream os;
    os << *out.minimal_polynomial;
    rec.witnesses["minimal_polynomial"] = os.str();
  }
  if (out.case_a) {
    const auto& n = out.case_a->normalized_rep;
    rec.witnesses["case_a"] = json{{"a", io::to_json(out.case_a->a)},
                                   {"normalized_f_e", io::to_json(n.f(*n.e_index()))},
                                   {"normalized_q_e", io::to_json(n.q(*n.e_index()))}};
  }
  if (out.case_b) {
    const auto& b = *out.case_b;
    rec.witnesses["case_b"] = json{{"structure", structure_to_json(b.structure)},
                                   {"v0", io::to_json(b.v0)},
                                   {"g_part", io::to_json(b.g_part)},
                                   {"e_part", io::to_json(b.e_part)},
                                   {"translation_identity", b.translation_identity}};
  }
  rec.diagnostics = out.diagnostics;
  rec.summary = "tag " + tag;
}

void run_theorem_3_3(Context& ctx, CheckRecord& rec, ScenarioReport&) {
  const auto r = verify_coverage(ctx.rep(), ctx.k(), ctx.dim_m(), ctx.irreducibility_options());
  rec.status = from_verdict(r.verdict);
  rec.witnesses["in_f0"] = r.in_f0;
  rec.witnesses["even_dimension"] = r.even_dimension;
  rec.witnesses["overlap"] = r.overlap;
  rec.witnesses["membership"] = membership_to_json(r.membership);
  rec.witnesses["irreducibility"] = irreducibility_to_json(r.irreducibility);
  if (r.pf) rec.witnesses["pf"] = pf_to_json(*r.pf);
  if (r.class_ii) rec.witnesses["class_ii"] = class_ii_to_json(*r.class_ii);
  rec.diagnostics = r.diagnostics;
  if (!r.in_f0) {
    rec.summary = "not in F0; holds vacuously";
  } else {
    const bool pf = r.pf && r.pf->passed;
    const bool c2 = r.class_ii && r.class_ii->verdict == Verdict::Pass;
    rec.summary = std::string("projectively flat: ") + (pf ? "yes" : "no") + ", class II: " + (c2 ? "yes" : "no");
  }
}

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> t{
      {"jacobi", run_jacobi},           {"subalgebra", run_subalgebra},   {"affine_rep", run_affine_rep},
      {"membership", run_membership},   {"flat", run_flat},               {"weyl", run_weyl},
      {"codazzi", run_codazzi},         {"equivariance", run_equivariance}, {"irreducible", run_irreducible},
      {"pf", run_pf},                   {"class_ii", run_class_ii},       {"classify", run_classify},
      {"theorem_3_3", run_theorem_3_3},
  };
  return t;
}

json expected_to_json(const std::map<std::string, Verdict>& expected) {
  json out = json::object();
  for (const auto& [k, v] : expected) out[k] = status_name(v);
  return out;
}

json ordered_checks(const std::map<std::string, Verdict>& expected) {
  json out = json::array();
  for (const auto& id : check_ids()) {
    if (expected.count(id)) out.push_back(id);
  }
  return out;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Undetermined: return "undetermined";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

CheckStatus worst(CheckStatus a, CheckStatus b) {
  auto rank = [](CheckStatus s) {
    switch (s) {
      case CheckStatus::Pass: return 0;
      case CheckStatus::Undetermined: return 1;
      case CheckStatus::Fail: return 2;
      case CheckStatus::Error: return 3;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

int exit_code(CheckStatus overall) {
  switch (overall) {
    case CheckStatus::Pass: return 0;
    case CheckStatus::Undetermined: return 2;
    case CheckStatus::Fail:
    case CheckStatus::Error: return 1;
  }
  return 1;
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"jacobi",       "subalgebra",  "affine_rep", "membership", "flat",
                                            "weyl",         "codazzi",     "equivariance", "irreducible", "pf",
                                            "class_ii",     "classify",    "theorem_3_3"};
  return ids;
}

const std::string& check_citation(const std::string& id) {
  const auto it = citations().find(id);
  if (it == citations().end()) throw Error(ErrorCode::UnknownId, "unknown check '" + id + "'");
  return it->second;
}

Scenario parse_scenario(const json& doc, const std::filesystem::path& base_dir, const std::string& pointer) {
  if (!doc.is_object()) throw SchemaError(pointer, "expected a scenario object");
  reject_unknown_keys(doc, pointer,
                      {"name", "description", "inputs", "checks", "options", "expected", "expected_classification"});
  const std::string np = pointer + "/name";
  if (!doc.contains("name") || !doc["name"].is_string()) throw SchemaError(np, "expected a scenario name");

  const std::string ip = pointer + "/inputs";
  if (!doc.contains("inputs") || !doc["inputs"].is_object()) throw SchemaError(ip, "expected an inputs object");
  const json& inputs = doc["inputs"];
  reject_unknown_keys(inputs, ip, {"algebra", "subalgebra", "rep", "raw_lambda"});
  auto resolve = [&](const std::string& key) -> std::optional<json> {
    if (!inputs.contains(key)) return std::nullopt;
    const json& v = inputs[key];
    if (v.is_string()) return read_json_file(base_dir / v.get<std::string>(), ip + "/" + key);
    if (!v.is_object()) throw SchemaError(ip + "/" + key, "expected an inline document or a file path");
    return std::optional<json>(std::in_place, v);
  };

  const auto alg_doc = resolve("algebra");
  if (!alg_doc) throw SchemaError(ip + "/algebra", "missing required input");
  Scenario sc{doc["name"].get<std::string>(), io::parse_algebra(*alg_doc, ip + "/algebra"), {}, {}, {}, {}, {}, {}, {}};
  if (auto d = resolve("subalgebra")) sc.subalgebra = io::parse_subalgebra(*d, ip + "/subalgebra", sc.algebra);
  if (auto d = resolve("rep")) sc.rep = io::parse_rep(*d, ip + "/rep", sc.algebra);
  if (auto d = resolve("raw_lambda")) sc.raw_lambda = io::parse_raw_lambda(*d, ip + "/raw_lambda", sc.algebra);

  const std::string op = pointer + "/options";
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) throw SchemaError(op, "expected an object");
    reject_unknown_keys(o, op, {"dim_m", "budget", "coeff_bound", "structural_fallback"});
    if (o.contains("structural_fallback")) {
      if (!o["structural_fallback"].is_boolean()) throw SchemaError(op + "/structural_fallback", "expected a boolean");
      sc.options.structural_fallback = o["structural_fallback"].get<bool>();
    }
    sc.options.dim_m = optional_count(o, "dim_m", op);
    sc.options.budget = optional_count(o, "budget", op);
    if (auto c = optional_count(o, "coeff_bound", op)) sc.options.coeff_bound = static_cast<long>(*c);
  }

  const std::string cp = pointer + "/checks";
  if (!doc.contains("checks") || !doc["checks"].is_array()) throw SchemaError(cp, "expected an array of check ids");
  const json& checks = doc["checks"];
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string p = cp + "/" + std::to_string(i);
    if (!checks[i].is_string()) throw SchemaError(p, "expected a check id");
    const std::string id = checks[i].get<std::string>();
    if (!citations().count(id)) throw SchemaError(p, "unknown check '" + id + "'");
    if (kNeedsRep.count(id) && !sc.rep) throw SchemaError(p, "check '" + id + "' needs a rep input");
    if (kNeedsConnection.count(id) && !sc.rep && !sc.raw_lambda) {
      throw SchemaError(p, "check '" + id + "' needs a rep or raw_lambda input");
    }
    if (id == "subalgebra" && !sc.subalgebra && !sc.raw_lambda) {
      throw SchemaError(p, "check 'subalgebra' needs a subalgebra or raw_lambda input");
    }
    if (kNeedsDimM.count(id) && !sc.options.dim_m) throw SchemaError(p, "check '" + id + "' needs options.dim_m");
    sc.checks.push_back(id);
  }

  if (doc.contains("expected")) {
    const std::string ep = pointer + "/expected";
    if (!doc["expected"].is_object()) throw SchemaError(ep, "expected an object");
    for (const auto& [key, value] : doc["expected"].items()) {
      if (!citations().count(key)) throw SchemaError(ep + "/" + key, "unknown check");
      sc.expected[key] = parse_status(value, ep + "/" + key);
    }
  }
  if (doc.contains("expected_classification")) {
    const json& v = doc["expected_classification"];
    if (!v.is_string()) throw SchemaError(pointer + "/expected_classification", "expected a case tag");
    sc.expected_classification = v.get<std::string>();
  }
  return sc;
}

std::vector<Scenario> load_scenarios(const std::filesystem::path& path) {
  const json doc = read_json_file(path, "");
  const auto base = path.parent_path();
  std::vector<Scenario> out;
  if (doc.is_object() && doc.contains("scenarios")) {
    reject_unknown_keys(doc, "", {"catalog_id", "citation", "scenarios"});
    const json& list = doc["scenarios"];
    if (!list.is_array()) throw SchemaError("/scenarios", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.push_back(parse_scenario(list[i], base, "/scenarios/" + std::to_string(i)));
    }
  } else {
    out.push_back(parse_scenario(doc, base));
  }
  return out;
}

bool ScenarioReport::expectations_met() const {
  for (const auto& [name, status] : expected) {
    for (const auto& rec : checks) {
      if (rec.name == name && rec.status != status) return false;
    }
  }
  return !expected_classification || expected_classification == classification;
}

ScenarioReport run_scenario(const Scenario& scenario, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ScenarioReport report;
  report.name = scenario.name;
  report.expected = scenario.expected;
  report.expected_classification = scenario.expected_classification;
  Context ctx(scenario, options);
  for (const auto& id : scenario.checks) {
    CheckRecord rec;
    rec.name = id;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check_table().at(id)(ctx, rec, report);
    } catch (const Error& e) {
      rec.status = CheckStatus::Error;
      rec.witnesses = json::object();
      rec.summary = std::string(to_string(e.code())) + ": " + e.what();
      rec.diagnostics.push_back(rec.summary);
    }
    rec.elapsed_ms = ms_since(t0);
    report.status = worst(report.status, rec.status);
    report.checks.push_back(std::move(rec));
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

json report_to_json(const ScenarioReport& report, bool timing) {
  json checks = json::array();
  for (const auto& rec : report.checks) {
    json c{{"name", rec.name},
           {"status", std::string(to_string(rec.status))},
           {"citation", check_citation(rec.name)},
           {"summary", rec.summary},
           {"witnesses", rec.witnesses},
           {"diagnostics", rec.diagnostics}};
    if (const auto it = report.expected.find(rec.name); it != report.expected.end()) {
      c["expected"] = std::string(to_string(it->second));
    }
    if (timing) c["elapsed_ms"] = rec.elapsed_ms;
    checks.push_back(std::move(c));
  }
  json out{{"scenario", report.name},
           {"status", std::string(to_string(report.status))},
           {"exit_code", exit_code(report.status)},
           {"checks", std::move(checks)}};
  if (report.classification) out["classification"] = *report.classification;
  if (report.expected_classification) out["expected_classification"] = *report.expected_classification;
  if (!report.expected.empty() || report.expected_classification) out["expectations_met"] = report.expectations_met();
  if (timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::string report_to_text(const ScenarioReport& report, bool timing) {
  std::ostringstream os;
  os << "scenario " << report.name << ": " << to_string(report.status) << "\n";
  for (const auto& rec : report.checks) {
    os << "  " << rec.name << std::string(rec.name.size() < 14 ? 14 - rec.name.size() : 1, ' ')
       << to_string(rec.status) << std::string(14 - to_string(rec.status).size(), ' ') << rec.summary;
    if (const auto it = report.expected.find(rec.name); it != report.expected.end() && it->second != rec.status) {
      os << "  [expected " << to_string(it->second) << "]";
    }
    if (timing) {
      std::ostringstream ms;
      ms.precision(3);
      ms << std::fixed << rec.elapsed_ms;
      os << "  (" << ms.str() << " ms)";
    }
    os << "\n";
    for (const auto& d : rec.diagnostics) {
      if (d != rec.summary) os << "      note: " << d << "\n";
    }
  }
  if (!report.expected.empty() || report.expected_classification) {
    os << "  expectations " << (report.expectations_met() ? "met" : "NOT met") << "\n";
  }
  return os.str();
}

json catalog_bundle(const CatalogEntry& entry) {
  const json alg = io::algebra_to_json(*entry.algebra);
  json scenarios = json::array();
  json main{{"name", entry.id},
            {"description", entry.citation},
            {"inputs",
             {{"algebra", alg},
              {"subalgebra", io::subalgebra_to_json(*entry.algebra, entry.k.subspace())},
              {"rep", io::rep_to_json(entry.rep)}}},
            {"checks", ordered_checks(entry.expected)},
            {"expected", expected_to_json(entry.expected)}};
  if (entry.dim_m) main["options"] = json{{"dim_m", *entry.dim_m}};
  if (entry.expected_classification) main["expected_classification"] = *entry.expected_classification;
  scenarios.push_back(std::move(main));
  for (const auto& s : entry.raw_samples) {
    scenarios.push_back(json{{"name", entry.id + "/" + s.id},
                             {"description", s.description},
                             {"inputs", {{"algebra", io::algebra_to_json(*s.algebra)}, {"raw_lambda", io::raw_lambda_to_json(s)}}},
                             {"checks", ordered_checks(s.expected)},
                             {"expected", expected_to_json(s.expected)}});
  }
  return json{{"catalog_id", entry.id}, {"citation", entry.citation}, {"scenarios", std::move(scenarios)}};
}

}  // namespace pflat
