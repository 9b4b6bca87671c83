#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pflat/catalog.hpp"
#include "pflat/classify.hpp"
#include "pflat/connection.hpp"
#include "pflat/error.hpp"
#include "pflat/scenario.hpp"

namespace {

using pflat::io::json;

constexpr int kExitInput = 3;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pflat::Error(pflat::ErrorCode::PreconditionViolated, "cannot write '" + path + "'");
    out << text;
  }
};

void print_error(const pflat::Error& e) { std::cerr << "error [" << pflat::to_string(e.code()) << "] " << e.what() << "\n"; }

json error_json(const std::string& source, const pflat::Error& e) {
  json err{{"code", std::string(pflat::to_string(e.code()))}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const pflat::SchemaError*>(&e)) err["pointer"] = s->pointer();
  return json{{"source", source}, {"status", "error"}, {"exit_code", kExitInput}, {"error", err}};
}

int combine_exit(int a, int b) {
  auto rank = [](int c) { return c == 3 ? 3 : c == 1 ? 2 : c == 2 ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

int run_command(const std::vector<std::string>& paths, const std::string& format, bool timing,
                const pflat::RunOptions& options, const Output& out) {
  json reports = json::array();
  std::string text;
  int code = 0;
  for (const auto& path : paths) {
    std::vector<pflat::Scenario> scenarios;
    try {
      scenarios = pflat::load_scenarios(path);
    } catch (const pflat::Error& e) {
      print_error(e);
      reports.push_back(error_json(path, e));
      text += "input " + path + ": error: " + e.what() + "\n";
      code = combine_exit(code, kExitInput);
      continue;
    }
    for (const auto& sc : scenarios) {
      const auto report = pflat::run_scenario(sc, options);
      reports.push_back(pflat::report_to_json(report, timing));
      text += pflat::report_to_text(report, timing);
      code = combine_exit(code, pflat::exit_code(report.status));
    }
  }
  if (format == "json") {
    out.write(json{{"reports", reports}, {"exit_code", code}}.dump(2) + "\n");
  } else {
    out.write(text);
  }
  return code;
}

int catalog_list(const std::string& format, const Output& out) {
  json list = json::array();
  std::string text;
  for (const auto& id : pflat::catalog_ids()) {
    const auto entry = pflat::catalog_entry(id);
    list.push_back(json{{"id", id}, {"citation", entry.citation}});
    text += id + "\t" + entry.citation + "\n";
  }
  json tables = json::array();
  for (const auto& t : pflat::classification_tables()) {
    json fams = json::array();
    text += "table " + t.id + ": " + t.description + "\n";
    for (const auto& f : t.families) {
      fams.push_back(json{{"family", f.family}, {"parameters", f.parameters}, {"note", f.note}});
      text += "  " + f.family + (f.parameters.empty() ? "" : "  (" + f.parameters + ")") +
              (f.note.empty() ? "" : "  " + f.note) + "\n";
    }
    tables.push_back(json{{"id", t.id}, {"description", t.description}, {"families", fams}});
  }
  out.write(format == "json" ? json{{"entries", list}, {"tables", tables}}.dump(2) + "\n" : text);
  return 0;
}

int catalog_emit(const std::string& id, const Output& out) {
  out.write(pflat::catalog_bundle(pflat::catalog_entry(id)).dump(2) + "\n");
  return 0;
}

std::vector<double> parse_t_range(const std::string& text) {
  double a = 0, b = 0;
  long n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 || !is.eof()) {
    throw pflat::SchemaError("/t-range", "expected start:stop:count");
  }
  std::vector<double> ts;
  for (long i = 0; i < n; ++i) ts.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  return ts;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

int orbit(const std::string& path, const std::string& direction, std::vector<double> ts, const std::string& t_range,
          const std::string& v0_text, const pflat::RunOptions& options, const Output& out) {
  if (!t_range.empty()) {
    const auto more = parse_t_range(t_range);
    ts.insert(ts.end(), more.begin(), more.end());
  }
  if (ts.empty()) throw pflat::SchemaError("/t", "no parameter values given");

  const auto scenarios = pflat::load_scenarios(path);
  const pflat::Scenario* sc = nullptr;
  for (const auto& s : scenarios) {
    if (s.rep) {
      sc = &s;
      break;
    }
  }
  if (!sc) throw pflat::SchemaError("/inputs/rep", "orbit needs a rep input");
  const auto alg = pflat::make_validated(sc->algebra);
  const auto rep = pflat::validate(pflat::AffineRep(alg, sc->rep->f, sc->rep->q, sc->rep->e_index));
  const auto k = sc->subalgebra
                     ? pflat::Subalgebra(alg, pflat::Subspace::span(alg->dim(), sc->subalgebra->vectors))
                     : pflat::Subalgebra::zero(alg);
  const auto idx = alg->index_of(direction);
  if (!idx) throw pflat::SchemaError("/direction", "no basis element labelled '" + direction + "'");

  std::optional<pflat::Vector> v0;
  std::string source;
  if (!v0_text.empty()) {
    json parsed = json::array();
    std::istringstream is(v0_text);
    for (std::string item; std::getline(is, item, ',');) parsed.push_back(item);
    v0 = pflat::io::parse_vector(parsed, "/v0", rep.dim_v());
    source = "given";
  } else {
    pflat::IrreducibilityOptions irr;
    if (options.budget) irr.budget = *options.budget;
    if (options.coeff_bound) irr.factor.coefficient_bound = *options.coeff_bound;
    if (rep.e_index()) {
      const auto c = pflat::classify(rep, k, irr);
      if (c.case_b) {
        v0 = c.case_b->v0;
        source = "classify";
      }
    }
    if (!v0 && rep.e_index()) {
      v0 = pflat::find_v0(rep, k);
      source = "cyclic vector search";
    }
  }
  if (!v0) {
    throw pflat::Error(pflat::ErrorCode::PreconditionViolated, "no v0 available; pass --v0");
  }

  std::string text = "# orbit of v0 under exp(t f(" + direction + ")), v0 from " + source + "\n# t";
  for (std::size_t i = 0; i < rep.dim_v(); ++i) text += " x" + std::to_string(i + 1);
  text += "\n";
  for (const auto& p : pflat::centro_affine_orbit(rep, *v0, pflat::unit_vector(alg->dim(), *idx), ts)) {
    text += format_number(p.t);
    for (double x : p.x) text += " " + format_number(x);
    text += "\n";
  }
  out.write(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for invariant flat and projectively flat connections"};
  app.require_subcommand(1);

  std::string format = "text";
  bool no_timing = false;
  std::optional<std::size_t> budget;
  long coeff_bound = 0;
  Output out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out.path, "Write output to this file");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Element budget of the irreducibility sweep")->check(CLI::NonNegativeNumber);
    sub->add_option("--coeff-bound", coeff_bound, "Coefficient bound for rational factorization")
        ->check(CLI::PositiveNumber);
  };

  std::vector<std::string> scenario_paths;
  auto* run = app.add_subcommand("run", "Run scenario files");
  run->add_option("scenarios", scenario_paths, "Scenario or bundle files")->required();
  run->add_flag("--no-timing", no_timing, "Omit elapsed times");
  add_common(run);
  add_budget(run);

  auto* list = app.add_subcommand("catalog-list", "List catalog entries");
  add_common(list);

  std::string emit_id;
  auto* emit = app.add_subcommand("catalog-emit", "Write a catalog entry as a scenario bundle");
  emit->add_option("id", emit_id, "Catalog id")->required();
  add_common(emit);

  std::string orbit_path, direction, t_range, v0_text;
  std::vector<double> ts;
  auto* orb = app.add_subcommand("orbit", "Sample the orbit exp(t f(X)) v0");
  orb->add_option("scenario", orbit_path, "Scenario with a rep input")->required();
  orb->add_option("--direction", direction, "Basis label X")->required();
  orb->add_option("--t", ts, "Parameter values");
  orb->add_option("--t-range", t_range, "start:stop:count");
  orb->add_option("--v0", v0_text, "Comma-separated rationals");
  add_common(orb);
  add_budget(orb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  pflat::RunOptions options;
  options.budget = budget;
  if (coeff_bound) options.coeff_bound = coeff_bound;

  try {
    if (*run) return run_command(scenario_paths, format, !no_timing, options, out);
    if (*list) return catalog_list(format, out);
    if (*emit) return catalog_emit(emit_id, out);
    if (*orb) return orbit(orbit_path, direction, ts, t_range, v0_text, options, out);
  } catch (const pflat::Error& e) {
    print_error(e);
    return kExitInput;
  }
  return kExitInput;
}
