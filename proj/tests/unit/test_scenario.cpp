#include <gtest/gtest.h>

#include "pflat/catalog.hpp"
#include "pflat/error.hpp"
#include "pflat/io.hpp"
#include "pflat/scenario.hpp"

using namespace pflat;
using io::json;

namespace {

std::string pointer_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<no error>";
}

json heisenberg_doc() {
  return json::parse(R"({"name": "h", "dim": 3, "basis": ["X", "Y", "Z"],
                         "brackets": [{"i": 0, "j": 1, "terms": [[2, "1"]]}]})");
}

}  // namespace

TEST(Io, Rationals) {
  EXPECT_EQ(io::parse_rational(json("-3/6"), ""), Rational(-1, 2));
  EXPECT_EQ(io::parse_rational(json(7), ""), Rational(7));
  EXPECT_EQ(io::parse_rational(json("12345678901234567890"), "").str(), "12345678901234567890");
  EXPECT_EQ(pointer_of([] { io::parse_rational(json(0.5), "/x"); }), "/x");
  EXPECT_EQ(pointer_of([] { io::parse_rational(json("1/0"), "/x"); }), "/x");
  EXPECT_EQ(io::to_json(Rational(4, -6)), json("-2/3"));
}

TEST(Io, AlgebraRoundTrip) {
  for (const auto& id : catalog_ids()) {
    const auto e = catalog_entry(id);
    const json doc = io::algebra_to_json(*e.algebra);
    const LieAlgebra back = io::parse_algebra(doc, "");
    EXPECT_EQ(back.basis_labels(), e.algebra->basis_labels());
    EXPECT_EQ(back.structure_constants(), e.algebra->structure_constants());
    EXPECT_EQ(io::algebra_to_json(back).dump(), doc.dump());
  }
}

TEST(Io, RepRoundTrip) {
  const auto e = su2_quaternionic();
  const auto doc = io::rep_to_json(e.rep);
  const auto back = io::parse_rep(doc, "", *e.algebra);
  EXPECT_EQ(back.f, e.rep.f_mats());
  EXPECT_EQ(back.q, e.rep.q_mat());
  EXPECT_EQ(back.e_index, e.rep.e_index());
}

TEST(Io, SchemaPointers) {
  json doc = heisenberg_doc();
  doc["brackets"][0]["terms"][0][0] = 3;
  EXPECT_EQ(pointer_of([&] { io::parse_algebra(doc, "/inputs/algebra"); }), "/inputs/algebra/brackets/0/terms/0/0");

  doc = heisenberg_doc();
  doc["brackets"][0]["i"] = 2;
  EXPECT_EQ(pointer_of([&] { io::parse_algebra(doc, ""); }), "/brackets/0");

  doc = heisenberg_doc();
  doc.erase("dim");
  EXPECT_EQ(pointer_of([&] { io::parse_algebra(doc, ""); }), "/dim");

  doc = heisenberg_doc();
  doc["basis"][2] = "X";
  EXPECT_EQ(pointer_of([&] { io::parse_algebra(doc, ""); }), "/basis/2");

  const LieAlgebra h = io::parse_algebra(heisenberg_doc(), "");
  const json rep = json::parse(R"({"algebra": "h", "dim_v": 3, "f": [[[0,0,0],[0,0,0],[0,1,0]],
      [[0,0,0],[0,0,0],[0,0,0]], [[0,0,0],[0,0,0],[0,0]]], "q": [[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_EQ(pointer_of([&] { io::parse_rep(rep, "/rep", h); }), "/rep/f/2/2");
  json other = rep;
  other["algebra"] = "g";
  EXPECT_EQ(pointer_of([&] { io::parse_rep(other, "/rep", h); }), "/rep/algebra");
}

TEST(Scenario, UnknownCheckRejectedAtParse) {
  const json doc{{"name", "s"}, {"inputs", {{"algebra", heisenberg_doc()}}}, {"checks", {"jacobi", "nope"}}};
  EXPECT_EQ(pointer_of([&] { parse_scenario(doc, "."); }), "/checks/1");
}

TEST(Scenario, RequiredInputs) {
  json doc{{"name", "s"}, {"inputs", {{"algebra", heisenberg_doc()}}}, {"checks", {"irreducible"}}};
  EXPECT_EQ(pointer_of([&] { parse_scenario(doc, "."); }), "/checks/0");
  doc["checks"] = {"flat"};
  EXPECT_EQ(pointer_of([&] { parse_scenario(doc, "."); }), "/checks/0");
  doc.erase("inputs");
  EXPECT_EQ(pointer_of([&] { parse_scenario(doc, "."); }), "/inputs");
}

TEST(Scenario, StatusOrderingAndExitCodes) {
  EXPECT_EQ(worst(CheckStatus::Pass, CheckStatus::Undetermined), CheckStatus::Undetermined);
  EXPECT_EQ(worst(CheckStatus::Fail, CheckStatus::Undetermined), CheckStatus::Fail);
  EXPECT_EQ(worst(CheckStatus::Fail, CheckStatus::Error), CheckStatus::Error);
  EXPECT_EQ(exit_code(CheckStatus::Pass), 0);
  EXPECT_EQ(exit_code(CheckStatus::Fail), 1);
  EXPECT_EQ(exit_code(CheckStatus::Error), 1);
  EXPECT_EQ(exit_code(CheckStatus::Undetermined), 2);
}

TEST(Scenario, CatalogRoundTripReproducesExpectations) {
  for (const auto& id : catalog_ids()) {
    const auto entry = catalog_entry(id);
    const json bundle = catalog_bundle(entry);
    ASSERT_EQ(bundle["scenarios"].size(), 1 + entry.raw_samples.size()) << id;
    for (std::size_t i = 0; i < bundle["scenarios"].size(); ++i) {
      const auto sc = parse_scenario(bundle["scenarios"][i], ".", "/scenarios/" + std::to_string(i));
      const auto report = run_scenario(sc);
      EXPECT_TRUE(report.expectations_met()) << sc.name << "\n" << report_to_text(report, false);
      for (const auto& rec : report.checks) {
        EXPECT_NE(rec.status, CheckStatus::Error) << sc.name << " " << rec.name << ": " << rec.summary;
      }
    }
    EXPECT_EQ(catalog_bundle(catalog_entry(id)).dump(2), bundle.dump(2));
  }
}

TEST(Scenario, ReportsAreCanonical) {
  const auto sc = parse_scenario(catalog_bundle(rotation_dilation())["scenarios"][0], ".");
  const auto a = report_to_json(run_scenario(sc), false).dump(2);
  const auto b = report_to_json(run_scenario(sc), false).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
  EXPECT_NE(report_to_json(run_scenario(sc), true).dump().find("elapsed_ms"), std::string::npos);
  const json r = json::parse(a);
  EXPECT_EQ(r["classification"], "CaseB");
  for (const auto& c : r["checks"]) {
    EXPECT_EQ(c["citation"], check_citation(c["name"].get<std::string>()));
  }
  const auto& cb = r["checks"][11]["witnesses"]["case_b"];
  EXPECT_EQ(cb["v0"], json({"1", "0"}));
  EXPECT_EQ(cb["structure"]["b_squared"], "1");
}

TEST(Scenario, ErrorsBecomeRecords) {
  // [X,Z] = X breaks the Jacobi identity: the rep cannot be built, closure of k is still checkable.
  json alg = heisenberg_doc();
  alg["brackets"].push_back(json{{"i", 0}, {"j", 2}, {"terms", {{0, "1"}}}});
  const json zero = json::parse("[[0,0,0],[0,0,0],[0,0,0]]");
  const json eye = json::parse("[[1,0,0],[0,1,0],[0,0,1]]");
  const json doc{{"name", "s"},
                 {"inputs",
                  {{"algebra", alg},
                   {"subalgebra", {{"algebra", "h"}, {"vectors", json::array()}}},
                   {"rep", {{"algebra", "h"}, {"dim_v", 3}, {"f", {zero, zero, zero}}, {"q", eye}}}}},
                 {"checks", {"jacobi", "affine_rep", "subalgebra"}}};
  const auto report = run_scenario(parse_scenario(doc, "."));
  ASSERT_EQ(report.checks.size(), 3u);
  EXPECT_EQ(report.checks[0].status, CheckStatus::Fail);
  EXPECT_EQ(report.checks[0].witnesses["triple"], json({"X", "Y", "Z"}));
  EXPECT_EQ(report.checks[1].status, CheckStatus::Error);
  EXPECT_EQ(report.checks[2].status, CheckStatus::Pass);
  EXPECT_EQ(report.status, CheckStatus::Error);
}
