#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace evoalg::cli {
namespace {

const std::filesystem::path kFixtures = EVOALG_FIXTURES;

std::filesystem::path fixture(const std::string& name) { return kFixtures / name; }

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "evoalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string error_of(const std::string& name) {
  try {
    parse_algebra_file(fixture(name));
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Parse, NonSplitAlgebra) {
  const EvolutionAlgebra a = parse_algebra_text(
      R"({"field":{"kind":"gf","p":7},"basis":["v1","v2"],"matrix":[["0","1"],["3","0"]]})", "inline");
  EXPECT_EQ(a.field(), FieldSpec::prime(7));
  EXPECT_EQ(a.structure(), FieldMatrix::from_ints(FieldSpec::prime(7), {{0, 1}, {3, 0}}));
}

TEST(Parse, RationalEntries) {
  const EvolutionAlgebra a = parse_algebra_file(fixture("rational_half.json"));
  EXPECT_EQ(a.coefficient(0, 0), FieldSpec::rational().parse("1/2"));
  EXPECT_EQ(a.coefficient(1, 0), FieldSpec::rational().parse("-3/4"));
}

TEST(Parse, FieldOverride) {
  const EvolutionAlgebra a = parse_algebra_file(fixture("example2.json"), FieldSpec::prime(3));
  EXPECT_EQ(a.field(), FieldSpec::prime(3));
  EXPECT_THROW(parse_algebra_file(fixture("rational_half.json"), FieldSpec::prime(2)), InputError);
}

TEST(Parse, DistinctErrorsWithLines) {
  EXPECT_NE(error_of("bad_prime.json").find("p must be prime"), std::string::npos);
  EXPECT_NE(error_of("bad_json.json").find("bad_json.json:4: malformed JSON"), std::string::npos);
  EXPECT_NE(error_of("bad_dimension.json").find("bad_dimension.json:6: dimension mismatch"), std::string::npos);
  EXPECT_NE(error_of("bad_entry.json").find("bad_entry.json:6: unparsable entry matrix[1][0]"), std::string::npos);
  EXPECT_NE(error_of("missing.json").find("cannot open file"), std::string::npos);
}

TEST(Parse, ShapeErrors) {
  auto message = [](std::string_view text) {
    try {
      parse_algebra_text(text, "t");
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"basis":["a"],"matrix":[["1"]]})").find("missing key \"field\""), std::string::npos);
  EXPECT_NE(message(R"({"field":{"kind":"real"},"basis":["a"],"matrix":[["1"]]})").find("unknown field kind"),
            std::string::npos);
  EXPECT_NE(message(R"({"field":{"kind":"rational"},"basis":["a","a"],"matrix":[["1","0"],["0","1"]]})")
                .find("duplicate basis label"),
            std::string::npos);
  EXPECT_NE(message(R"({"field":{"kind":"rational"},"basis":["a"],"matrix":[[1]]})").find("must be a string"),
            std::string::npos);
  EXPECT_NE(message(R"({"field":{"kind":"rational"},"basis":["a","b"],"matrix":[["1","0"]]})")
                .find("2 basis labels but 1 matrix rows"),
            std::string::npos);
  EXPECT_NE(message("[1,2]").find("expected a JSON object"), std::string::npos);
}

TEST(FieldFlag, Values) {
  EXPECT_EQ(parse_field_flag("gf:7"), FieldSpec::prime(7));
  EXPECT_EQ(parse_field_flag("rational"), FieldSpec::rational());
  EXPECT_THROW(parse_field_flag("gf:6"), InputError);
  EXPECT_THROW(parse_field_flag("gf:"), InputError);
  EXPECT_THROW(parse_field_flag("real"), InputError);
}

TEST(Commands, DerOnNonSplitGF3) {
  const Report r = run_command("der", fixture("nonsplit_a1_gf3.json"), {});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.text.find("dimension 1; basis diag(1,2); theorem and oracle agree"), std::string::npos);
  EXPECT_EQ(r.data["oracle"]["dimension"], 1);
  EXPECT_EQ(r.data["oracle"]["basis"], Json::array({"diag(1,2)"}));
  EXPECT_EQ(r.data["theorem"]["dimension"], 1);
  EXPECT_EQ(r.data["dual_numbers"]["dimension"], 1);
  EXPECT_EQ(r.data["verdict"], "theorem and oracle agree");
}

TEST(Commands, DiagOnExample2) {
  const Report r = run_command("diag", fixture("example2.json"), {});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.text.find("free rank 0, torsion [6]"), std::string::npos);
  EXPECT_EQ(r.data["structure"]["free_rank"], 0);
  EXPECT_EQ(r.data["structure"]["torsion"], Json::array({6}));
}

TEST(Commands, DiagPoints) {
  Flags flags;
  flags.points = 7;
  const Report r = run_command("diag", fixture("nonsplit_a3_gf7.json"), flags);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.data["points"]["count"], 3);
  EXPECT_EQ(r.data["points"]["formula_count"], 3);
  EXPECT_EQ(r.data["points"]["values"][1], Json::array({"2", "4"}));
  flags.points = 8;
  EXPECT_EQ(run_command("diag", fixture("nonsplit_a3_gf7.json"), flags).exit_code, kExitInput);
}

TEST(Commands, AutWithFieldFlag) {
  Flags flags;
  flags.field = FieldSpec::prime(7);
  const Report r = run_command("aut", fixture("nonsplit_a6_gf7.json"), flags);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.data["algebra_automorphisms"]["order"], 6);
  EXPECT_EQ(r.data["image"]["elements"], Json::array({"id", "(1 2)"}));
  EXPECT_EQ(r.data["kernel_order"], 3);
  EXPECT_EQ(r.data["exact_sequence"]["verified"], true);
  EXPECT_NE(r.text.find("exact sequence: verified"), std::string::npos);
}

TEST(Commands, AutOverRationalsReportsGraphOnly) {
  const Report r = run_command("aut", fixture("example2.json"), {});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.data["algebra_automorphisms"].is_null());
  EXPECT_EQ(r.data["graph_automorphisms"]["order"], 1);
}

TEST(Commands, GraphAndDot) {
  const Report r = run_command("graph", fixture("example2.json"), {});
  EXPECT_EQ(r.data["sources"], Json::array({"a"}));
  EXPECT_EQ(r.data["sinks"], Json::array());
  EXPECT_EQ(r.data["edges"].size(), 3u);
  Flags flags;
  flags.dot = true;
  const Report d = run_command("graph", fixture("nonsplit_a3_gf7.json"), flags);
  EXPECT_EQ(d.text, "digraph {\n  \"v1\" -> \"v2\";\n  \"v2\" -> \"v1\";\n}\n");
  EXPECT_EQ(d.data["dot"], d.text);
}

TEST(Commands, Balance) {
  const Report r = run_command("balance", fixture("example3.json"), {});
  EXPECT_EQ(r.data["components"][0]["balance"], 2);
  EXPECT_EQ(r.data["graph_balance"], 2);
  EXPECT_NE(r.text.find("component {a, b, c}: b = 2"), std::string::npos);
}

TEST(Commands, CheckPassesOnFixtures) {
  for (const char* name : {"nonsplit_a3_gf7.json", "nonsplit_a6_gf7.json", "nonsplit_a1_gf3.json", "example1.json",
                           "example2.json", "example3.json", "aut_gf5.json", "rational_half.json"}) {
    const Report r = run_command("check", fixture(name), {});
    EXPECT_EQ(r.exit_code, kExitOk) << name << "\n" << r.text;
    EXPECT_EQ(r.data["failed"], 0) << name;
    for (const Json& item : r.data["checks"]) {
      const std::string tag = item["status"] == "pass" ? "PASS" : item["status"] == "fail" ? "FAIL" : "SKIP";
      EXPECT_NE(r.text.find(tag + "  " + item["name"].get<std::string>()), std::string::npos);
    }
  }
}

TEST(Commands, JsonRoundTripsForEveryCommand) {
  Flags flags;
  flags.points = 5;
  for (const std::string& cmd : commands()) {
    for (const char* name : {"nonsplit_a6_gf7.json", "example2.json", "rational_half.json"}) {
      const Report r = run_command(cmd, fixture(name), flags);
      EXPECT_EQ(Json::parse(r.data.dump(2)), r.data) << cmd << " " << name;
      EXPECT_EQ(r.data["command"], cmd);
      EXPECT_EQ(r.data["field"], name == std::string("nonsplit_a6_gf7.json") ? "GF(7)" : "Q");
    }
  }
}

TEST(Main, ExitCodes) {
  EXPECT_EQ(run({"der", fixture("nonsplit_a1_gf3.json").string()}).code, kExitOk);
  EXPECT_EQ(run({"check", fixture("example2.json").string(), "--json"}).code, kExitOk);
  EXPECT_EQ(run({"der", fixture("bad_prime.json").string()}).code, kExitInput);
  EXPECT_EQ(run({"der", fixture("bad_json.json").string()}).code, kExitInput);
  EXPECT_EQ(run({"der", fixture("bad_dimension.json").string()}).code, kExitInput);
  EXPECT_EQ(run({"der", fixture("bad_entry.json").string()}).code, kExitInput);
  EXPECT_EQ(run({"der", fixture("missing.json").string()}).code, kExitInput);
  EXPECT_EQ(run({"aut", fixture("example2.json").string(), "--field", "gf:6"}).code, kExitInput);
  EXPECT_EQ(run({"der"}).code, kExitInput);
  const Invocation unknown = run({"frobnicate", fixture("example2.json").string()});
  EXPECT_EQ(unknown.code, kExitInput);
  EXPECT_NE(unknown.err.find("usage: evoalg"), std::string::npos);
}

TEST(Main, JsonOutputParses) {
  const Invocation r = run({"aut", fixture("nonsplit_a6_gf7.json").string(), "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["algebra_automorphisms"]["order"], 6);
  const Invocation e = run({"der", fixture("bad_prime.json").string(), "--json"});
  EXPECT_NE(Json::parse(e.err)["error"].get<std::string>().find("p must be prime"), std::string::npos);
}

}  // namespace
}  // namespace evoalg::cli
