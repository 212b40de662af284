#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace invset::cli {
namespace {

using nlohmann::json;

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("invset_cli_test_" + name);
}

TEST(Cli, NivenJson) {
  const auto r = invoke({"niven", "1/6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["cos"], "1/2");
  EXPECT_EQ(invoke({"niven", "--turns", "1/5"}).out, R"({"turns":"1/5","cos":"irrational","rational":false})" "\n");
}

TEST(Cli, ChshAutoTsirelson) {
  const auto r = invoke({"chsh", "--N", "16", "--auto-tsirelson"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["S"], "-11/4");
  EXPECT_EQ(doc["settings"]["11"], "-11/16");
  EXPECT_TRUE(doc["free_choice_on_IU"].get<bool>());
  EXPECT_TRUE(doc["local_causality_on_IU"].get<bool>());
  EXPECT_EQ(doc["classical_max"], "2");
}

TEST(Cli, ChshAtomsListConditionalWeights) {
  const auto r = invoke({"chsh", "--N", "4", "--auto-tsirelson", "--atoms"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  ASSERT_EQ(doc["atoms"].size(), 32U);
  const auto& a = doc["atoms"][0];
  EXPECT_EQ(a["class"], "same");
  EXPECT_EQ(a["p_given_context"]["00"], a["p_given_context"]["11"]);
  EXPECT_EQ(a["p_given_context"]["01"], "0");
  EXPECT_EQ(a["p_given_context"]["10"], "0");
}

TEST(Cli, SweepCsvShrinkingGap) {
  const auto r = invoke({"sweep", "--N", "8,16,64,256,1024", "--auto-tsirelson", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "N,n,S_num,S_den,S_decimal,gap_to_tsirelson");
  std::vector<double> gaps;
  while (std::getline(in, line)) gaps.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  ASSERT_EQ(gaps.size(), 5U);
  for (std::size_t i = 1; i < gaps.size(); ++i) EXPECT_LE(gaps[i], gaps[i - 1]);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"niven"}).code, kExitUsage);
  EXPECT_EQ(invoke({"niven", "abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"validate", "--qubit", "--cos", "1/3", "--phi", "0", "--N", "4"}).code, kExitDomain);
  EXPECT_EQ(invoke({"counterfactual", "--cos-a", "2", "--cos-b", "0", "--gamma", "0"}).code, kExitDomain);
  EXPECT_EQ(invoke({"padic", "--x", "3", "--p", "4"}).code, kExitDomain);
  EXPECT_EQ(invoke({"chsh", "--N", "16"}).code, kExitUsage);
}

TEST(Cli, DecimalInputRejectedWithHint) {
  const auto r = invoke({"niven", "0.25"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("1/4"), std::string::npos) << r.err;
}

TEST(Cli, ValidateReportsViolations) {
  const auto r = invoke({"validate", "--state-json", R"({"N":2,"amps":[{"m":1,"phase_turns":"0"},{"m":2,"phase_turns":"0"}]})"});
  EXPECT_EQ(r.code, kExitDomain);
  const auto doc = json::parse(r.out);
  EXPECT_FALSE(doc["valid"].get<bool>());
  EXPECT_EQ(doc["violations"][0], "normalization: Σm = 3 ≠ N = 2");
}

TEST(Cli, ValidateStateFile) {
  const auto path = temp_path("state.json");
  std::ofstream(path) << R"({"N":4,"amps":[{"m":3,"phase_turns":"0"},{"m":1,"phase_turns":"1/4"}]})";
  const auto r = invoke({"validate", "--state", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(json::parse(r.out)["valid"].get<bool>());
  std::filesystem::remove(path);
}

TEST(Cli, QubitAndHelix) {
  const auto r = invoke({"validate", "--qubit", "--cos", "1/2", "--phi", "1/4", "--N", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["n1"], 3);
  EXPECT_EQ(doc["helix_labels"], "0001");
  EXPECT_EQ(doc["statistics"][0], "3/4");
  EXPECT_EQ(doc["state"]["amps"][1]["phase_turns"], "1/4");
}

TEST(Cli, CounterfactualReportsCase) {
  const auto doc = json::parse(invoke({"counterfactual", "--cos-a", "1/5", "--cos-b", "1/2", "--gamma", "1/8"}).out);
  EXPECT_EQ(doc["class"], "ontic");
  EXPECT_EQ(doc["value"], "7/10");
  EXPECT_EQ(doc["case"], "rational-cos2-gamma");
  EXPECT_TRUE(doc["exceptional"].get<bool>());
  const auto generic = json::parse(invoke({"counterfactual", "--cos-a", "3/5", "--cos-b", "3/5", "--gamma", "1/7"}).out);
  EXPECT_EQ(generic["class"], "non-ontic");
  EXPECT_TRUE(generic["value"].is_null());
}

TEST(Cli, BitsBothDirections) {
  const auto fwd = json::parse(invoke({"bits", "--seed", "1/7", "--n", "6"}).out);
  EXPECT_EQ(fwd["bits"], "001001");
  EXPECT_EQ(fwd["period"], 3);
  const auto inv = json::parse(invoke({"bits", "--from", "001001"}).out);
  EXPECT_EQ(inv["seed"], "9/64");
  EXPECT_EQ(inv["regenerated"], "001001");
  const auto periodic = json::parse(invoke({"bits", "--from", "001001", "--period", "3"}).out);
  EXPECT_EQ(periodic["seed"], "1/7");
}

TEST(Cli, PadicAndUltrametric) {
  const auto v = json::parse(invoke({"padic", "--x", "3/4", "--p", "2"}).out);
  EXPECT_EQ(v["valuation"], -2);
  EXPECT_EQ(v["norm"], "4");
  EXPECT_EQ(json::parse(invoke({"padic", "--x", "0", "--p", "2"}).out)["valuation"], "+inf");
  const auto d = json::parse(invoke({"padic", "--a", "12", "--b", "1201", "--base", "10"}).out);
  EXPECT_EQ(d["a"], "1200");
  EXPECT_EQ(d["distance"], "1/10000");
}

TEST(Cli, PlainAndCsvFormats) {
  const auto plain = invoke({"niven", "1/6", "--format", "plain"});
  EXPECT_EQ(plain.out, "turns: 1/6\ncos: 1/2\nrational: true\n");
  const auto csv = invoke({"--format", "csv", "superpose", "--phi1", "1/3", "--phi2", "0"});
  EXPECT_EQ(csv.out, "key,value\nphi4_turns,1/6\ncos_sq_half_phi3,4/5\ncos_theta3,3/5\nfinite,true\n");
}

TEST(Cli, DeterministicOutput) {
  for (const auto& e : operation_coverage()) {
    EXPECT_EQ(invoke(e.example_args).out, invoke(e.example_args).out) << e.operation;
  }
}

TEST(Cli, MetaLineFollowsDataBlock) {
  const auto plain = invoke({"niven", "1/6"});
  const auto meta = invoke({"niven", "1/6", "--meta"});
  ASSERT_EQ(meta.out.rfind(plain.out, 0), 0U);
  EXPECT_EQ(meta.out.substr(plain.out.size(), 20), "# invset niven gener");
}

TEST(Cli, OutputFile) {
  const auto path = temp_path("out.json");
  const auto r = invoke({"niven", "1/3", "--output", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(json::parse(content)["cos"], "-1/2");
  std::filesystem::remove(path);
}

TEST(Cli, ConfigFileSuppliesDefaults) {
  const auto path = temp_path("run.conf");
  std::ofstream(path) << "# reproduce the N = 16 run\ncommand = chsh\nN = 16\nauto-tsirelson = true\nformat = json\n";
  const auto r = invoke({"--config", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["S"], "-11/4");
  // Command-line values win over the file.
  const auto override = invoke({"chsh", "--N", "8", "--config", path.string()});
  ASSERT_EQ(override.code, kExitOk) << override.err;
  EXPECT_EQ(json::parse(override.out)["S"], "-3");
  std::filesystem::remove(path);
}

TEST(Cli, EveryOperationReachable) {
  const std::set<std::string> operations{
      "niven_classify", "is_perfect_square", "surd_mul", "ultrametric_distance", "padic_valuation",
      "validate_finite_state", "make_finite_qubit", "superpose_classify", "helix_ensemble", "ensemble_statistics",
      "counterfactual_cosine_class", "admissible_contexts", "context_weight", "singlet_correlation",
      "rational_cos_approx", "build_bell_ensemble", "chsh_value", "verify_free_choice_on_IU",
      "verify_local_causality_on_IU", "classical_chsh_max", "generate_bits", "seed_from_bits"};
  std::set<std::string> covered;
  std::set<std::string> subcommands;
  for (const auto& e : operation_coverage()) {
    covered.insert(e.operation);
    subcommands.insert(e.example_args.front());
    const auto r = invoke(e.example_args);
    EXPECT_EQ(r.code, kExitOk) << e.operation << ": " << r.err;
  }
  EXPECT_EQ(covered, operations);
  for (const auto c : {Command::Niven, Command::Counterfactual, Command::Superpose, Command::Chsh, Command::Sweep,
                       Command::Bits, Command::Padic, Command::Validate}) {
    EXPECT_TRUE(subcommands.count(std::string(to_string(c)))) << to_string(c);
  }
}

TEST(Cli, BinaryRuns) {
  const std::string cmd = std::string(INVSET_CLI_PATH) + " niven 1/6";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[256] = {};
  const auto n = fread(buf, 1, sizeof(buf) - 1, pipe);
  const int status = pclose(pipe);
  EXPECT_EQ(status, 0);
  EXPECT_EQ(std::string(buf, n), R"({"turns":"1/6","cos":"1/2","rational":true})" "\n");
}

}  // namespace
}  // namespace invset::cli
