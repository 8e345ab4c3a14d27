#include "generators.hpp"

#include "hlmax/cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace hlmax;
using namespace hlmax::cli;

namespace {

struct Run {
  int exit_code;
  std::string out;
};

// Runs the hlmax executable; stderr is discarded.
Run run_tool(const std::string& args) {
  const std::string command = std::string(HLMAX_TOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buffer{};
  while (const auto n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void expect_no_floats(const nlohmann::json& json) {
  if (json.is_object() || json.is_array()) {
    for (const auto& item : json) expect_no_floats(item);
  } else {
    EXPECT_FALSE(json.is_number_float()) << json.dump();
  }
}

}  // namespace

TEST(SetLiteral, Parses) {
  EXPECT_EQ(parse_set_literal("0,2,5-9"), (IndexSet{0, 2, 5, 6, 7, 8, 9}));
  EXPECT_EQ(parse_set_literal("-3--1, 4"), (IndexSet{-3, -2, -1, 4}));
  EXPECT_EQ(parse_set_literal("3,1,3,2-3"), (IndexSet{1, 2, 3}));
  EXPECT_EQ(parse_set_literal("+7"), (IndexSet{7}));
}

TEST(SetLiteral, ErrorsCarryPositions) {
  const auto position_of = [](std::string_view text) -> std::optional<std::size_t> {
    try {
      parse_set_literal(text);
    } catch (const SetLiteralError& e) {
      return e.position();
    }
    return std::nullopt;
  };
  EXPECT_EQ(position_of("3-1"), 0u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("   "), 0u);
  EXPECT_EQ(position_of("0,,2"), 2u);
  EXPECT_EQ(position_of("0,x"), 2u);
  EXPECT_EQ(position_of("0,2;"), 3u);
  EXPECT_EQ(position_of("1,"), 2u);
  EXPECT_EQ(position_of("5,9-2"), 2u);
  EXPECT_THROW(parse_set_literal("99999999999999999999"), SetLiteralError);
}

TEST(SetLiteral, CanonicalRoundTrip) {
  EXPECT_EQ(to_literal(IndexSet{0, 2, 5, 6, 7, 8, 9}), "0,2,5-9");
  EXPECT_EQ(to_literal(IndexSet{-3, -2, 4}), "-3--2,4");
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 300; ++trial) {
    const auto set = gen::nonempty_set(rng, 40);
    const auto literal = to_literal(set);
    EXPECT_EQ(parse_set_literal(literal), set);
    EXPECT_EQ(to_literal(parse_set_literal(literal)), literal);
  }
}

TEST(Report, Fields) {
  EXPECT_EQ(to_json(make_report({0}, MaximalMethod::naive))["ratio"], "1/2");
  EXPECT_EQ(to_json(make_report({0, 1}, MaximalMethod::naive))["ratio"], "1/3");

  const auto json = to_json(make_report({0, 2}, MaximalMethod::fast));
  EXPECT_EQ(json["concave_points_in_set"]["status"], "ok");
  EXPECT_EQ(json["s_minus"], nlohmann::json({0, 2}));
  EXPECT_EQ(json["left_boundary"], nlohmann::json({0, 2}));
  EXPECT_EQ(json["chi_second_norm"], "8");
  EXPECT_EQ(json["max_second_norm"], "10/3");
  EXPECT_EQ(json["funeq_rhs"], "10/3");
  EXPECT_EQ(json["funeq_rhs_paper_accounting"], "16/3");
  EXPECT_EQ(json["first_derivative"]["max"], "8/3");
  EXPECT_EQ(json["schema_version"], kSchemaVersion);
  EXPECT_EQ(json["tool_version"], kToolVersion);
  EXPECT_TRUE(json["oracle_checked"].get<bool>());
  expect_no_floats(json);

  EXPECT_THROW(make_report(IndexSet{}, MaximalMethod::naive), std::invalid_argument);
}

TEST(Report, Csv) {
  const auto csv = to_csv(make_report({0}, MaximalMethod::naive));
  EXPECT_EQ(csv,
            "n,value,second_difference,class\n"
            "-1,1/2,1/3,plus\n"
            "0,1,-1,minus\n"
            "1,1/2,1/3,plus\n");
}

TEST(Report, TextMentionsBothAccountings) {
  const auto text = to_text(make_report({0, 2}, MaximalMethod::naive), true);
  EXPECT_NE(text.find("funeq rhs (+2)       16/3"), std::string::npos);
  EXPECT_NE(text.find("ratio                5/12"), std::string::npos);
  EXPECT_NE(text.find("S_- inside A         ok"), std::string::npos);
}

TEST(SummaryJson, ExactStringsOnly) {
  const auto json = to_json(exhaustive(6));
  EXPECT_EQ(json["command"], "exhaustive");
  EXPECT_EQ(json["sets_covered"], 63);
  EXPECT_EQ(json["max_by_length"].size(), 6u);
  expect_no_floats(json);
  expect_no_floats(to_json(random_functions(50, 8, 3, 1)));
  expect_no_floats(to_json(IndexSet{0}, higher_derivative_scan({0}, 3, 10)));
}

TEST(Tool, ReportVerb) {
  const auto text = run_tool("report 0");
  EXPECT_EQ(text.exit_code, kExitOk);
  EXPECT_NE(text.out.find("ratio                1/2"), std::string::npos);

  const auto json = run_tool("--format json report 0,1");
  EXPECT_EQ(json.exit_code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(json.out)["ratio"], "1/3");

  const auto csv = run_tool("report 0 --format csv --fast");
  EXPECT_EQ(csv.exit_code, kExitOk);
  EXPECT_EQ(csv.out.rfind("n,value,second_difference,class\n", 0), 0u);
}

TEST(Tool, ExitCodes) {
  EXPECT_EQ(run_tool("report ''").exit_code, kExitUsage);
  EXPECT_EQ(run_tool("report 3-1").exit_code, kExitUsage);
  EXPECT_EQ(run_tool("").exit_code, kExitUsage);
  EXPECT_EQ(run_tool("frobnicate").exit_code, kExitUsage);
  EXPECT_EQ(run_tool("exhaust --length 0").exit_code, kExitUsage);
  EXPECT_EQ(run_tool("exhaust --length 3 --format csv").exit_code, kExitUsage);
  EXPECT_EQ(run_tool("random --trials 1 --length 4 --seed 1 --density 2").exit_code, kExitUsage);
  EXPECT_EQ(run_tool("scan 0 -k 2").exit_code, kExitUsage);
}

TEST(Tool, SweepVerbs) {
  const auto exhaust = run_tool("--format json exhaust --length 2 --workers 2");
  EXPECT_EQ(exhaust.exit_code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(exhaust.out)["max_record"]["ratio"], "1/2");

  const auto empty = run_tool("--format json random --trials 0 --length 8 --seed 3");
  EXPECT_EQ(empty.exit_code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(empty.out)["instances_checked"], 0);

  const auto functions = run_tool("random --functions --trials 20 --length 6 --value-bound 2 --seed 3 --fast");
  EXPECT_EQ(functions.exit_code, kExitOk);

  const auto scan = run_tool("--format json scan 0,1 -k 3 -T 50");
  EXPECT_EQ(scan.exit_code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(scan.out)["order"], 3);
}
