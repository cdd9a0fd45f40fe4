#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "degen/cli/commands.hpp"
#include "degen/cli/serialize.hpp"

using namespace degen;
using namespace degen::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json coeff(std::initializer_list<const char*> values) {
  Json a = Json::array();
  for (const char* v : values) a.push_back(v);
  return a;
}

Json record(unsigned i, unsigned j, Json c) {
  Json r;
  r["i"] = i;
  r["j"] = j;
  r["coeff"] = std::move(c);
  return r;
}

}  // namespace

TEST(CliSerialize, Rationals) {
  EXPECT_EQ(to_json(Rational(12)), "12/1");
  EXPECT_EQ(rational_from_json(Json("-3/6")), Rational(-1, 2));
  EXPECT_THROW(rational_from_json(Json("3")), std::invalid_argument);
  EXPECT_EQ(to_json(LambdaPoly{}), Json::array());
}

TEST(CliSerialize, CsvQuoting) {
  EXPECT_EQ(csv_field("8"), "8");
  EXPECT_EQ(csv_field("12 - 1*l"), "\"12 - 1*l\"");
  EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
  EXPECT_EQ(csv_record({"1", "a,b"}), "1,\"a,b\"\r\n");
}

TEST(CliSerialize, NormalFormRoundTripIsByteIdentical) {
  const Outcome first = run_cli({"normal-order", "--n", "3", "--r", "3", "--s", "2"});
  ASSERT_EQ(first.code, 0);
  const NormalForm parsed = normal_form_from_json(Json::parse(first.out));
  EXPECT_EQ(dump(to_json(parsed)), first.out);
}

TEST(CliSerialize, TableRoundTripIsByteIdentical) {
  const Outcome first = run_cli({"table", "stirling-rs", "--n", "1..3", "--r", "2..3", "--s", "1..2"});
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(dump(Json::parse(first.out)), first.out);
}

TEST(CliTable, FourTwoRow) {
  const Outcome res = run_cli({"table", "stirling-rs", "--n", "2", "--r", "4", "--s", "2", "--format", "json"});
  ASSERT_EQ(res.code, 0) << res.err;
  const Json j = Json::parse(res.out);
  ASSERT_EQ(j["rows"].size(), 5u);
  EXPECT_EQ(j["rows"][2]["k"], 2);
  EXPECT_EQ(j["rows"][2]["value"], coeff({"12/1", "-1/1"}));
}

TEST(CliTable, Csv) {
  EXPECT_EQ(run_cli({"table", "stirling2", "--n", "0", "--format", "csv"}).out, "1\r\n");
  EXPECT_EQ(run_cli({"table", "stirling-rs", "--n", "2", "--r", "4", "--s", "2", "--format", "csv"}).out,
            "-2*l,-4*l,\"12 - 1*l\",8,1\r\n");
}

TEST(CliTable, LahAtLambdaZero) {
  const Outcome res = run_cli({"table", "lah", "--n", "3", "--lambda", "0"});
  ASSERT_EQ(res.code, 0) << res.err;
  const Json j = Json::parse(res.out);
  Json values = Json::array();
  for (const auto& row : j["rows"]) values.push_back(row["value"]);
  EXPECT_EQ(values, Json::array({"0/1", "6/1", "6/1", "1/1"}));
}

TEST(CliNormalOrder, Records) {
  Json single = Json::array({record(1, 1, coeff({"1/1"}))});
  EXPECT_EQ(Json::parse(run_cli({"normal-order", "--n", "1", "--r", "1", "--s", "1"}).out), single);

  Json four_two = Json::array({record(8, 4, coeff({"1/1"})), record(7, 3, coeff({"8/1"})),
                              record(6, 2, coeff({"12/1", "-1/1"})), record(5, 1, coeff({"0/1", "-4/1"})),
                              record(4, 0, coeff({"0/1", "-2/1"}))});
  EXPECT_EQ(Json::parse(run_cli({"normal-order", "--n", "2", "--r", "4", "--s", "2"}).out), four_two);

  Json number = Json::array({record(2, 2, coeff({"1/1"})), record(1, 1, coeff({"1/1", "-1/1"}))});
  EXPECT_EQ(Json::parse(run_cli({"normal-order", "--n", "2", "--r", "1", "--s", "1"}).out), number);
}

TEST(CliVerify, SuitesPass) {
  EXPECT_EQ(run_cli({"verify", "--suite", "oracles", "--max-n", "4", "--max-r", "3"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "--suite", "dobinski", "--tol", "1e-12"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "--suite", "egf", "--order", "10"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "--suite", "recurrence"}).code, 0);
}

TEST(CliVerify, FailingReportMapsToExitOne) {
  SuiteReport report{"oracles", {CheckResult{"forced", 1, false, "n=1"}}};
  EXPECT_EQ(exit_code_for(report), kVerificationFailed);
  const Json j = to_json(report);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_EQ(j["checks"][0]["counterexample"], "n=1");
}

TEST(CliDobinski, FourTwoAtHalf) {
  const Outcome res = run_cli({"dobinski", "--n", "2", "--r", "4", "--s", "2", "--x", "1", "--lambda", "1/2"});
  ASSERT_EQ(res.code, 0) << res.err;
  const Json j = Json::parse(res.out);
  EXPECT_EQ(j["closed_form"], "35/2");
  const Rational value = Rational::parse(j["value"].get<std::string>());
  EXPECT_LE(abs(value - Rational(35, 2)), Rational(1, 1000000000000L));
}

TEST(CliUsage, ExitTwo) {
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"bogus"}).code, kUsageError);
  EXPECT_EQ(run_cli({"table", "nope"}).code, kUsageError);
  EXPECT_EQ(run_cli({"table", "stirling-rs", "--n", "2", "--r", "1", "--s", "2"}).code, kUsageError);
  EXPECT_EQ(run_cli({"normal-order", "--n", "0", "--r", "1", "--s", "1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"dobinski", "--n", "1", "--r", "1", "--s", "1", "--x", "-1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"table", "lah", "--lambda", "x/y"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--suite", "nothing"}).code, kUsageError);
}

TEST(CliUsage, NegativeLambdaWithEquals) {
  const Outcome res = run_cli({"table", "stirling2", "--n", "2", "--lambda=-1/2"});
  ASSERT_EQ(res.code, 0) << res.err;
  EXPECT_EQ(Json::parse(res.out)["rows"][1]["value"], "3/2");
}

TEST(CliExecutable, ExitCodes) {
  const auto status = [](const std::string& args) {
    const std::string cmd = std::string(DEGEN_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  EXPECT_EQ(status("normal-order --n 2 --r 4 --s 2"), 0);
  EXPECT_EQ(status("--help"), 0);
  EXPECT_EQ(status("normal-order --n 2"), 2);
  EXPECT_EQ(status(""), 2);
}

TEST(CliExecutable, Output) {
  const std::string cmd = std::string(DEGEN_TOOL_PATH) + " table stirling2 --n 0 --format csv";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::array<char, 64> buf{};
  std::string out;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
  EXPECT_EQ(out, "1\r\n");
}
