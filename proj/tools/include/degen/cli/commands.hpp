#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degen/cli/serialize.hpp"
#include "degen/polynomial.hpp"

namespace degen::cli {

/// Exit codes of the degen tool.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Thrown for invalid user input; mapped to kUsageError.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive integer range parsed from "a" or "a..b".
struct Range {
  unsigned first = 0;
  unsigned last = 0;
  static Range parse(std::string_view text);
};

enum class Family { stirling2, stirling_rs, stirling_rr, r_stirling, lah, lah_signed, bell_rs, r_bell };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

struct TableRequest {
  Family family = Family::stirling2;
  Range n{0, 0};
  Range r{1, 1};
  Range s{1, 1};
  std::optional<Rational> lambda;  // evaluate lambda when set
};

/// One parameter combination; values are indexed by k (for the Bell families
/// k is the power of x).
struct TableRow {
  unsigned n = 0;
  std::optional<unsigned> r;
  std::optional<unsigned> s;
  std::vector<LambdaPoly> values;
};

/// Rows in (n, r, s) order. Invalid combinations throw UsageError.
std::vector<TableRow> build_table(const TableRequest& request);

Json table_json(const TableRequest& request, const std::vector<TableRow>& rows);
std::string table_csv(const TableRequest& request, const std::vector<TableRow>& rows);

struct VerifyBounds {
  unsigned max_n = 5;
  unsigned max_r = 3;
  unsigned max_s = 3;
  unsigned max_k = 6;
  Rational tol = Rational(1, 1000000000000L);
  std::size_t order = 10;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  bool pass = true;
  std::string counterexample;  // first failure, empty on success
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

/// Suites: oracles, egf, recurrence, dobinski, all.
SuiteReport run_suite(std::string_view suite, const VerifyBounds& bounds);
Json to_json(const SuiteReport& report);
int exit_code_for(const SuiteReport& report);

/// Entry point shared by the executable and in-process tests; args excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degen::cli
