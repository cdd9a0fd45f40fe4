#include <ostream>

#include <CLI11.hpp>

#include "degen/bell.hpp"
#include "degen/cli/commands.hpp"
#include "degen/weyl.hpp"

namespace degen::cli {

namespace {

Rational parse_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
}

struct TableOptions {
  std::string family;
  std::string n = "0";
  std::string r = "1";
  std::string s = "1";
  std::string format = "json";
  std::string lambda;
};

struct NormalOrderOptions {
  unsigned n = 1, r = 1, s = 1;
};

struct VerifyOptions {
  std::string suite = "all";
  unsigned max_n = 5, max_r = 3, max_s = 0, max_k = 6;
  std::string tol = "1e-12";
  std::size_t order = 10;
};

struct DobinskiOptions {
  unsigned n = 1, r = 1, s = 1;
  std::string x = "1";
  std::string lambda = "0";
  std::string tol = "1e-12";
};

int run_table(const TableOptions& o, std::ostream& out) {
  TableRequest req;
  req.family = parse_family(o.family);
  req.n = Range::parse(o.n);
  req.r = Range::parse(o.r);
  req.s = Range::parse(o.s);
  if (!o.lambda.empty()) req.lambda = parse_rational(o.lambda, "lambda");
  const auto rows = build_table(req);
  if (o.format == "csv") out << table_csv(req, rows);
  else out << dump(table_json(req, rows));
  return kSuccess;
}

int run_normal_order(const NormalOrderOptions& o, std::ostream& out) {
  if (o.n < 1 || o.s < 1 || o.r < o.s) throw UsageError("normal-order requires r >= s >= 1 and n >= 1");
  out << dump(to_json(degenerate_product(o.n, o.r, o.s)));
  return kSuccess;
}

int run_verify(const VerifyOptions& o, std::ostream& out) {
  VerifyBounds b;
  b.max_n = o.max_n;
  b.max_r = o.max_r;
  b.max_s = o.max_s == 0 ? o.max_r : o.max_s;
  b.max_k = o.max_k;
  b.order = o.order;
  b.tol = parse_rational(o.tol, "tolerance");
  const SuiteReport report = run_suite(o.suite, b);
  out << dump(to_json(report));
  return exit_code_for(report);
}

int run_dobinski(const DobinskiOptions& o, std::ostream& out) {
  if (o.n < 1 || o.s < 1 || o.r < o.s) throw UsageError("dobinski requires r >= s >= 1 and n >= 1");
  const Rational x = parse_rational(o.x, "x");
  const Rational lam = parse_rational(o.lambda, "lambda");
  const Rational tol = parse_rational(o.tol, "tolerance");
  if (x.sign() <= 0) throw UsageError("dobinski requires x > 0");
  if (tol.sign() <= 0) throw UsageError("dobinski requires tol > 0");

  const DobinskiResult res = dobinski_eval(o.n, o.r, o.s, x, lam, tol);
  const Rational closed = evaluate(bell_rs_poly(o.n, o.r, o.s), x, lam);
  Json j;
  j["n"] = o.n;
  j["r"] = o.r;
  j["s"] = o.s;
  j["x"] = x.str();
  j["lambda"] = lam.str();
  j["tol"] = tol.str();
  j["value"] = res.value.str();
  j["value_decimal"] = res.value.decimal(25);
  j["terms_used"] = res.terms_used;
  j["tail_bound"] = res.tail_bound.str();
  j["closed_form"] = closed.str();
  j["residual_decimal"] = abs(res.value - closed).decimal(6);
  out << dump(j);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degenerate (r,s)-Stirling, Bell and Lah numbers with normal-ordering and series verification"};
  app.name("degen");
  app.require_subcommand(1);

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Emit a table of one number family");
  table_cmd->add_option("family", table.family, "stirling2 | stirling-rs | stirling-rr | r-stirling | lah | lah-signed | bell-rs | r-bell")
      ->required();
  table_cmd->add_option("--n", table.n, "n or range a..b")->capture_default_str();
  table_cmd->add_option("--r", table.r, "r or range a..b")->capture_default_str();
  table_cmd->add_option("--s", table.s, "s or range a..b")->capture_default_str();
  table_cmd->add_option("--format", table.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  table_cmd->add_option("--lambda", table.lambda, "evaluate every entry at this rational lambda");

  NormalOrderOptions normal;
  auto* normal_cmd = app.add_subcommand("normal-order", "Normal form of the degenerate (r,s) product");
  normal_cmd->add_option("--n", normal.n)->required();
  normal_cmd->add_option("--r", normal.r)->required();
  normal_cmd->add_option("--s", normal.s)->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite; exit 1 on any failure");
  verify_cmd->add_option("--suite", verify.suite, "oracles | egf | recurrence | dobinski | all")
      ->check(CLI::IsMember({"oracles", "egf", "recurrence", "dobinski", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-n", verify.max_n)->capture_default_str();
  verify_cmd->add_option("--max-r", verify.max_r)->capture_default_str();
  verify_cmd->add_option("--max-s", verify.max_s, "defaults to --max-r");
  verify_cmd->add_option("--max-k", verify.max_k, "largest k for the Stirling EGF check")->capture_default_str();
  verify_cmd->add_option("--tol", verify.tol, "Dobinski tolerance (rational or decimal)")->capture_default_str();
  verify_cmd->add_option("--order", verify.order, "series truncation order")->capture_default_str();

  DobinskiOptions dob;
  auto* dob_cmd = app.add_subcommand("dobinski", "Evaluate the Dobinski-type series with a certified bound");
  dob_cmd->add_option("--n", dob.n)->required();
  dob_cmd->add_option("--r", dob.r)->required();
  dob_cmd->add_option("--s", dob.s)->required();
  dob_cmd->add_option("--x", dob.x)->capture_default_str();
  dob_cmd->add_option("--lambda", dob.lambda)->capture_default_str();
  dob_cmd->add_option("--tol", dob.tol)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0; anything else is a usage error
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*table_cmd) return run_table(table, out);
    if (*normal_cmd) return run_normal_order(normal, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*dob_cmd) return run_dobinski(dob, out);
  } catch (const std::invalid_argument& e) {
    err << "degen: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace degen::cli
