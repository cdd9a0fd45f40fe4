#include <array>
#include <charconv>
#include <string>

#include "degen/bell.hpp"
#include "degen/cli/commands.hpp"
#include "degen/numbers.hpp"

namespace degen::cli {

namespace {

constexpr std::array<std::pair<std::string_view, Family>, 8> kFamilies{{
    {"stirling2", Family::stirling2},
    {"stirling-rs", Family::stirling_rs},
    {"stirling-rr", Family::stirling_rr},
    {"r-stirling", Family::r_stirling},
    {"lah", Family::lah},
    {"lah-signed", Family::lah_signed},
    {"bell-rs", Family::bell_rs},
    {"r-bell", Family::r_bell},
}};

unsigned parse_unsigned(std::string_view text) {
  unsigned value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw UsageError("invalid non-negative integer '" + std::string(text) + "'");
  return value;
}

bool uses_r(Family f) {
  return f == Family::stirling_rs || f == Family::stirling_rr || f == Family::r_stirling ||
         f == Family::bell_rs || f == Family::r_bell;
}
bool uses_s(Family f) { return f == Family::stirling_rs || f == Family::bell_rs; }

std::vector<LambdaPoly> row_values(Family family, unsigned n, unsigned r, unsigned s) {
  switch (family) {
    case Family::stirling2: {
      std::vector<LambdaPoly> row;
      for (unsigned k = 0; k <= n; ++k) row.push_back(stirling2_degenerate(n, k));
      return row;
    }
    case Family::stirling_rs:
      if (n < 1 || s < 1 || r < s)
        throw UsageError("stirling-rs requires r >= s >= 1 and n >= 1");
      return stirling_rs_row(n, r, s);
    case Family::stirling_rr: {
      if (n < 1 || r < 1) throw UsageError("stirling-rr requires n >= 1 and r >= 1");
      std::vector<LambdaPoly> row;
      for (unsigned k = 0; k <= n * r; ++k) row.push_back(stirling_rr_degenerate(n, k, r));
      return row;
    }
    case Family::r_stirling: {
      auto row = r_stirling_row(n, r);
      row.resize(n + 1);
      return row;
    }
    case Family::lah: {
      auto row = lah_row(n);
      row.resize(n + 1);
      return row;
    }
    case Family::lah_signed: {
      auto row = lah_signed_row(n);
      row.resize(n + 1);
      return row;
    }
    case Family::bell_rs: {
      if (s < 1 || r < s) throw UsageError("bell-rs requires r >= s >= 1");
      const XPoly p = bell_rs_poly(n, r, s);
      std::vector<LambdaPoly> row(p.coefficients().begin(), p.coefficients().end());
      row.resize(n * s + 1);
      return row;
    }
    case Family::r_bell: {
      const XPoly p = r_bell_poly(n, r);
      std::vector<LambdaPoly> row(p.coefficients().begin(), p.coefficients().end());
      row.resize(n + 1);
      return row;
    }
  }
  throw UsageError("unknown family");
}

std::string cell_text(const LambdaPoly& value, const std::optional<Rational>& lambda) {
  if (lambda) return value.evaluate(*lambda).pretty();
  return pretty(value);
}

}  // namespace

Range Range::parse(std::string_view text) {
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    Range range{parse_unsigned(text.substr(0, dots)), parse_unsigned(text.substr(dots + 2))};
    if (range.first > range.last) throw UsageError("empty range '" + std::string(text) + "'");
    return range;
  }
  const unsigned v = parse_unsigned(text);
  return {v, v};
}

Family parse_family(std::string_view name) {
  for (const auto& [key, family] : kFamilies)
    if (key == name) return family;
  throw UsageError("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  for (const auto& [key, family] : kFamilies)
    if (family == f) return key;
  return "?";
}

std::vector<TableRow> build_table(const TableRequest& request) {
  const Family f = request.family;
  const Range r_range = uses_r(f) ? request.r : Range{0, 0};
  const Range s_range = uses_s(f) ? request.s : Range{0, 0};
  std::vector<TableRow> rows;
  for (unsigned n = request.n.first; n <= request.n.last; ++n) {
    for (unsigned r = r_range.first; r <= r_range.last; ++r) {
      for (unsigned s = s_range.first; s <= s_range.last; ++s) {
        TableRow row;
        row.n = n;
        if (uses_r(f)) row.r = r;
        if (uses_s(f)) row.s = s;
        row.values = row_values(f, n, r, s);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

Json table_json(const TableRequest& request, const std::vector<TableRow>& rows) {
  Json out;
  out["family"] = std::string(family_name(request.family));
  out["lambda"] = request.lambda ? Json(request.lambda->str()) : Json(nullptr);
  Json cells = Json::array();
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.values.size(); ++k) {
      Json cell;
      cell["n"] = row.n;
      if (row.r) cell["r"] = *row.r;
      if (row.s) cell["s"] = *row.s;
      cell["k"] = k;
      if (request.lambda) cell["value"] = row.values[k].evaluate(*request.lambda).str();
      else cell["value"] = to_json(row.values[k]);
      cells.push_back(std::move(cell));
    }
  }
  out["rows"] = std::move(cells);
  return out;
}

std::string table_csv(const TableRequest& request, const std::vector<TableRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    std::vector<std::string> fields;
    fields.reserve(row.values.size());
    for (const auto& v : row.values) fields.push_back(cell_text(v, request.lambda));
    out += csv_record(fields);
  }
  return out;
}

}  // namespace degen::cli
