#include "degen/cli/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace degen::cli {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const LambdaPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

Json to_json(const XPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const NormalForm& nf) {
  Json arr = Json::array();
  for (auto it = nf.terms().rbegin(); it != nf.terms().rend(); ++it) {
    Json rec;
    rec["i"] = it->first.creation;
    rec["j"] = it->first.annihilation;
    rec["coeff"] = to_json(it->second);
    arr.push_back(std::move(rec));
  }
  return arr;
}

Json to_json(const IdentityReport& report) {
  Json j;
  j["identity"] = report.identity;
  j["order"] = report.order;
  j["pass"] = report.pass;
  if (report.first_mismatch) {
    Json m;
    m["n"] = report.first_mismatch->n;
    m["expected"] = to_json(report.first_mismatch->expected);
    m["actual"] = to_json(report.first_mismatch->actual);
    j["first_mismatch"] = std::move(m);
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  const auto text = j.get<std::string>();
  if (text.find('/') == std::string::npos)
    throw std::invalid_argument("rational '" + text + "' lacks a denominator");
  return Rational::parse(text);
}

LambdaPoly lambda_poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return LambdaPoly(std::move(coeffs));
}

NormalForm normal_form_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of normal-form records");
  NormalForm nf;
  for (const auto& rec : j)
    nf.add({rec.at("i").get<unsigned>(), rec.at("j").get<unsigned>()},
           lambda_poly_from_json(rec.at("coeff")));
  return nf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view text) {
  const bool needs_quotes = text.find_first_of(" ,\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_record(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

}  // namespace degen::cli
