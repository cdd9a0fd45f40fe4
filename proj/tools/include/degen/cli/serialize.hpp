#pragma once

// JSON and CSV encodings shared by the command-line subcommands.
//
// Rationals are always "p/q" (reduced, q > 0, integers carry "/1"); a
// lambda-polynomial is the array of its rationals in ascending degree, with
// the zero polynomial encoded as []. Object keys are emitted in a fixed order
// so re-serializing parsed output reproduces it byte for byte.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degen/polynomial.hpp"
#include "degen/series_lab.hpp"
#include "degen/weyl.hpp"

namespace degen::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const LambdaPoly& p);
/// Array over x-degree of lambda-coefficient arrays.
Json to_json(const XPoly& p);
/// Records {i, j, coeff}, highest (i, j) first.
Json to_json(const NormalForm& nf);
Json to_json(const IdentityReport& report);

Rational rational_from_json(const Json& j);
LambdaPoly lambda_poly_from_json(const Json& j);
NormalForm normal_form_from_json(const Json& j);

/// Pretty-printed UTF-8 JSON with a trailing newline.
std::string dump(const Json& j);

/// RFC-4180 field: quoted when it contains a space, comma, quote or line break.
std::string csv_field(std::string_view text);
/// Joins fields with commas and terminates the record with CRLF.
std::string csv_record(const std::vector<std::string>& fields);

}  // namespace degen::cli
