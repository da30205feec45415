#pragma once

// JSON documents of the hodge-sig/v1 schema and the WeilRecord type.

#include "hodgesig/weil.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hodgesig::io {

// ordered_json keeps insertion order, so output bytes depend only on input.
using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "hodge-sig/v1";
inline constexpr std::string_view kArtifactVersion = "hodgesig-0.1.0";

enum class ExitCode : int { ok = 0, invalid_input = 1, internal = 2, resource = 3 };

/// Malformed or mathematically invalid input (exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured bound or the precision ladder was exhausted (exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeilRecord {
  std::optional<std::string> label;
  Integer q;
  Integer p;
  IntPoly coeffs;  // ascending
};

/// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& value, std::string_view field);
/// Rationals: an integer, or a string "a/b".
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& value, std::string_view field);

Json to_json(const WeilRecord& record);
/// Strict mode rejects unknown fields. The prime p is derived from q and, when
/// present in the document, must agree with it.
WeilRecord record_from_json(const Json& doc, bool strict = true);
WeilRecord record_of(const WeilPolynomial& P, std::optional<std::string> label = std::nullopt);
/// validate_weil with failures rethrown as InputError.
WeilPolynomial validated(const WeilRecord& record);

/// Parses text as JSON; InputError on syntax errors or a foreign schema tag.
Json parse_document(const std::string& text);
Json document_header(std::string_view command);
Json error_document(std::string_view command, ExitCode code, std::string_view message);
std::string_view to_string(ExitCode code);

}  // namespace hodgesig::io
