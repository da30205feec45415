#include "hodgesig/io/documents.hpp"

namespace hodgesig::io {

Json integer_to_json(const Integer& value) {
  if (fits_int64(value)) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Integer integer_from_json(const Json& value, std::string_view field) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
    return Integer(std::to_string(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    try {
      return parse_integer(value.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("field '" + std::string(field) + "' must be an integer, got " + value.dump());
}

Json rational_to_json(const Rational& value) {
  if (value.get_den() == 1) return integer_to_json(value.get_num());
  return Json(hodgesig::to_string(value));
}

Rational rational_from_json(const Json& value, std::string_view field) {
  if (value.is_number_integer()) return Rational(integer_from_json(value, field));
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError("field '" + std::string(field) + "' must be a rational, got " + value.dump());
}

Json to_json(const WeilRecord& record) {
  Json out = Json::object();
  if (record.label) out["label"] = *record.label;
  out["q"] = integer_to_json(record.q);
  out["p"] = integer_to_json(record.p);
  Json coeffs = Json::array();
  for (const Integer& c : record.coeffs) coeffs.push_back(integer_to_json(c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

WeilRecord record_from_json(const Json& doc, bool strict) {
  if (!doc.is_object()) throw InputError("a Weil record must be a JSON object");
  if (strict) {
    for (const auto& [key, _] : doc.items()) {
      if (key != "label" && key != "q" && key != "p" && key != "coeffs" && key != "schema") {
        throw InputError("unknown field '" + key + "' in Weil record");
      }
    }
  }
  WeilRecord record;
  if (doc.contains("label") && !doc["label"].is_null()) {
    if (!doc["label"].is_string()) throw InputError("field 'label' must be a string");
    record.label = doc["label"].get<std::string>();
  }
  if (!doc.contains("q")) throw InputError("missing field 'q'");
  if (!doc.contains("coeffs")) throw InputError("missing field 'coeffs'");
  record.q = integer_from_json(doc["q"], "q");
  try {
    record.p = split_prime_power(record.q).p;
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
  if (doc.contains("p") && integer_from_json(doc["p"], "p") != record.p) {
    throw InputError("field 'p' = " + doc["p"].dump() + " is not the prime of q = " +
                     record.q.get_str());
  }
  const Json& coeffs = doc["coeffs"];
  if (!coeffs.is_array()) throw InputError("field 'coeffs' must be an array of integers");
  for (const Json& c : coeffs) record.coeffs.push_back(integer_from_json(c, "coeffs"));
  return record;
}

WeilRecord record_of(const WeilPolynomial& P, std::optional<std::string> label) {
  return {std::move(label), P.q(), P.p(), P.coeffs()};
}

WeilPolynomial validated(const WeilRecord& record) {
  try {
    return validate_weil(record.coeffs, record.q);
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
}

Json parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw InputError(std::string("malformed JSON: ") + err.what());
  }
  if (doc.is_object() && doc.contains("schema")) {
    if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kSchema) {
      throw InputError("unsupported schema " + doc["schema"].dump() + ", expected " +
                       std::string(kSchema));
    }
  }
  return doc;
}

Json document_header(std::string_view command) {
  Json out = Json::object();
  out["schema"] = kSchema;
  out["command"] = command;
  return out;
}

std::string_view to_string(ExitCode code) {
  switch (code) {
    case ExitCode::ok: return "ok";
    case ExitCode::invalid_input: return "invalid_input";
    case ExitCode::internal: return "internal_assertion";
    case ExitCode::resource: return "resource_bound";
  }
  return "unknown";
}

Json error_document(std::string_view command, ExitCode code, std::string_view message) {
  Json out = document_header(command);
  out["error"] = {{"kind", to_string(code)}, {"exit_code", static_cast<int>(code)},
                  {"message", message}};
  return out;
}

}  // namespace hodgesig::io
