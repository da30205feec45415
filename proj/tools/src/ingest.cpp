#include "hodgesig/io/ingest.hpp"

#include <fstream>

namespace hodgesig::io {

namespace {

WeilRecord parse_line(const std::string& text) {
  Json doc = parse_document(text);
  if (!doc.is_object()) throw InputError("line is not a JSON object");
  if (!doc.contains("coeffs") && doc.contains("poly")) doc["coeffs"] = doc["poly"];
  WeilRecord record = record_from_json(doc, false);
  WeilPolynomial P = validated(record);
  if (doc.contains("g") && integer_from_json(doc["g"], "g") != P.genus()) {
    throw InputError("field 'g' = " + doc["g"].dump() + " disagrees with degree " +
                     std::to_string(P.degree()));
  }
  return record;
}

}  // namespace

IngestResult ingest_stream(std::istream& in) {
  IngestResult result;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      result.records.push_back(parse_line(text));
    } catch (const InputError& err) {
      result.rejects.push_back({line, err.what()});
    }
  }
  return result;
}

IngestResult ingest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return ingest_stream(in);
}

Json to_json(const IngestResult& result) {
  Json out = document_header("ingest");
  Json records = Json::array();
  for (const WeilRecord& r : result.records) records.push_back(to_json(r));
  Json rejects = Json::array();
  for (const Reject& r : result.rejects) rejects.push_back({{"line", r.line}, {"reason", r.reason}});
  out["record_count"] = result.records.size();
  out["reject_count"] = result.rejects.size();
  out["records"] = std::move(records);
  out["rejects"] = std::move(rejects);
  return out;
}

}  // namespace hodgesig::io
