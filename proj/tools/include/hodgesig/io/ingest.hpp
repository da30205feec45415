#pragma once

// Newline-delimited Weil records in the LMFDB export convention.

#include "hodgesig/io/documents.hpp"

#include <istream>
#include <string>
#include <vector>

namespace hodgesig::io {

struct Reject {
  std::size_t line = 0;  // 1-based
  std::string reason;
};

struct IngestResult {
  std::vector<WeilRecord> records;
  std::vector<Reject> rejects;
};

/// One JSON object per line with label, q and ascending coefficients under
/// "coeffs" (or "poly"); other fields of the export are ignored. Blank lines
/// are skipped, every other line becomes a record or a reject.
IngestResult ingest_stream(std::istream& in);

/// InputError if the file cannot be opened.
IngestResult ingest_file(const std::string& path);

Json to_json(const IngestResult& result);

}  // namespace hodgesig::io
