#pragma once

// Document builders behind the CLI subcommands. Each throws InputError for
// bad payloads and ResourceError when a bound or the precision ladder runs
// out; the caller maps those to exit codes.

#include "hodgesig/io/config.hpp"
#include "hodgesig/io/documents.hpp"

#include <vector>

namespace hodgesig::io {

/// Slopes, Tate counts, exotic subsets with decimal enclosures, structure
/// checks and the predicted signature of a degree-8 record.
Json analyze_document(const WeilRecord& record, const Config& config);

/// Whether an analyze document reports a structure violation (exit code 2).
bool has_structure_violation(const Json& analyze);

/// Checks q <= max_q and g <= max_g before anything is enumerated.
void check_enumeration_bounds(const Integer& q, int g, const Config& config);

/// Weil records of genus g over F_q; with max_factor_genus set, only the
/// products of factors of at most that genus.
std::vector<WeilRecord> enumerate_records(const Integer& q, int g, std::optional<int> max_factor_genus,
                                          const Config& config);

/// Payload {"q1": form, "q2": form, "places": [...]} where a form is
/// [g11, g12, g22] or a symmetric 2x2 matrix and a place is "real" or a prime.
Json forms_document(const Json& payload);

/// Payload with "p" and either "d" or "kind", plus "x" (norm membership)
/// and/or "i" (period norm class and p-adic verdict).
Json norm_document(const Json& payload);

/// Payload "mode": "motive" (default), "rank2" or "honda_tate".
Json signature_document(const Json& payload);

/// Quick internal consistency run; "passed" is false on any failure.
Json selftest_document(const Config& config);

}  // namespace hodgesig::io
