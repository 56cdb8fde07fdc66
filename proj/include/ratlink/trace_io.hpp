#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ratlink/contfrac.hpp"
#include "ratlink/engine.hpp"
#include "ratlink/verifier.hpp"

namespace ratlink {

enum class TraceFormat { json, csv, markdown };

/// Serializes a trace. JSON is lossless (all big integers as decimal
/// strings); csv and markdown are table-shaped with one row per step and
/// the matrices flattened row-major.
std::string emit_trace(const TransformTrace& trace, TraceFormat format);

/// Inverse of emit_trace for the JSON format. Throws std::invalid_argument
/// on malformed documents.
TransformTrace parse_trace(std::string_view json_text);

/// JSON array of {n, p, q} with p and q as decimal strings.
std::string convergents_to_json(const std::vector<Convergent>& cs);

/// JSON array of verifier reports, both sides as decimal strings.
std::string reports_to_json(const std::vector<LemmaReport>& reports);

}  // namespace ratlink
