#pragma once

#include <string>

#include "pathoverlap/model.hpp"

namespace pathoverlap {

/// Canonical JSON interchange: top-level keys `species`, `reactions`,
/// `edges`. Writing is byte-deterministic (sorted keys, sorted records);
/// write/parse round-trips losslessly. Parsing rejects unknown keys and
/// bad role strings with SchemaViolation, malformed JSON with
/// JsonMalformed, and validates the graph on build.
PathwayGraph parse_graph_json(const std::string& text);
std::string write_graph_json(const PathwayGraph& g);

} // namespace pathoverlap
