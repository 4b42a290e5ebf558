#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "wordmaps/engine.hpp"
#include "wordmaps/search.hpp"
#include "wordmaps/verifier.hpp"

namespace wordmaps {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Structured documents with fixed field order. Timing lives only in
/// "wall_ms" fields, which stable_digest ignores.
Json to_json(const ChiralityReport& r, bool with_counts = true);
Json to_json(const VerificationReport& r);
Json to_json(const Finding& f);
Json to_json(const FiniteGroup& g, bool with_table);
Finding finding_from_json(const Json& j);
/// Parses one line of a findings file. Throws ParseError.
Finding parse_finding(const std::string& line);

/// Copy of `j` with every "wall_ms" field removed.
Json strip_timing(const Json& j);
/// FNV-1a 64 over the compact dump of strip_timing(j), as 16 hex digits.
std::string stable_digest(const Json& j);
std::string stable_digest_of_lines(const std::string& text);

std::string render_human(const ChiralityReport& r, const FiniteGroup& g, bool with_counts);
std::string render_human(const VerificationReport& r);

}  // namespace wordmaps
