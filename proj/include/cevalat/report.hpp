#pragma once

// Deterministic reports: an ordered JSON body rendered either as JSON
// or as an indented text outline. Timings never enter the body.

#include <json.hpp>
#include <string>

namespace cevalat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a 64-bit over the raw input bytes, lowercase hex.
std::string input_hash(const std::string& bytes);

std::string render_report(const Json& body, bool as_json);

}  // namespace cevalat
