#pragma once

// JSON report builders shared by the CLI commands; schemas documented in
// docs/report-schema.md.

#include <json.hpp>

#include "paulidyn/generator.hpp"
#include "paulidyn/mixing.hpp"

namespace paulidyn {

nlohmann::json to_json(const SingularPoint& p);
nlohmann::json to_json(const SingularityReport& report);
nlohmann::json to_json(const DivisibilityVerdict& verdict);
nlohmann::json to_json(const Lemma1Report& report);
nlohmann::json to_json(const SynchronizationReport& report);

const char* to_string(SingularityKind kind);

// Serializes with a trailing newline, 2-space indentation.
void write_json_file(const std::string& path, const nlohmann::json& doc);

}  // namespace paulidyn
