#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "amr/generation.hpp"
#include "amr/invariance.hpp"
#include "amr/panel.hpp"
#include "amr/schema.hpp"

namespace amr {

using Json = nlohmann::ordered_json;

// Instance documents:
//   {"schema": name, "id": str, "panels": [8 x [entity]], "answers": [8 x [entity]],
//    "ground_truth": int?}
// with entity records {"pos", "type", "color", "size"} holding variable labels.
// Errors are IngestionError with a JSON-pointer-like path prefix.

RpmInstance instance_from_json(const Json& doc, const AttributeSchema& schema);
Json instance_to_json(const RpmInstance& instance, const AttributeSchema& schema);
RpmInstance load_instance(const std::filesystem::path& path, const AttributeSchema& schema);
void save_instance(const RpmInstance& instance, const AttributeSchema& schema, const std::filesystem::path& path);

// Schema documents:
//   {"name": str, "attributes": [{"attribute": "num", "variables": [...],
//    "cycles": [[...], ...], "sink": str?}, ...]}

AttributeSchema schema_from_json(const Json& doc);
Json schema_to_json(const AttributeSchema& schema);
AttributeSchema load_schema(const std::filesystem::path& path);
void save_schema(const AttributeSchema& schema, const std::filesystem::path& path);
/// A preset name, or else a path to a schema document.
AttributeSchema resolve_schema(const std::string& preset_or_path);

Json pattern_to_json(const TaggedPattern& p, const AttributeSchema& schema);
TaggedPattern pattern_from_json(const Json& doc, const AttributeSchema& schema);

Json report_to_json(const SelectionReport& report, const AttributeSchema& schema);
SelectionReport report_from_json(const Json& doc, const AttributeSchema& schema);
void save_report(const SelectionReport& report, const AttributeSchema& schema, const std::filesystem::path& path);
SelectionReport load_report(const std::filesystem::path& path, const AttributeSchema& schema);

Json config_to_json(const SolverConfig& config);
SolverConfig config_from_json(const Json& doc);

Json generated_to_json(const GeneratedAnswer& answer, const AttributeSchema& schema);
GeneratedAnswer generated_from_json(const Json& doc, const AttributeSchema& schema);

Json similarity_to_json(const SimilarityReport& report, const AttributeSchema& schema);

/// Exact rational as "p/q" (or "p").
std::string format_rational(const Rational& r);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const Json& doc, const std::filesystem::path& path);

}  // namespace amr
