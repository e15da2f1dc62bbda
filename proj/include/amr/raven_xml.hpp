#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "amr/io.hpp"
#include "amr/panel.hpp"
#include "amr/schema.hpp"

namespace amr {

/// How integer-indexed dataset annotations map onto schema labels.
struct RavenMapping {
  /// Label per raw Type index; an empty entry means "no entity".
  std::vector<std::string> type_labels = {"", "triangle", "square", "pentagon", "hexagon", "circle"};
  /// Label per raw Color index.
  std::vector<std::string> color_labels = {"#255", "#224", "#196", "#168", "#140",
                                           "#112", "#84",  "#56",  "#28",  "#0"};
  /// Relative entity size per raw Size index; paired with the sub-panel width
  /// to form the size label "(relative,width)".
  std::vector<double> size_values = {0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  /// Largest coordinate difference accepted when snapping to a schema tuple.
  double tolerance = 1e-3;
  std::string panel_tag = "Panel";
  std::string entity_tag = "Entity";
  std::string bbox_attribute = "bbox";
  std::string type_attribute = "Type";
  std::string size_attribute = "Size";
  std::string color_attribute = "Color";
  /// Root attribute holding the 0-based answer index, when present.
  std::string target_attribute = "target";
};

RavenMapping mapping_from_json(const Json& doc);
Json mapping_to_json(const RavenMapping& mapping);
RavenMapping load_mapping(const std::filesystem::path& path);

/// Parses a 16-panel annotation file: panels 0..7 form the question, 8..15
/// the answers. Entity bboxes (x, y, width, height) snap to the position
/// whose tuple lies within tolerance; Angle and any other attribute is
/// ignored. Throws IngestionError with panel and entity context.
RpmInstance load_raven_xml(const std::filesystem::path& path, const AttributeSchema& schema,
                           const RavenMapping& mapping = {});
/// Same, reading the document from a string.
RpmInstance parse_raven_xml(const std::string& xml, const AttributeSchema& schema, const RavenMapping& mapping = {},
                            const std::string& id = "");

/// Parses labels of the form "(a,b,...)" into numbers; nullopt otherwise.
std::optional<std::vector<double>> parse_tuple_label(const std::string& label);

}  // namespace amr
