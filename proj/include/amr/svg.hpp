#pragma once

#include <span>
#include <string>

#include "amr/concept.hpp"
#include "amr/schema.hpp"

namespace amr {

// Schematic vector drawings of panels. Entities sit at the (x, y, width)
// tuple of their position label when it has one, otherwise in a left to
// right strip. Fill is the gray level of "#N" color labels, or evenly spaced
// levels by color index. Glyph size scales with the index of the size
// variable within its sub-sequence.

/// A standalone <svg> document of one panel, `pixels` wide and high.
std::string render_panel_svg(const Concept& panel, const AttributeSchema& schema, double pixels = 200);

/// A 3x3 matrix of panels in row-major order; missing or zero cells are
/// drawn as a dashed frame with a question mark.
std::string render_matrix_svg(std::span<const Concept> cells, const AttributeSchema& schema, double panel_pixels = 160);

}  // namespace amr
