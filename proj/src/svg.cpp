#include "amr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "amr/panel.hpp"
#include "amr/raven_xml.hpp"

namespace amr {

namespace {

struct Placement {
  double x = 0.5;
  double y = 0.5;
  double width = 1.0;
};

int gray_level(VariableId color, const AttributeSchema& schema) {
  const std::string& label = schema.label(color);
  if (label.size() > 1 && label[0] == '#') {
    try {
      return std::clamp(std::stoi(label.substr(1)), 0, 255);
    } catch (const std::exception&) {
    }
  }
  const auto all = schema.variables(Attribute::kColor);
  const auto it = std::find(all.begin(), all.end(), color);
  const double t = all.size() > 1 ? static_cast<double>(it - all.begin()) / static_cast<double>(all.size() - 1) : 0;
  return static_cast<int>(std::lround(255 * (1 - t)));
}

double relative_size(VariableId size, const AttributeSchema& schema) {
  if (auto tuple = parse_tuple_label(schema.label(size)); tuple && !tuple->empty()) return (*tuple)[0];
  const auto index = schema.numeric_index(size).value_or(0);
  const auto cycle = schema.cycle_index(size);
  const std::size_t n = cycle ? schema.cycle(Attribute::kSize, *cycle).size() : 1;
  return 0.4 + 0.5 * (n > 1 ? static_cast<double>(index) / static_cast<double>(n - 1) : 0.5);
}

// Polygon corner count per type index; 0 draws a circle.
int corners(VariableId type, const AttributeSchema& schema) {
  const std::string& label = schema.label(type);
  if (label == "triangle") return 3;
  if (label == "square") return 4;
  if (label == "pentagon") return 5;
  if (label == "hexagon") return 6;
  if (label == "circle") return 0;
  return 3 + static_cast<int>(schema.numeric_index(type).value_or(0));
}

void draw_entity(std::ostringstream& out, const PanelEntity& e, const Placement& at, const AttributeSchema& schema,
                 double ox, double oy, double pixels) {
  const double cx = ox + at.x * pixels;
  const double cy = oy + at.y * pixels;
  const double r = 0.5 * at.width * pixels * relative_size(e.size, schema) * 0.9;
  const int g = gray_level(e.color, schema);
  const std::string style = "fill=\"rgb(" + std::to_string(g) + "," + std::to_string(g) + "," + std::to_string(g) +
                            ")\" stroke=\"black\" stroke-width=\"1.5\"";
  const int n = corners(e.type, schema);
  if (n == 0) {
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" " << style << "/>\n";
    return;
  }
  out << "<polygon points=\"";
  for (int k = 0; k < n; ++k) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * k / n;
    out << (k ? " " : "") << cx + r * std::cos(angle) << ',' << cy + r * std::sin(angle);
  }
  out << "\" " << style << "/>\n";
}

void draw_panel(std::ostringstream& out, const Concept& panel, const AttributeSchema& schema, double ox, double oy,
                double pixels) {
  out << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << pixels << "\" height=\"" << pixels
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  const auto entities = decode_panel(panel, schema);
  for (std::size_t i = 0; i < entities.size(); ++i) {
    Placement at;
    // Position tuples list (row, column, width); rows run down the panel.
    if (auto t = parse_tuple_label(schema.label(entities[i].pos)); t && t->size() == 3) {
      at = {(*t)[1], (*t)[0], (*t)[2]};
    } else {
      const double w = 1.0 / static_cast<double>(entities.size());
      at = {w * (static_cast<double>(i) + 0.5), 0.5, w};
    }
    draw_entity(out, entities[i], at, schema, ox, oy, pixels);
  }
}

void draw_missing(std::ostringstream& out, double ox, double oy, double pixels) {
  out << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << pixels << "\" height=\"" << pixels
      << "\" fill=\"white\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n"
      << "<text x=\"" << ox + pixels / 2 << "\" y=\"" << oy + pixels / 2
      << "\" font-size=\"" << pixels / 3 << "\" text-anchor=\"middle\" dominant-baseline=\"central\">?</text>\n";
}

std::string open_svg(double w, double h) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\">\n";
  return out.str();
}

}  // namespace

std::string render_panel_svg(const Concept& panel, const AttributeSchema& schema, double pixels) {
  std::ostringstream out;
  out << open_svg(pixels, pixels);
  draw_panel(out, panel, schema, 0, 0, pixels);
  out << "</svg>\n";
  return out.str();
}

std::string render_matrix_svg(std::span<const Concept> cells, const AttributeSchema& schema, double panel_pixels) {
  const double gap = panel_pixels / 16;
  const double side = 3 * panel_pixels + 4 * gap;
  std::ostringstream out;
  out << open_svg(side, side);
  for (std::size_t k = 0; k < 9; ++k) {
    const double ox = gap + static_cast<double>(k % 3) * (panel_pixels + gap);
    const double oy = gap + static_cast<double>(k / 3) * (panel_pixels + gap);
    if (k < cells.size() && !cells[k].is_zero()) {
      draw_panel(out, cells[k], schema, ox, oy, panel_pixels);
    } else {
      draw_missing(out, ox, oy, panel_pixels);
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace amr
