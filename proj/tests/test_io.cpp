#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "amr/error.hpp"
#include "amr/io.hpp"
#include "amr/raven_xml.hpp"
#include "support.hpp"

using namespace amr;
using amr::testing::running;

namespace {

const AttributeSchema& small() { return AttributeSchema::running_example(); }
const AttributeSchema& full() { return AttributeSchema::iraven_full(); }

std::filesystem::path data(const char* name) { return std::filesystem::path(AMR_DATA_DIR) / name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "amr_io_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

/// A 16-panel center-configuration document; `entity` renders panel i.
template <typename F>
std::string raven_doc(std::size_t panels, F entity, const char* target = "0") {
  std::ostringstream out;
  out << "<Data target=\"" << target << "\"><Panels>";
  for (std::size_t i = 0; i < panels; ++i) {
    out << "<Panel><Struct><Component><Layout>" << entity(i) << "</Layout></Component></Struct></Panel>";
  }
  out << "</Panels></Data>";
  return out.str();
}

std::string center_entity(int type, int size, int color) {
  return "<Entity bbox=\"[0.5, 0.5, 1, 1]\" Type=\"" + std::to_string(type) + "\" Size=\"" +
         std::to_string(size) + "\" Color=\"" + std::to_string(color) + "\" Angle=\"90\"/>";
}

}  // namespace

TEST(InstanceJson, LoadsRunningExampleFixture) {
  const RpmInstance inst = load_instance(data("running_example.json"), small());
  EXPECT_EQ(inst.question.size(), 8u);
  EXPECT_EQ(inst.answers.size(), 8u);
  EXPECT_EQ(inst.ground_truth, 3u);
  EXPECT_EQ(inst.question[0], running("<two*left*square*black*avg, two*right*triangle*gray*avg>"));
}

TEST(InstanceJson, RoundTrip) {
  const RpmInstance inst = load_instance(data("running_example.json"), small());
  EXPECT_EQ(instance_from_json(instance_to_json(inst, small()), small()), inst);
  const auto path = scratch("instance.json");
  save_instance(inst, small(), path);
  EXPECT_EQ(load_instance(path, small()), inst);
}

TEST(InstanceJson, TypoNamesTheAttributeAndPath) {
  Json doc = instance_to_json(load_instance(data("running_example.json"), small()), small());
  doc["panels"][2][0]["type"] = "pentagn";
  try {
    instance_from_json(doc, small());
    FAIL() << "expected IngestionError";
  } catch (const IngestionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("type"), std::string::npos);
    EXPECT_NE(msg.find("pentagn"), std::string::npos);
    EXPECT_NE(msg.find("panels"), std::string::npos);
  }
}

TEST(InstanceJson, StructuralErrors) {
  Json doc = instance_to_json(load_instance(data("running_example.json"), small()), small());
  Json empty_panel = doc;
  empty_panel["panels"][0] = Json::array();
  EXPECT_THROW(instance_from_json(empty_panel, small()), IngestionError);
  Json short_answers = doc;
  short_answers["answers"].erase(short_answers["answers"].begin());
  EXPECT_THROW(instance_from_json(short_answers, small()), IngestionError);
  Json missing_field = doc;
  missing_field["panels"][1][0].erase("color");
  EXPECT_THROW(instance_from_json(missing_field, small()), IngestionError);
  EXPECT_THROW(read_json_file(scratch("does-not-exist.json")), IngestionError);
}

TEST(SchemaJson, RoundTripPreservesBehaviour) {
  for (const AttributeSchema* s : {&small(), &full()}) {
    const AttributeSchema back = schema_from_json(schema_to_json(*s));
    EXPECT_EQ(back.size(), s->size());
    EXPECT_EQ(back.names().labels(), s->names().labels());
    for (std::uint32_t v = 0; v < s->size(); ++v) {
      EXPECT_EQ(back.shift(VariableId{v}, 1), s->shift(VariableId{v}, 1));
    }
  }
  const auto path = scratch("schema.json");
  save_schema(small(), path);
  EXPECT_EQ(resolve_schema(path.string()).names().labels(), small().names().labels());
  EXPECT_EQ(resolve_schema("running-example").name(), "running-example");
}

TEST(ReportJson, RoundTrip) {
  const RpmInstance inst = load_instance(data("running_example.json"), small());
  ReasoningContext ctx(small(), {});
  const SelectionReport r = select_answer(inst, ctx);
  EXPECT_EQ(report_from_json(report_to_json(r, small()), small()), r);
  const auto path = scratch("report.json");
  save_report(r, small(), path);
  EXPECT_EQ(load_report(path, small()), r);
}

TEST(ConfigJson, RoundTrip) {
  SolverConfig c;
  c.deltas = {3, -1};
  c.binary_ops = {BinaryOp::kMul};
  c.modules = parse_modules("intra,binary");
  EXPECT_EQ(config_from_json(config_to_json(c)), c);
}

TEST(GeneratedJson, RoundTrip) {
  ReasoningContext ctx(small(), {});
  const GeneratedAnswer g = generate_answer(amr::testing::running_example_matrix(), ctx, 5);
  EXPECT_EQ(generated_from_json(generated_to_json(g, small()), small()), g);
}

TEST(Rationals, Format) {
  EXPECT_EQ(format_rational(Rational(3, 6)), "1/2");
  EXPECT_EQ(format_rational(Rational(4)), "4");
}

TEST(RavenXml, CenterFixture) {
  const RpmInstance inst = load_raven_xml(data("center_example.xml"), full());
  EXPECT_EQ(inst.ground_truth, 2u);
  EXPECT_EQ(inst.question.size(), 8u);
  const auto ents = decode_panel(inst.question[0], full());
  ASSERT_EQ(ents.size(), 1u);
  EXPECT_EQ(full().label(ents[0].pos), "(0.5,0.5,1.0)");
  EXPECT_EQ(full().label(ents[0].type), "triangle");
  EXPECT_EQ(full().label(ents[0].color), "#168");
  EXPECT_EQ(full().label(ents[0].size), "(0.6,1)");
}

TEST(RavenXml, WrongPanelCount) {
  const auto doc = raven_doc(15, [](std::size_t) { return center_entity(1, 2, 3); });
  EXPECT_THROW(parse_raven_xml(doc, full()), IngestionError);
}

TEST(RavenXml, OutOfRangeIndexNamesPanel) {
  const auto doc = raven_doc(16, [](std::size_t i) { return center_entity(i == 5 ? 9 : 1, 2, 3); });
  try {
    parse_raven_xml(doc, full());
    FAIL() << "expected IngestionError";
  } catch (const IngestionError& e) {
    EXPECT_NE(std::string(e.what()).find("panel 5"), std::string::npos) << e.what();
  }
}

TEST(RavenXml, UnsnappablePosition) {
  const auto doc = raven_doc(16, [](std::size_t i) {
    return i == 0 ? std::string("<Entity bbox=\"[0.31, 0.5, 1, 1]\" Type=\"1\" Size=\"2\" Color=\"3\"/>")
                  : center_entity(1, 2, 3);
  });
  EXPECT_THROW(parse_raven_xml(doc, full()), IngestionError);
}

TEST(RavenXml, MappingOverrideChangesLabels) {
  RavenMapping mapping;
  mapping.type_labels = {"", "circle", "square", "pentagon", "hexagon", "triangle"};
  const auto doc = raven_doc(16, [](std::size_t) { return center_entity(1, 2, 3); }, "4");
  const RpmInstance inst = parse_raven_xml(doc, full(), mapping, "override");
  EXPECT_EQ(inst.id, "override");
  EXPECT_EQ(inst.ground_truth, 4u);
  EXPECT_EQ(full().label(decode_panel(inst.answers[7], full())[0].type), "circle");
  EXPECT_EQ(mapping_from_json(mapping_to_json(mapping)).type_labels, mapping.type_labels);
  EXPECT_EQ(load_mapping(data("raven_mapping.json")).color_labels, RavenMapping{}.color_labels);
}

TEST(RavenXml, TupleLabels) {
  EXPECT_EQ(parse_tuple_label("(0.5,0.25,1)"), (std::vector<double>{0.5, 0.25, 1.0}));
  EXPECT_FALSE(parse_tuple_label("dummy").has_value());
}
