#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "amr/batch.hpp"
#include "amr/svg.hpp"
#include "support.hpp"

using namespace amr;

TEST(Svg, PanelDrawsOneGlyphPerEntity) {
  const Concept J = amr::testing::running("<two*left*square*black*avg, two*right*circle*gray*large>");
  const std::string svg = render_panel_svg(J, AttributeSchema::running_example());
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
}

TEST(Svg, MatrixMarksMissingCell) {
  const ConceptMatrix M = amr::testing::running_example_matrix();
  const std::string svg = render_matrix_svg(M.cells, AttributeSchema::running_example());
  EXPECT_NE(svg.find("?"), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
}

TEST(Svg, IravenGrayLevelsComeFromLabels) {
  const auto& s = AttributeSchema::iraven_full();
  VariableNames names = s.names();
  const Concept J = parse_concept("<one*(0.5,0.5,1.0)*circle*#0*(0.6,1)>", names);
  EXPECT_NE(render_panel_svg(J, s).find("rgb(0,0,0)"), std::string::npos);
}

TEST(Batch, ResolveJobs) {
  EXPECT_EQ(resolve_jobs(3), 3u);
  EXPECT_GE(resolve_jobs(0), 1u);
}

TEST(Batch, ParallelMapKeepsOrderAndCapturesErrors) {
  const auto out = parallel_map<int>(100, 4, [](std::size_t i) -> int {
    if (i == 42) throw std::runtime_error("boom");
    return static_cast<int>(i * i);
  });
  ASSERT_EQ(out.size(), 100u);
  for (std::size_t i = 0; i < 100; ++i) {
    if (i == 42) {
      EXPECT_FALSE(out[i].value.has_value());
      EXPECT_EQ(out[i].error, "boom");
    } else {
      EXPECT_EQ(out[i].value, static_cast<int>(i * i));
    }
  }
}

TEST(Batch, ExpandInputs) {
  const auto dir = std::filesystem::temp_directory_path() / "amr_expand_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  for (const char* name : {"b.json", "a.json", "c.xml", "notes.txt"}) std::ofstream(dir / name) << "{}";
  const auto all = expand_inputs({dir.string()});
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].filename(), "a.json");
  EXPECT_EQ(all[2].filename(), "c.xml");
  const auto globbed = expand_inputs({(dir / "*.json").string(), (dir / "a.json").string()});
  EXPECT_EQ(globbed.size(), 2u);
  EXPECT_TRUE(expand_inputs({(dir / "*.none").string()}).empty());
}
