#include <gtest/gtest.h>

#include "hpd/grid.hpp"
#include "hpd/report_io.hpp"

using hpd::GradedDims;
using hpd::Int;
using hpd::io::json;
namespace engine = hpd::engine;
namespace grid = hpd::grid;

namespace {

TEST(GridTest, AsciiLayoutAndDivider) {
  // alpha runs downward, beta runs rightward, heavy divider after beta = 0
  grid::GridExtent e{0, 1, -1, 1};
  std::string art = grid::render_ascii(e, [](engine::Box b) {
    return b.alpha == 1 && b.beta == 0 ? std::string("X") : std::string();
  });
  EXPECT_EQ(art,
            "  a\\b  -1   0 ||   1\n"
            "   0    .   . ||   .\n"
            "   1    .   X ||   .\n");
}

TEST(GridTest, DividerOmittedWhenNoRemovedColumns) {
  grid::GridExtent e{0, 0, -1, 0};
  std::string art = grid::render_ascii(e, [](engine::Box) { return ""; });
  EXPECT_EQ(art.find("||"), std::string::npos);
}

TEST(GridTest, WalkthroughMarksStartAndSupport) {
  engine::GridState g = engine::mutation_walkthrough(3, 3);
  std::string art = grid::walkthrough_ascii(g);
  EXPECT_NE(art.find('*'), std::string::npos);
  EXPECT_NE(art.find('S'), std::string::npos);
  EXPECT_NE(art.find("||"), std::string::npos);

  // a length-one chain still draws the start box on an otherwise empty grid
  engine::GridState trivial = engine::mutation_walkthrough(1, 2);
  std::string small = grid::walkthrough_ascii(trivial);
  EXPECT_NE(small.find('*'), std::string::npos);
  EXPECT_EQ(small.find('S'), std::string::npos);
}

TEST(GridTest, SvgContainsCellsAndDivider) {
  engine::GridState g = engine::mutation_walkthrough(2, 2);
  std::string svg = grid::walkthrough_svg(g);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<rect"), std::string::npos);
  EXPECT_NE(svg.find("stroke-width=\"3\""), std::string::npos);  // divider
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(ReportIoTest, IntegersBeyondInt64SerializeAsStrings) {
  Int huge("123456789012345678901234567890");
  json j = hpd::io::json_int(huge);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(hpd::io::int_from_json(j), huge);

  json small = hpd::io::json_int(Int(-7));
  EXPECT_TRUE(small.is_number_integer());
  EXPECT_EQ(hpd::io::int_from_json(small), -7);
}

TEST(ReportIoTest, TableRoundTrip) {
  GradedDims table({{0, 3}, {5, 1}});
  json j = hpd::io::to_json(table);
  EXPECT_EQ(j, json::parse("[[0, 3], [5, 1]]"));
  EXPECT_EQ(hpd::io::table_from_json(j), table);
}

TEST(ReportIoTest, TsvTable) {
  GradedDims table({{2, 4}});
  EXPECT_EQ(hpd::io::tsv_table(table), "q\tdim\n2\t4\n");
}

}  // namespace
