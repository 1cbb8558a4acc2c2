#include <gtest/gtest.h>

#include "graphs.hpp"
#include "hyperell/dot.hpp"
#include "hyperell/hgr.hpp"
#include "hyperell/testkit.hpp"

using namespace hyperell;
using namespace hyperell::testing;

TEST(Hgr, Examples) {
  EXPECT_TRUE(parse_hgr("hgr 2 3\ne 0 1\ne 0 1\ne 0 1\n") == banana(3));
  const Multigraph loop = parse_hgr("hgr 1 1\ne 0 0");
  EXPECT_EQ(loop.loop_count(vid(0)), 1u);
  const Multigraph c = parse_hgr("hgr 2 1\ne 0 1\nc 0 1\n");
  EXPECT_TRUE(c.has_constraint(vid(0), vid(1)));
}

TEST(Hgr, CommentsAndBlankLines) {
  const Multigraph g = parse_hgr("# header follows\n\nhgr 3 2  # trailing\n  e 0 1\n\te 1 2\r\n# done\n");
  EXPECT_TRUE(g == path(3));
}

TEST(Hgr, Errors) {
  EXPECT_THROW(parse_hgr(""), ParseError);
  EXPECT_THROW(parse_hgr("graph 2 1\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse_hgr("hgr 2 x\n"), ParseError);
  EXPECT_THROW(parse_hgr("hgr 2 1\ne 0 2\n"), ParseError);
  EXPECT_THROW(parse_hgr("hgr 2 2\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse_hgr("hgr 2 1\ne 0 1\ne 0 1\n"), ParseError);
  EXPECT_THROW(parse_hgr("hgr 2 1\ne 0 1 1\n"), ParseError);
  EXPECT_THROW(parse_hgr("hgr 2 1\nx 0 1\n"), ParseError);
  EXPECT_THROW(parse_hgr("hgr 2 1\ne -1 1\n"), ParseError);
  try {
    parse_hgr("hgr 2 1\n\ne 0 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Hgr, DuplicateConstraintWarns) {
  std::vector<std::string> warnings;
  const Multigraph g = parse_hgr("hgr 2 1\ne 0 1\nc 0 1\nc 1 0\n", &warnings);
  EXPECT_EQ(g.num_constraints(), 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Hgr, RoundTrip) {
  for (const Multigraph& g : small_corpus(91, 300, 9, 14)) {
    Multigraph h = g;
    if (h.num_vertices() >= 2) h.add_constraint(vid(0), vid(1));
    EXPECT_TRUE(parse_hgr(print_hgr(h)) == h);
  }
}

TEST(Hgr, RoundTripRelabels) {
  Multigraph g = path(4);
  g.delete_edge(g.edges().front());
  g.delete_vertex(vid(0));
  g.add_constraint(vid(1), vid(3));
  const Multigraph h = parse_hgr(print_hgr(g));
  EXPECT_EQ(h.num_vertices(), 3u);
  EXPECT_TRUE(h.has_constraint(vid(0), vid(2)));
  EXPECT_EQ(print_hgr(h), print_hgr(g));
}

TEST(Dot, ConstraintsDashed) {
  Multigraph g = path(2);
  g.add_constraint(vid(0), vid(1));
  const std::string sgon = to_dot(g, Flavor::Sgon, "x");
  EXPECT_NE(sgon.find("0 -- 1;"), std::string::npos);
  EXPECT_NE(sgon.find("style=dashed, color=green"), std::string::npos);
  EXPECT_NE(to_dot(g, Flavor::Sdgon).find("color=red"), std::string::npos);
}
