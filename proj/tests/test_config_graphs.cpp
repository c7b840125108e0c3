#include <algorithm>

#include <gtest/gtest.h>

#include "humbert/graphs.hpp"

using namespace humbert;

namespace {

std::map<std::string, unsigned> counts(unsigned d) {
  std::map<std::string, unsigned> out;
  for (const auto& c : enumerate_classes(d)) ++out[c.label.substr(0, c.label.find(')') + 1)];
  return out;
}

} // namespace

TEST(ConfigGraphs, ConicCensus) {
  auto c = counts(2);
  EXPECT_EQ(c["(5,1)"], 1u);
  EXPECT_EQ(c["(4,2)"], 1u);
  EXPECT_EQ(c["(3,3)"], 1u);
  for (const auto& cls : enumerate_classes(2)) {
    std::size_t k = cls.representative.edges.size();
    EXPECT_EQ(cls.pipeline_supported, k >= 3 && k <= 5) << cls.label;
  }
}

TEST(ConfigGraphs, CubicCensus) {
  auto c = counts(3);
  const std::map<std::string, unsigned> expected{{"(9,0)", 2}, {"(8,1)", 1}, {"(7,2)", 2}, {"(6,3)", 1},
                                                 {"(5,4)", 1}, {"(4,5)", 1}, {"(3,6)", 1}};
  EXPECT_EQ(c, expected);
  unsigned bipartite = 0;
  for (const auto& cls : enumerate_classes(3))
    if (cls.label.rfind("(9,0)", 0) == 0) bipartite += cls.bipartite;
  EXPECT_EQ(bipartite, 1u);
}

TEST(ConfigGraphs, WorkedRepresentativesAreRegularAndClassified) {
  for (const auto& [label, g] : paper_representatives()) {
    EXPECT_TRUE(is_regular(g)) << label;
    EXPECT_EQ(classify(g), label);
  }
  EXPECT_TRUE(is_bipartite(paper_representatives().at("(9,0)a")));
  EXPECT_FALSE(is_bipartite(paper_representatives().at("(9,0)b")));
}

TEST(ConfigGraphs, ClassifyIsRelabelingInvariant) {
  const std::array<unsigned, 7> perm{0, 3, 5, 1, 6, 2, 4};
  for (const auto& [label, g] : paper_representatives()) EXPECT_EQ(classify(relabel(g, perm)), label);
}

TEST(ConfigGraphs, DeltaFromFormula) {
  EXPECT_EQ(delta_of(2, 5), 5);
  EXPECT_EQ(delta_of(2, 4), 8);
  EXPECT_EQ(delta_of(2, 3), 9);
  EXPECT_EQ(delta_of(3, 9), 8);
  EXPECT_EQ(delta_of(3, 8), 9);
  EXPECT_EQ(delta_of(3, 6), 13);
  EXPECT_THROW(delta_of(3, 2), DomainError);
}

TEST(ConfigGraphs, VertexCovers) {
  auto covers = vertex_covers(paper_representatives().at("(8,1)"), 3);
  EXPECT_NE(std::find(covers.begin(), covers.end(), std::vector<unsigned>{2, 3, 5}), covers.end());
  auto c72 = vertex_covers(paper_representatives().at("(7,2)a"), 3);
  EXPECT_NE(std::find(c72.begin(), c72.end(), std::vector<unsigned>{1, 2, 4}), c72.end());
  EXPECT_NE(std::find(c72.begin(), c72.end(), std::vector<unsigned>{1, 3, 4}), c72.end());
  // {3,5,6} misses q12 and q24.
  EXPECT_EQ(std::find(c72.begin(), c72.end(), std::vector<unsigned>{3, 5, 6}), c72.end());
  EXPECT_TRUE(vertex_covers(paper_representatives().at("(9,0)b"), 3).empty());
}

TEST(ConfigGraphs, TupleRoundTrip) {
  for (const auto& [label, g] : paper_representatives()) EXPECT_EQ(graph_of(g.degree, tuple_of(g)), g) << label;
  EXPECT_THROW(make_graph(3, {{1, 1}}, {}), DomainError);
}

TEST(ConfigGraphs, LabelLookup) {
  EXPECT_TRUE(isomorphic(graph_for_label(3, "7,2b"), paper_representatives().at("(7,2)b")));
  EXPECT_THROW(graph_for_label(3, "(10,0)"), DomainError);
}
