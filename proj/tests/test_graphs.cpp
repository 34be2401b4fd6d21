#include <gtest/gtest.h>

#include "nilsym/catalog.hpp"
#include "nilsym/graphs.hpp"
#include "nilsym/symplectic.hpp"
#include "oracles.hpp"

using namespace nilsym;

namespace {

Errc code_of(std::size_t v, std::vector<DirectedGraph::Edge> e) {
  try {
    DirectedGraph g(v, std::move(e));
  } catch (const Error& err) {
    return err.code();
  }
  return Errc::Parse;  // sentinel: no error
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Graph, InvalidInputs) {
  EXPECT_EQ(code_of(0, {{1, 2}}), Errc::BadIndex);
  EXPECT_EQ(code_of(3, {}), Errc::NoEdges);
  EXPECT_EQ(code_of(3, {{1, 4}}), Errc::BadIndex);
  EXPECT_EQ(code_of(3, {{0, 1}}), Errc::BadIndex);
  EXPECT_EQ(code_of(3, {{2, 2}}), Errc::SelfLoop);
  EXPECT_EQ(code_of(3, {{1, 2}, {2, 1}}), Errc::DuplicateEdge);
  EXPECT_EQ(code_of(3, {{1, 2}, {1, 2}}), Errc::DuplicateEdge);
  EXPECT_THROW(complete_graph(1), Error);
}

TEST(Graph, SingleEdgeIsHeisenberg) {
  LieAlgebra a = graph_algebra(DirectedGraph(2, {{1, 2}}));
  EXPECT_EQ(a.dim(), 3u);
  EXPECT_EQ(a.bracket(0, 1), unit_vector(3, 2));
  LieAlgebra rev = graph_algebra(DirectedGraph(2, {{2, 1}}));
  EXPECT_EQ(rev.bracket(0, 1), Rational(-1) * unit_vector(3, 2));
  EXPECT_EQ(closed_space(a).dim(), closed_space(catalog::get("h1").algebra).dim());
}

TEST(Graph, TriangleIsFreeOnThreeGenerators) {
  LieAlgebra k3 = free_2step(3);
  LieAlgebra f6 = catalog::get("f6").algebra;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(k3.bracket(i, j), f6.bracket(i, j));
}

TEST(Graph, CompleteGraphEdgeOrder) {
  DirectedGraph k4 = complete_graph(4);
  std::vector<DirectedGraph::Edge> want{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(k4.edges(), want);
  EXPECT_EQ(free_2step(4).dim(), 10u);
  EXPECT_EQ(free_2step(5).dim(), 15u);
  EXPECT_EQ(free_2step(4).name(), "f(4)");
}

TEST(Graph, Components) {
  DirectedGraph g(5, {{1, 2}, {4, 5}});
  auto c = components(g);
  EXPECT_EQ(c[0], c[1]);
  EXPECT_EQ(c[3], c[4]);
  EXPECT_NE(c[0], c[2]);
  EXPECT_NE(c[0], c[3]);
}

TEST(PtCriterion, Examples) {
  EXPECT_FALSE(pt_criterion(DirectedGraph(2, {{1, 2}})));            // odd total
  EXPECT_TRUE(pt_criterion(DirectedGraph(3, {{1, 2}})));             // h1 + R
  EXPECT_TRUE(pt_criterion(complete_graph(3)));                      // f6
  EXPECT_FALSE(pt_criterion(complete_graph(4)));                     // 6 edges on 4 vertices
  EXPECT_TRUE(pt_criterion(DirectedGraph(4, {{1, 2}, {3, 4}})));     // two disjoint edges
  EXPECT_FALSE(pt_criterion(DirectedGraph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {2, 4}})));
  // even total but one component has too many edges
  EXPECT_FALSE(pt_criterion(DirectedGraph(7, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 6}})));
}

TEST(GraphAlgebra, CenterAndCommutator) {
  // no isolated vertices: z is spanned by the edge vectors
  DirectedGraph g(4, {{1, 2}, {2, 3}, {3, 4}});
  LieAlgebra a = graph_algebra(g);
  EXPECT_EQ(center(a).size(), 3u);
  EXPECT_EQ(commutator(a).size(), 3u);
  // an isolated vertex adds to the center but not to the commutator
  LieAlgebra b = graph_algebra(DirectedGraph(3, {{1, 2}}));
  EXPECT_EQ(center(b).size(), 2u);
  EXPECT_EQ(commutator(b).size(), 1u);
}

TEST(CompleteGraph, TypeTwoSystemRank) {
  for (std::size_t n = 3; n <= 6; ++n) {
    Decomposition d(free_2step(n), Metric::identity(n + binom(n, 2)));
    QMatrix sys = type_two_system(d);
    EXPECT_EQ(sys.cols(), n * binom(n, 2)) << n;
    EXPECT_EQ(rank(sys), binom(n, 3)) << n;
    EXPECT_EQ(type_II_closed_space(d).dim(), n * binom(n, 2) - binom(n, 3)) << n;
  }
}

TEST(CompleteGraph, K4System) {
  Decomposition d(free_2step(4), Metric::identity(10));
  QMatrix sys = type_two_system(d);
  EXPECT_EQ(sys.cols(), 24u);
  EXPECT_EQ(sys.rows(), 4u);
  EXPECT_EQ(rank(sys), 4u);
  EXPECT_EQ(type_II_closed_space(d).dim(), 20u);
  EXPECT_EQ(symplectic_exists(free_2step(4)).answer, Answer::No);
}

TEST(PtCriterion, AgreesWithDecisionProcedureUpToFourVertices) {
  for (std::size_t v = 2; v <= 4; ++v) {
    std::vector<DirectedGraph::Edge> all;
    for (std::size_t i = 1; i <= v; ++i)
      for (std::size_t l = i + 1; l <= v; ++l) all.emplace_back(i, l);
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<DirectedGraph::Edge> edges;
      for (std::size_t b = 0; b < all.size(); ++b)
        if (mask >> b & 1u) edges.push_back(b % 2 ? all[b] : std::make_pair(all[b].second, all[b].first));
      DirectedGraph g(v, edges);
      Verdict verdict = symplectic_exists(graph_algebra(g));
      ASSERT_NE(verdict.answer, Answer::Unknown) << v << " " << mask;
      EXPECT_EQ(pt_criterion(g), verdict.answer == Answer::Yes) << v << " " << mask;
      EXPECT_TRUE(check_verdict(graph_algebra(g), verdict));
    }
  }
}

TEST(GraphAlgebra, OracleAgreement) {
  for (std::size_t n = 3; n <= 5; ++n) {
    LieAlgebra a = free_2step(n);
    auto s = oracle::constants(a);
    EXPECT_EQ(closed_space(a).dim(), oracle::closed_dim(s));
    EXPECT_EQ(type_II_closed_space(Decomposition(a, Metric::identity(a.dim()))).dim(),
              oracle::typed_closed_dim(s, true));
  }
}
