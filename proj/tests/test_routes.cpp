#include <gtest/gtest.h>

#include "flowtri/catalog.hpp"
#include "flowtri/errors.hpp"
#include "flowtri/routes.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flowtri;
using testing_helpers::decomposition;
using testing_helpers::names;
using testing_helpers::route;

using Names = std::vector<std::string>;

TEST(EnumerateRoutes, ParallelEdges) {
  EXPECT_EQ(names(catalog::parallel(3), enumerate_routes(catalog::parallel(3))), (Names{"e1", "e2", "e3"}));
}

TEST(EnumerateRoutes, D1InLexicographicOrder) {
  EXPECT_EQ(names(catalog::d1(), enumerate_routes(catalog::d1())), (Names{"ac", "ad", "bc", "bd"}));
}

TEST(EnumerateRoutes, CountsMatchPathSearch) {
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    const auto routes = enumerate_routes(g);
    EXPECT_EQ(routes.size(), oracle::all_paths(g).size());
    EXPECT_EQ(static_cast<std::size_t>(count_routes(g)), routes.size());
    for (const auto& r : routes) EXPECT_TRUE(is_route(g, r));
  }
  EXPECT_EQ(count_routes(catalog::d2()), 8);
}

TEST(RouteDecomposition, D1GreedyPeel) {
  EXPECT_EQ(names(catalog::d1(), route_decomposition(catalog::d1())), (Names{"ac", "bd"}));
}

TEST(RouteDecomposition, ParallelEdgesAreSingletons) {
  const auto d = route_decomposition(catalog::parallel(3));
  ASSERT_EQ(d.size(), 3U);
  for (const auto& r : d) EXPECT_EQ(r.edges.size(), 1U);
}

TEST(RouteDecomposition, SizeIsSourceOutdegree) {
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    const auto d = route_decomposition(g);
    EXPECT_EQ(static_cast<int>(d.size()), g.outdeg(g.source()));
    EXPECT_TRUE(is_route_decomposition(g, d));
  }
}

TEST(RouteDecomposition, UnbalancedGraphIsRejected) {
  EXPECT_THROW(route_decomposition(testing_helpers::star(2, 3)), NotGorenstein);
}

TEST(IsRouteDecomposition, Examples) {
  const Dag d1 = catalog::d1();
  EXPECT_TRUE(is_route_decomposition(d1, decomposition(d1, {"ac", "bd"})));
  EXPECT_FALSE(is_route_decomposition(d1, decomposition(d1, {"ac", "bc"})));
  const Dag d2 = catalog::d2();
  EXPECT_TRUE(is_route_decomposition(d2, decomposition(d2, {"ace", "bdf"})));
  EXPECT_FALSE(is_route_decomposition(d2, decomposition(d2, {"ace"})));
}

TEST(DecompositionFraming, OrdersEdgesByRouteIndex) {
  const Dag d3 = catalog::d3();
  const auto f = decomposition_framing(d3, decomposition(d3, {"ad", "be", "cf"}));
  EXPECT_EQ(f.in_order(1), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(f.out_order(1), (std::vector<std::size_t>{3, 4, 5}));

  const auto g = decomposition_framing(d3, decomposition(d3, {"cf", "ad", "be"}));
  EXPECT_EQ(g.in_order(1), (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_EQ(g.in_rank(2), 0);
  EXPECT_EQ(g.out_rank(5), 0);
}

TEST(DecompositionFraming, D2BothVertices) {
  const Dag d2 = catalog::d2();
  const auto f = decomposition_framing(d2, decomposition(d2, {"ace", "bdf"}));
  EXPECT_EQ(f.in_order(1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(f.out_order(1), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(f.in_order(2), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(f.out_order(2), (std::vector<std::size_t>{4, 5}));
}

TEST(EdgeLabels, FollowRouteIndex) {
  const Dag d1 = catalog::d1();
  EXPECT_EQ(edge_labels(d1, decomposition(d1, {"ac", "bd"})), (std::vector<int>{1, 2, 1, 2}));
  const Dag d3 = catalog::d3();
  EXPECT_EQ(edge_labels(d3, decomposition(d3, {"ad", "be", "cf"})), (std::vector<int>{1, 2, 3, 1, 2, 3}));
}

TEST(IndicatorVector, D1Route) {
  const Dag d1 = catalog::d1();
  EXPECT_EQ(indicator_vector(d1, route(d1, "ac")), (IntVector{1, 0, 1, 0}));
}

TEST(IndicatorVector, DecompositionSumsToAllOnes) {
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    IntVector sum(g.edge_count(), 0);
    for (const auto& r : route_decomposition(g)) {
      const auto x = indicator_vector(g, r);
      EXPECT_TRUE(is_flow(g, x));
      EXPECT_EQ(flow_strength(g, x), 1);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += x[i];
    }
    EXPECT_EQ(sum, IntVector(g.edge_count(), 1));
  }
}

TEST(RouteFromIds, RejectsBrokenPaths) {
  EXPECT_THROW(route_from_ids(catalog::d2(), {"a", "e"}), InvalidInput);
}

TEST(Framing, RejectsNonPermutation) {
  const Dag d1 = catalog::d1();
  std::vector<std::vector<std::size_t>> in(3), out(3);
  in[1] = {0, 0};
  out[1] = {2, 3};
  EXPECT_THROW(Framing(d1, in, out), InvalidInput);
}
