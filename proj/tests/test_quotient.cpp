#include <gtest/gtest.h>

#include <set>

#include "flowtri/catalog.hpp"
#include "flowtri/equatorial.hpp"
#include "flowtri/quotient.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace flowtri;
using testing_helpers::decomposition;
using testing_helpers::route;

namespace {

Transversal tr(const Dag& dag, const std::string& ids) {
  Transversal m;
  for (char c : ids) m.edges.push_back(dag.edge_index(std::string(1, c)));
  return m;
}

int indeg_excess(const Dag& g) {
  int m = 0;
  for (int v = 1; v <= g.inner_count(); ++v) m += g.indeg(v) - 1;
  return m;
}

}  // namespace

TEST(LeveledSpace, BlocksFollowInLabels) {
  const Dag g = catalog::skew_pair();
  const LeveledSpace space(g, decomposition(g, {"cg", "adf", "be"}));
  ASSERT_EQ(space.size(), 4U);
  EXPECT_EQ(space.name(0), "1:2");
  EXPECT_EQ(space.name(1), "1:3");
  EXPECT_EQ(space.name(2), "2:1");
  EXPECT_EQ(space.name(3), "2:2");
  EXPECT_EQ(space.inlevel(1), (std::vector<int>{2, 3}));
  EXPECT_FALSE(space.index(1, 1).has_value());
  EXPECT_EQ(space.block_equations().size(), 2U);
}

TEST(Phi, D1Route) {
  const Dag d1 = catalog::d1();
  const auto decomp = decomposition(d1, {"ac", "bd"});
  const LeveledSpace space(d1, decomp);
  EXPECT_EQ(phi(d1, decomp, space, route(d1, "ad")), (IntVector{1, -1}));
  EXPECT_EQ(phi(d1, decomp, space, route(d1, "bc")), (IntVector{-1, 1}));
}

TEST(Phi, DecompositionRoutesVanish) {
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    const auto decomp = route_decomposition(g);
    const LeveledSpace space(g, decomp);
    for (const auto& r : decomp) EXPECT_EQ(phi(g, decomp, space, r), IntVector(space.size(), 0));
  }
}

TEST(Phi, SkewPairSpineRoute) {
  // e^1_3 - e^1_2 + e^2_2 - e^2_1 in coordinates (1:2, 1:3, 2:1, 2:2).
  const Dag g = catalog::skew_pair();
  const auto decomp = decomposition(g, {"cg", "adf", "be"});
  const LeveledSpace space(g, decomp);
  EXPECT_EQ(phi(g, decomp, space, route(g, "bdg")), (IntVector{-1, 1, -1, 1}));
}

TEST(Phi, RouteAndFlowFormsAgreeAndAreLinear) {
  for (const auto& g : {catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    const auto decomp = route_decomposition(g);
    const LeveledSpace space(g, decomp);
    const auto routes = enumerate_routes(g);
    for (const auto& p : routes) {
      const auto xp = indicator_vector(g, p);
      EXPECT_EQ(phi(g, decomp, space, xp), phi(g, decomp, space, p));
      for (const auto& q : routes) {
        auto sum = xp;
        const auto xq = indicator_vector(g, q);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += 3 * xq[i];
        auto expected = phi(g, decomp, space, p);
        const auto pq = phi(g, decomp, space, q);
        for (std::size_t i = 0; i < expected.size(); ++i) expected[i] += 3 * pq[i];
        EXPECT_EQ(phi(g, decomp, space, sum), expected);
      }
    }
  }
}

TEST(TransversalFunctional, D1Examples) {
  const Dag d1 = catalog::d1();
  const auto decomp = decomposition(d1, {"ac", "bd"});
  const LeveledSpace space(d1, decomp);
  EXPECT_EQ(transversal_functional(d1, decomp, space, tr(d1, "ad")), (IntVector{0, 1}));
  EXPECT_EQ(transversal_functional(d1, decomp, space, tr(d1, "cb")), (IntVector{1, 0}));
}

TEST(TransversalFunctional, SkewPairExample) {
  const Dag g = catalog::skew_pair();
  const auto decomp = decomposition(g, {"cg", "adf", "be"});
  const LeveledSpace space(g, decomp);
  const auto m = tr(g, "gde");
  EXPECT_EQ(transversal_functional(g, decomp, space, m), (IntVector{1, 1, 1, 0}));
  const auto check = check_transversal_identity(g, decomp, space, route(g, "bdg"), m);
  EXPECT_TRUE(check.ok);
  EXPECT_EQ(check.lhs, -1);
  EXPECT_EQ(check.rhs, -1);
}

TEST(TransversalIdentity, SmallExamples) {
  const Dag d1 = catalog::d1();
  const auto decomp = decomposition(d1, {"ac", "bd"});
  const LeveledSpace space(d1, decomp);
  const auto a = check_transversal_identity(d1, decomp, space, route(d1, "bc"), tr(d1, "ad"));
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.lhs, 1);
  const auto b = check_transversal_identity(d1, decomp, space, route(d1, "ac"), tr(d1, "ad"));
  EXPECT_TRUE(b.ok);
  EXPECT_EQ(b.rhs, 0);
}

TEST(TransversalIdentity, HoldsForAllPairs) {
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    const auto decomp = route_decomposition(g);
    const LeveledSpace space(g, decomp);
    for (const auto& s : enumerate_routes(g))
      for (const auto& m : enumerate_transversals(decomp)) {
        // Right-hand side computed here, not taken from the library.
        std::int64_t shared = 0;
        for (auto e : s.edges) shared += std::count(m.edges.begin(), m.edges.end(), e);
        const auto f = transversal_functional(g, decomp, space, m);
        EXPECT_EQ(dot(f, phi(g, decomp, space, s)), 1 - shared);
      }
  }
}

TEST(QuotientVertices, D1Segment) {
  const Dag d1 = catalog::d1();
  const auto q = quotient_facets(d1, decomposition(d1, {"ac", "bd"}));
  EXPECT_EQ(q.vertices, (IntMatrix{{1, -1}, {-1, 1}}));
  EXPECT_EQ(q.dimension, 1);
  ASSERT_EQ(q.facets.size(), 2U);
  std::set<IntVector> coeffs{q.facets[0].coeffs, q.facets[1].coeffs};
  EXPECT_EQ(coeffs, (std::set<IntVector>{{0, 1}, {1, 0}}));
}

TEST(QuotientVertices, D3RootPolytope) {
  const Dag d3 = catalog::d3();
  const auto q = quotient_vertices(d3, route_decomposition(d3));
  std::set<IntVector> got(q.vertices.begin(), q.vertices.end());
  std::set<IntVector> want;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        IntVector v(3, 0);
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(j)] = -1;
        want.insert(v);
      }
  EXPECT_EQ(got, want);
}

TEST(QuotientVertices, ParallelEdgesIsAPoint) {
  const Dag g = catalog::parallel(3);
  const auto q = quotient_facets(g, route_decomposition(g));
  EXPECT_TRUE(q.vertices.empty());
  EXPECT_EQ(q.dimension, 0);
}

TEST(QuotientFacets, HexagonsAndDimension) {
  for (const auto& g : {catalog::d2(), catalog::d3()}) {
    const auto decomp = route_decomposition(g);
    const auto q = quotient_facets(g, decomp);
    EXPECT_EQ(q.vertices.size(), 6U);
    EXPECT_EQ(q.facets.size(), 6U);
    EXPECT_EQ(q.dimension, indeg_excess(g));
    EXPECT_EQ(q.facets.size(), equatorial_facets(g, decomp).size());
  }
}

TEST(QuotientFacets, TightVerticesMatchEquatorialFaces) {
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    const auto decomp = route_decomposition(g);
    const auto q = quotient_facets(g, decomp);
    const auto routes = enumerate_routes(g);
    for (const auto& f : q.facets) {
      const auto face = routes_avoiding(routes, {f.transversal});
      for (std::size_t k = 0; k < q.vertices.size(); ++k) {
        const bool tight = dot(f.coeffs, q.vertices[k]) == 1;
        const bool on_face = std::binary_search(face.begin(), face.end(), q.vertex_routes[k]);
        EXPECT_EQ(tight, on_face);
      }
    }
  }
}

TEST(VerifyReflexive, CatalogPasses) {
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    const auto q = quotient_facets(g, route_decomposition(g));
    const auto r = verify_reflexive(q);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.unique_interior_point);
    EXPECT_EQ(r.interior_points, 1);
  }
}

TEST(VerifyReflexive, DoubledSegmentFails) {
  const Dag d1 = catalog::d1();
  const auto q = scaled(quotient_facets(d1, route_decomposition(d1)), 2);
  const auto r = verify_reflexive(q);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.interior_points, 3);
}

TEST(QuotientHStar, EqualsFlowPolytopeHStar) {
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) {
    const auto q = quotient_facets(g, route_decomposition(g));
    EXPECT_EQ(trim_trailing_zeros(quotient_hstar(q).h_star), trim_trailing_zeros(oracle::box_hstar(g)));
  }
}
