#pragma once

// Transversals of a route decomposition, the equatorial complex, the
// equatorial sphere, and the equatorial flow triangulation.

#include <cstdint>
#include <string>
#include <vector>

#include "flowtri/dag.hpp"
#include "flowtri/geometry.hpp"
#include "flowtri/routes.hpp"

namespace flowtri {

/// One edge from each decomposition route: edges[i] lies on route i.
struct Transversal {
  std::vector<std::size_t> edges;

  friend auto operator<=>(const Transversal&, const Transversal&) = default;
};

/// Cartesian product of the routes' edge lists, first route varying slowest,
/// edges taken in route order.
std::vector<Transversal> enumerate_transversals(const RouteDecomposition& decomp);

/// Edge index of the transversal edge on route i, its position within route i.
std::size_t transversal_position(const RouteDecomposition& decomp, const Transversal& m, std::size_t i);

/// Indices into `routes` of the routes that use no edge of any listed transversal.
std::vector<int> routes_avoiding(const std::vector<Route>& routes, const std::vector<Transversal>& transversals);

/// True iff no decomposition route is contained in the union of the set's edges.
bool common_face(const Dag& dag, const RouteDecomposition& decomp, const std::vector<Route>& routeset);

/// True iff every inner vertex lies on some route of `routes` avoiding m.
bool is_facet_transversal(const Dag& dag, const std::vector<Route>& routes, const Transversal& m);
bool is_facet_transversal(const Dag& dag, const Transversal& m);

struct EquatorialFace {
  std::vector<Transversal> transversals;  // every facet transversal defining this face
  std::vector<int> routes;                // sorted indices into enumerate_routes(dag)
};

/// Facets of the equatorial complex, deduplicated by avoided-route set and
/// sorted by route set.
std::vector<EquatorialFace> equatorial_facets(const Dag& dag, const RouteDecomposition& decomp);

/// The restriction of the decomposition-framing DKK triangulation to the
/// equatorial complex, by maximal faces. Vertex indices refer to
/// enumerate_routes(dag). Throws NotGorenstein without degree equality.
SimplicialComplex t_eq(const Dag& dag, const RouteDecomposition& decomp);

/// Join of t_eq with the route simplex.
Triangulation equatorial_flow_triangulation(const Dag& dag, const RouteDecomposition& decomp);

/// Indices into enumerate_routes(dag) of the decomposition routes.
std::vector<int> decomposition_indices(const Dag& dag, const RouteDecomposition& decomp);

struct DkkComparison {
  bool exhaustive = false;
  bool equals_decomposition_framing = false;
  std::int64_t framings_checked = 0;
  std::int64_t matching_framings = 0;
  std::string verdict;  // "not DKK", "DKK", "equal to decomposition-framing DKK", "differs from decomposition-framing DKK"
};

/// Compares the equatorial flow triangulation against DKK triangulations.
/// Throws BoundExceeded ("exhaustive bound exceeded") when the framing space
/// is larger than `bound`.
DkkComparison differs_from_dkk(const Dag& dag, const RouteDecomposition& decomp, bool exhaustive,
                               std::int64_t bound = 1'000'000);

}  // namespace flowtri
