#pragma once

// The projection phi onto the leveled space and the quotient polytope Q_R.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowtri/dag.hpp"
#include "flowtri/equatorial.hpp"
#include "flowtri/exact.hpp"
#include "flowtri/geometry.hpp"
#include "flowtri/routes.hpp"

namespace flowtri {

/// Coordinate (i, l): inner vertex i, route label l in inlevel(i).
struct LeveledCoord {
  int vertex = 0;
  int label = 0;

  friend auto operator<=>(const LeveledCoord&, const LeveledCoord&) = default;
};

/// Direct sum of the blocks V^i, one per inner vertex, with coordinates
/// ordered by vertex then label.
class LeveledSpace {
 public:
  LeveledSpace() = default;
  LeveledSpace(const Dag& dag, const RouteDecomposition& decomp);

  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<LeveledCoord>& coords() const noexcept { return coords_; }
  /// Sorted labels of the in-edges of inner vertex i.
  const std::vector<int>& inlevel(int i) const { return inlevel_.at(static_cast<std::size_t>(i)); }
  std::optional<std::size_t> index(int vertex, int label) const;
  /// "i:l"
  std::string name(std::size_t k) const;
  /// One row per inner vertex: the indicator of its block.
  IntMatrix block_equations() const;

 private:
  std::vector<LeveledCoord> coords_;
  std::vector<std::vector<int>> inlevel_;
};

/// Linear map sending the unit flow on edge (i, j) with label l to
/// e^j_l - e^i_l, dropping source and sink blocks.
IntVector phi(const Dag& dag, const RouteDecomposition& decomp, const LeveledSpace& space, const IntVector& flow);
IntVector phi(const Dag& dag, const RouteDecomposition& decomp, const LeveledSpace& space, const Route& route);

/// Coefficient 1 on (i, l) when the part of route l before its transversal
/// edge enters inner vertex i; 0 elsewhere.
IntVector transversal_functional(const Dag& dag, const RouteDecomposition& decomp, const LeveledSpace& space,
                                 const Transversal& m);

struct IdentityCheck {
  bool ok = false;
  std::int64_t lhs = 0;  // functional evaluated at phi(S)
  std::int64_t rhs = 0;  // 1 - |E(S) and M|
};

IdentityCheck check_transversal_identity(const Dag& dag, const RouteDecomposition& decomp, const LeveledSpace& space,
                                         const Route& s, const Transversal& m);

struct QuotientFacet {
  IntVector coeffs;
  std::int64_t rhs = 1;
  Transversal transversal;           // first facet transversal giving these coefficients
  std::size_t transversal_count = 0; // how many facet transversals give them
};

struct QuotientPolytope {
  LeveledSpace space;
  std::vector<int> vertex_routes;  // indices into enumerate_routes(dag)
  IntMatrix vertices;
  std::vector<QuotientFacet> facets;
  IntMatrix subspace;  // rows r with r . x = 0
  int dimension = 0;
};

/// Vertices phi(R) for the routes outside the decomposition, in route order.
/// Throws NotGorenstein without degree equality and ConsistencyError if two
/// routes share an image or a non-decomposition route maps to the origin.
QuotientPolytope quotient_vertices(const Dag& dag, const RouteDecomposition& decomp);

/// Vertices plus one facet per distinct facet-transversal functional.
/// Throws ConsistencyError when a vertex violates a facet or a subspace
/// equation, or when the vertex rank differs from sum(indeg - 1).
QuotientPolytope quotient_facets(const Dag& dag, const RouteDecomposition& decomp);

struct ReflexiveReport {
  bool ok = false;
  bool integral_unit_rhs = false;
  bool vertices_feasible = false;
  bool facets_supported = false;   // each facet is tight on dim affinely independent vertices
  bool vertices_on_enough_facets = false;
  bool unique_interior_point = false;
  std::int64_t interior_points = 0;
  std::vector<std::string> issues;
};

/// Throws BoundExceeded when the lattice box exceeds `box_limit` points.
ReflexiveReport verify_reflexive(const QuotientPolytope& q, std::int64_t box_limit = 10'000'000);

/// Vertices and right-hand sides multiplied by k.
QuotientPolytope scaled(const QuotientPolytope& q, std::int64_t k);

/// Points x of the block-sum-zero lattice with coeffs . x <= t * rhs for every
/// facet (strict when `interior`).
std::int64_t count_quotient_points(const QuotientPolytope& q, int t, bool interior);

HStarData quotient_hstar(const QuotientPolytope& q);

}  // namespace flowtri
