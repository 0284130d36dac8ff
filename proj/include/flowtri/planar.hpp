#pragma once

// Strongly planar DAGs and their truncated dual posets: rotation systems,
// face tracing, order polytopes, filter chains, and the integral equivalence
// between flow polytopes and order polytopes.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flowtri/dag.hpp"
#include "flowtri/geometry.hpp"
#include "flowtri/routes.hpp"

namespace flowtri {

/// Counterclockwise rotation of edge indices around each vertex. The list
/// at s runs bottom to top and the list at t runs top to bottom; inner lists
/// are cyclic.
struct PlanarEmbedding {
  std::vector<std::vector<std::size_t>> rotations;

  friend bool operator==(const PlanarEmbedding&, const PlanarEmbedding&) = default;
};

/// Builds rotations from top-to-bottom orders: out_orders[s], in_orders[t],
/// and both lists at every inner vertex.
PlanarEmbedding embedding_from_orders(const Dag& dag, const std::vector<std::vector<std::size_t>>& in_orders,
                                      const std::vector<std::vector<std::size_t>>& out_orders);

/// Every vertex stacks its in- and out-edges top to bottom in edge-index order.
PlanarEmbedding stacked_embedding(const Dag& dag);

/// Faces of an embedded DAG.
struct FaceStructure {
  int face_count = 0;
  int outer = 0;
  std::vector<int> above;  // per edge: face on the left of the edge
  std::vector<int> below;  // per edge: face on the right of the edge
};

/// Traces faces and checks V - E + F = 2 and that the outer face touches the
/// top edge at s from above and the bottom edge at s from below. Throws
/// InvalidInput for malformed or non-planar rotations.
FaceStructure trace_faces(const Dag& dag, const PlanarEmbedding& embedding);

/// Top-to-bottom orders at each inner vertex.
Framing planar_framing(const Dag& dag, const PlanarEmbedding& embedding);

/// Repeatedly peels the route that follows the topmost remaining edge out of
/// every vertex. The first route peeled is R_1. Throws NotGorenstein without
/// degree equality.
RouteDecomposition topmost_decomposition(const Dag& dag, const PlanarEmbedding& embedding);

/// A finite poset on at most 63 elements.
class Poset {
 public:
  Poset() = default;
  /// `relations` lists pairs (a, b) meaning a < b. Throws InvalidInput on a
  /// cycle, a repeated name, or too many elements.
  Poset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& relations);
  static Poset from_names(std::vector<std::string> elements,
                          const std::vector<std::pair<std::string, std::string>>& relations);

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  /// Cover pairs (a, b), sorted.
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }
  bool less(int a, int b) const { return (above_.at(static_cast<std::size_t>(a)) >> b) & 1U; }
  /// Bitmask of elements strictly above a.
  std::uint64_t above(int a) const { return above_.at(static_cast<std::size_t>(a)); }
  std::uint64_t upper_covers(int a) const { return upper_covers_.at(static_cast<std::size_t>(a)); }
  std::uint64_t full_mask() const noexcept;
  int index(const std::string& name) const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint64_t> above_;
  std::vector<std::uint64_t> upper_covers_;
};

/// Brute-force isomorphism test on the cover relations.
bool isomorphic(const Poset& a, const Poset& b);

struct Grading {
  bool graded = false;
  std::vector<int> ranks;  // 1-based rank per element when graded
  int rank_count = 0;      // r
};

/// Graded means every maximal chain has the same length.
Grading is_graded(const Poset& poset);

/// Upward-closed subsets as bitmasks, sorted by size then mask.
std::vector<std::uint64_t> filters(const Poset& poset);
/// Characteristic vectors of filters(poset), in the same order.
IntMatrix order_polytope_vertices(const Poset& poset);
std::int64_t count_linear_extensions(const Poset& poset);
/// Order-preserving maps into {0..t}; strictly inside (0 < f < t, strict on
/// covers) when `interior`.
std::int64_t count_order_points(const Poset& poset, int t, bool interior);
HStarData order_hstar(const Poset& poset);
/// 0 <= x <= 1 and x_a <= x_b on covers; volume = linear extensions.
Carrier order_carrier(const Poset& poset);
std::string filter_name(const Poset& poset, std::uint64_t filter);

/// Truncated dual of an embedded DAG: bounded faces as elements, edges as
/// covers of the poset extended by a bottom and a top element.
struct TruncatedDual {
  static constexpr int bottom = -1;
  static constexpr int top = -2;

  Poset poset;
  std::vector<int> below;  // per edge: element index, bottom, or top
  std::vector<int> above;
};

TruncatedDual truncated_dual(const Dag& dag, const PlanarEmbedding& embedding);

/// Counterclockwise neighbour lists for the Hasse diagram of the poset
/// extended by bottom (index size()) and top (index size() + 1). The bottom
/// list starts at south and the top list starts at north.
struct HasseEmbedding {
  std::vector<std::vector<int>> rotations;
};

struct DualDag {
  Dag dag;
  PlanarEmbedding embedding;
};

/// Strongly planar dual of an embedded Hasse diagram. Edge ids name the cover
/// they cross, "x<y", with "^0" and "^1" for bottom and top. Throws
/// InvalidInput for malformed or non-planar rotations.
DualDag poset_to_dag(const Poset& poset, const HasseEmbedding& embedding);

/// Order-preserving function of a flow: the sum of flow values crossed on the
/// way up from bottom. Throws ConsistencyError when the sum depends on the path.
std::vector<std::int64_t> flow_to_order(const Dag& dag, const TruncatedDual& dual, const IntVector& flow);
/// Flow with fl(e) = f(above e) - f(below e), taking f(bottom) = 0 and f(top) = top_value.
IntVector order_to_flow(const TruncatedDual& dual, const std::vector<std::int64_t>& f, std::int64_t top_value = 1);
std::vector<std::int64_t> characteristic(const Poset& poset, std::uint64_t filter);

/// Maximal chains of filters from the empty filter to the whole poset; vertex
/// indices refer to filters(poset).
Triangulation canonical_triangulation(const Poset& poset);

/// Chains are lists of filters, nested in either direction. Evaluates both
/// the jump criterion and the characteristic-sum criterion and throws
/// ConsistencyError when they disagree. Requires a graded poset.
bool is_equatorial_chain(const Poset& poset, const Grading& grading, std::vector<std::uint64_t> chain);
bool is_rank_constant(const Poset& poset, const Grading& grading, std::vector<std::uint64_t> chain);
/// Filters of the form "all elements of rank > j", for j = 0..r.
std::vector<std::uint64_t> rank_constant_filters(const Poset& poset, const Grading& grading);

/// Maximal equatorial chains joined with every rank-constant filter; vertex
/// indices refer to filters(poset). Throws InvalidInput for ungraded posets.
Triangulation rw_equatorial_triangulation(const Poset& poset);

struct EquivalenceReport {
  bool ok = false;
  bool graded = false;
  bool lattice_counts_agree = false;
  bool topmost_framing_is_planar = false;
  bool canonical_matches_dkk = false;
  bool rank_constant_is_route_simplex = false;
  bool rw_matches_equatorial = false;
  std::size_t canonical_simplices = 0;
  std::size_t rw_simplices = 0;
  std::size_t equatorial_simplices = 0;
  RouteDecomposition topmost;
  std::vector<std::string> mismatches;
};

/// Checks lattice counts for t = 1..max_dilate and the correspondences
/// canonical <-> planar-framing DKK and Reiner-Welker <-> equatorial flow
/// triangulation of the topmost decomposition under order_to_flow.
EquivalenceReport verify_equivalence(const Dag& dag, const PlanarEmbedding& embedding, int max_dilate = 4);

}  // namespace flowtri
