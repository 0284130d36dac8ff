#pragma once

// Routes (s-t paths), ordered route decompositions, framings, and indicator vectors.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "flowtri/dag.hpp"
#include "flowtri/exact.hpp"

namespace flowtri {

/// An s-t path stored as edge indices into its Dag. Equality is edge-sequence equality.
struct Route {
  std::vector<std::size_t> edges;

  friend auto operator<=>(const Route&, const Route&) = default;
};

/// Ordered decomposition R_1 < R_2 < ... < R_k.
using RouteDecomposition = std::vector<Route>;

/// Vertices visited by the route, starting at s and ending at t.
std::vector<int> route_vertices(const Dag& dag, const Route& route);

/// True iff the route is a head-to-tail chain of edges from s to t.
bool is_route(const Dag& dag, const Route& route);

/// Edge ids of the route.
std::vector<std::string> route_ids(const Dag& dag, const Route& route);

/// Compact display name: ids concatenated when all are single characters,
/// otherwise joined with ','.
std::string route_name(const Dag& dag, const Route& route);

/// Parses an edge-id sequence; throws InvalidInput unless it forms a route.
Route route_from_ids(const Dag& dag, const std::vector<std::string>& ids);

/// All routes, ordered lexicographically by edge-id sequence.
std::vector<Route> enumerate_routes(const Dag& dag);

/// Number of routes by dynamic programming over the vertex order.
std::int64_t count_routes(const Dag& dag);

/// Greedy peel: repeatedly removes the lexicographically smallest remaining
/// route. Throws NotGorenstein when degree equality fails.
RouteDecomposition route_decomposition(const Dag& dag);

/// True iff the routes are pairwise edge-disjoint and cover every edge.
bool is_route_decomposition(const Dag& dag, const std::vector<Route>& routes);

/// Per inner vertex, linear orders on in(v) and out(v).
class Framing {
 public:
  Framing() = default;

  /// `in_orders[v]` / `out_orders[v]` list edge indices; entries for s and t
  /// are ignored. Throws InvalidInput unless every inner order is a
  /// permutation of the corresponding edge set.
  Framing(const Dag& dag, std::vector<std::vector<std::size_t>> in_orders,
          std::vector<std::vector<std::size_t>> out_orders);

  const std::vector<std::size_t>& in_order(int v) const { return in_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::size_t>& out_order(int v) const { return out_.at(static_cast<std::size_t>(v)); }

  /// Position of an edge in the in-order at its head (resp. out-order at its tail).
  int in_rank(std::size_t edge) const { return in_rank_.at(edge); }
  int out_rank(std::size_t edge) const { return out_rank_.at(edge); }

  friend bool operator==(const Framing& a, const Framing& b) {
    return a.in_ == b.in_ && a.out_ == b.out_;
  }

 private:
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> in_rank_;
  std::vector<int> out_rank_;
};

/// Orders in(v) and out(v) by the index of the decomposition route containing each edge.
Framing decomposition_framing(const Dag& dag, const RouteDecomposition& decomp);

/// Edge index -> 1-based index of the decomposition route containing it.
std::vector<int> edge_labels(const Dag& dag, const RouteDecomposition& decomp);

/// 0/1 vector indexed by edge index.
IntVector indicator_vector(const Dag& dag, const Route& route);

/// True iff every inner vertex conserves flow and all entries are non-negative.
bool is_flow(const Dag& dag, const IntVector& flow);

/// Net outflow of s.
std::int64_t flow_strength(const Dag& dag, const IntVector& flow);

}  // namespace flowtri
