#pragma once

// Coherence of routes under a framing, maximal cliques, and DKK triangulations.

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "flowtri/dag.hpp"
#include "flowtri/geometry.hpp"
#include "flowtri/routes.hpp"

namespace flowtri {

/// Three-way comparison of the s->v prefixes of two routes through v under the
/// framing: scans backward from v to the first vertex where the paths differ
/// and compares their in-edges there. Returns -1, 0 (identical prefixes), or 1.
int compare_in_paths(const Dag& dag, const Framing& framing, const Route& p, const Route& q, int v);

/// Same for the v->t suffixes, scanning forward and comparing out-edges.
int compare_out_paths(const Dag& dag, const Framing& framing, const Route& p, const Route& q, int v);

/// True iff at some common inner vertex the in- and out-comparisons oppose.
bool conflict(const Dag& dag, const Framing& framing, const Route& p, const Route& q);

/// Negation of conflict; routes sharing no inner vertex are coherent.
bool coherent(const Dag& dag, const Framing& framing, const Route& p, const Route& q);

/// Pairwise coherence over a fixed route list.
class CoherenceGraph {
 public:
  CoherenceGraph(const Dag& dag, const Framing& framing, std::vector<Route> routes);

  const std::vector<Route>& routes() const { return routes_; }
  std::size_t size() const { return routes_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  const boost::dynamic_bitset<>& neighbours(std::size_t i) const { return adjacency_[i]; }

 private:
  std::vector<Route> routes_;
  std::vector<boost::dynamic_bitset<>> adjacency_;
};

/// Routes coherent with every other route.
std::vector<Route> exceptional_routes(const Dag& dag, const Framing& framing);

/// Bron-Kerbosch with pivoting; cliques are sorted index sets, listed in sorted order.
std::vector<std::vector<int>> maximal_cliques(const CoherenceGraph& graph);

/// Maximal cliques over enumerate_routes(dag). Throws ConsistencyError
/// ("framing/coherence inconsistency") if a clique does not have dim + 1 routes.
std::vector<std::vector<int>> max_cliques(const Dag& dag, const Framing& framing);

/// Vertex i of the result is enumerate_routes(dag)[i] at its indicator vector.
Triangulation dkk_triangulation(const Dag& dag, const Framing& framing);

/// Vertex data shared by every triangulation of F_1(G): indicator vectors and route names.
Triangulation route_vertex_frame(const Dag& dag, const std::vector<Route>& routes);

/// prod over inner v of indeg(v)! * outdeg(v)!.
std::int64_t framing_count(const Dag& dag);

/// Visits every framing; stops early when the visitor returns false.
void for_each_framing(const Dag& dag, const std::function<bool(const Framing&)>& visit);

}  // namespace flowtri
