#include "flowtri/dkk.hpp"

#include <algorithm>
#include <numeric>

#include "flowtri/errors.hpp"

namespace flowtri {

namespace {

std::ptrdiff_t position_of(const Dag& dag, const Route& r, int v) {
  if (v == dag.source()) return 0;
  for (std::size_t i = 0; i < r.edges.size(); ++i)
    if (dag.edge(r.edges[i]).head == v) return static_cast<std::ptrdiff_t>(i) + 1;
  return -1;
}

int sign(int x) { return (x > 0) - (x < 0); }

}  // namespace

int compare_in_paths(const Dag& dag, const Framing& framing, const Route& p, const Route& q, int v) {
  auto i = position_of(dag, p, v);
  auto j = position_of(dag, q, v);
  if (i < 0 || j < 0) throw InvalidInput("compare_in_paths: vertex not on both routes");
  while (i > 0 && j > 0) {
    const auto ep = p.edges[static_cast<std::size_t>(i - 1)];
    const auto eq = q.edges[static_cast<std::size_t>(j - 1)];
    if (ep != eq) return sign(framing.in_rank(ep) - framing.in_rank(eq));
    --i;
    --j;
  }
  return 0;
}

int compare_out_paths(const Dag& dag, const Framing& framing, const Route& p, const Route& q, int v) {
  auto i = position_of(dag, p, v);
  auto j = position_of(dag, q, v);
  if (i < 0 || j < 0) throw InvalidInput("compare_out_paths: vertex not on both routes");
  const auto np = static_cast<std::ptrdiff_t>(p.edges.size());
  const auto nq = static_cast<std::ptrdiff_t>(q.edges.size());
  while (i < np && j < nq) {
    const auto ep = p.edges[static_cast<std::size_t>(i)];
    const auto eq = q.edges[static_cast<std::size_t>(j)];
    if (ep != eq) return sign(framing.out_rank(ep) - framing.out_rank(eq));
    ++i;
    ++j;
  }
  return 0;
}

bool conflict(const Dag& dag, const Framing& framing, const Route& p, const Route& q) {
  for (std::size_t k = 0; k + 1 < p.edges.size(); ++k) {
    const int v = dag.edge(p.edges[k]).head;
    if (position_of(dag, q, v) < 0) continue;
    const int in = compare_in_paths(dag, framing, p, q, v);
    const int out = compare_out_paths(dag, framing, p, q, v);
    if (in * out < 0) return true;
  }
  return false;
}

bool coherent(const Dag& dag, const Framing& framing, const Route& p, const Route& q) {
  return !conflict(dag, framing, p, q);
}

CoherenceGraph::CoherenceGraph(const Dag& dag, const Framing& framing, std::vector<Route> routes)
    : routes_(std::move(routes)) {
  const std::size_t n = routes_.size();
  adjacency_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coherent(dag, framing, routes_[i], routes_[j])) {
        adjacency_[i][j] = true;
        adjacency_[j][i] = true;
      }
}

std::vector<Route> exceptional_routes(const Dag& dag, const Framing& framing) {
  const CoherenceGraph g(dag, framing, enumerate_routes(dag));
  std::vector<Route> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.neighbours(i).count() + 1 == g.size()) out.push_back(g.routes()[i]);
  return out;
}

std::vector<std::vector<int>> maximal_cliques(const CoherenceGraph& graph) {
  using Bits = boost::dynamic_bitset<>;
  const std::size_t n = graph.size();
  std::vector<std::vector<int>> cliques;
  std::vector<int> current;

  auto expand = [&](auto&& self, Bits candidates, Bits excluded) -> void {
    if (candidates.none() && excluded.none()) {
      cliques.push_back(current);
      return;
    }
    // Pivot on the vertex covering the most candidates.
    std::size_t pivot = n;
    std::size_t best = 0;
    const Bits pool = candidates | excluded;
    for (auto u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
      const std::size_t c = (candidates & graph.neighbours(u)).count();
      if (pivot == n || c > best) {
        pivot = u;
        best = c;
      }
    }
    const Bits branch = candidates - graph.neighbours(pivot);
    for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
      current.push_back(static_cast<int>(v));
      self(self, candidates & graph.neighbours(v), excluded & graph.neighbours(v));
      current.pop_back();
      candidates[v] = false;
      excluded[v] = true;
    }
  };
  if (n > 0) expand(expand, Bits(n).set(), Bits(n));
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::vector<std::vector<int>> max_cliques(const Dag& dag, const Framing& framing) {
  const CoherenceGraph g(dag, framing, enumerate_routes(dag));
  auto cliques = maximal_cliques(g);
  const auto want = static_cast<std::size_t>(dimension(dag) + 1);
  for (const auto& c : cliques)
    if (c.size() != want) throw ConsistencyError("framing/coherence inconsistency");
  return cliques;
}

Triangulation route_vertex_frame(const Dag& dag, const std::vector<Route>& routes) {
  Triangulation tri;
  tri.complex.vertex_count = routes.size();
  for (const auto& r : routes) {
    tri.points.push_back(indicator_vector(dag, r));
    tri.labels.push_back(route_name(dag, r));
  }
  return tri;
}

Triangulation dkk_triangulation(const Dag& dag, const Framing& framing) {
  const auto routes = enumerate_routes(dag);
  Triangulation tri = route_vertex_frame(dag, routes);
  tri.complex = SimplicialComplex::from_faces(routes.size(), max_cliques(dag, framing));
  return tri;
}

std::int64_t framing_count(const Dag& dag) {
  auto fact = [](int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  std::int64_t n = 1;
  for (int v = 1; v <= dag.inner_count(); ++v) n *= fact(dag.indeg(v)) * fact(dag.outdeg(v));
  return n;
}

void for_each_framing(const Dag& dag, const std::function<bool(const Framing&)>& visit) {
  const auto nv = static_cast<std::size_t>(dag.vertex_count());
  std::vector<std::vector<std::size_t>> in(nv), out(nv);
  for (int v = 1; v <= dag.inner_count(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    in[i].assign(dag.in_edges(v).begin(), dag.in_edges(v).end());
    out[i].assign(dag.out_edges(v).begin(), dag.out_edges(v).end());
    std::sort(in[i].begin(), in[i].end());
    std::sort(out[i].begin(), out[i].end());
  }
  // Odometer over 2n permutation slots: slot 2(v-1) is in(v), slot 2(v-1)+1 is out(v).
  auto slot = [&](std::size_t k) -> std::vector<std::size_t>& {
    const auto v = k / 2 + 1;
    return k % 2 == 0 ? in[v] : out[v];
  };
  const std::size_t slots = 2 * static_cast<std::size_t>(dag.inner_count());
  for (;;) {
    if (!visit(Framing(dag, in, out))) return;
    std::size_t k = 0;
    while (k < slots && !std::next_permutation(slot(k).begin(), slot(k).end())) ++k;
    if (k == slots) return;
  }
}

}  // namespace flowtri
