#include "flowtri/routes.hpp"

#include <algorithm>

#include "flowtri/errors.hpp"

namespace flowtri {

namespace {

std::vector<std::size_t> sorted_by_id(const Dag& dag, std::span<const std::size_t> edges) {
  std::vector<std::size_t> out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end(),
            [&](std::size_t x, std::size_t y) { return dag.edge(x).id < dag.edge(y).id; });
  return out;
}

}  // namespace

std::vector<int> route_vertices(const Dag& dag, const Route& route) {
  std::vector<int> vs{dag.source()};
  for (auto e : route.edges) vs.push_back(dag.edge(e).head);
  return vs;
}

bool is_route(const Dag& dag, const Route& route) {
  int at = dag.source();
  for (auto e : route.edges) {
    if (e >= dag.edge_count() || dag.edge(e).tail != at) return false;
    at = dag.edge(e).head;
  }
  return at == dag.sink() && !route.edges.empty();
}

std::vector<std::string> route_ids(const Dag& dag, const Route& route) {
  std::vector<std::string> ids;
  ids.reserve(route.edges.size());
  for (auto e : route.edges) ids.push_back(dag.edge(e).id);
  return ids;
}

std::string route_name(const Dag& dag, const Route& route) {
  const auto ids = route_ids(dag, route);
  const bool short_ids = std::all_of(ids.begin(), ids.end(), [](const auto& s) { return s.size() == 1; });
  std::string name;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0 && !short_ids) name += ',';
    name += ids[i];
  }
  return name;
}

Route route_from_ids(const Dag& dag, const std::vector<std::string>& ids) {
  Route r;
  for (const auto& id : ids) r.edges.push_back(dag.edge_index(id));
  if (!is_route(dag, r)) throw InvalidInput("edge sequence is not a route from s to t");
  return r;
}

std::vector<Route> enumerate_routes(const Dag& dag) {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(dag.vertex_count()));
  for (int v = 0; v < dag.vertex_count(); ++v)
    out[static_cast<std::size_t>(v)] = sorted_by_id(dag, dag.out_edges(v));

  // Depth-first search over id-sorted out-edges yields lexicographic order
  // directly, since no route is a proper prefix of another.
  std::vector<Route> routes;
  Route current;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == dag.sink()) {
      routes.push_back(current);
      return;
    }
    for (auto e : out[static_cast<std::size_t>(v)]) {
      current.edges.push_back(e);
      self(self, dag.edge(e).head);
      current.edges.pop_back();
    }
  };
  dfs(dfs, dag.source());
  return routes;
}

std::int64_t count_routes(const Dag& dag) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(dag.vertex_count()), 0);
  ways[0] = 1;
  for (int v = 0; v < dag.vertex_count(); ++v)
    for (auto e : dag.out_edges(v)) ways[static_cast<std::size_t>(dag.edge(e).head)] += ways[static_cast<std::size_t>(v)];
  return ways.back();
}

RouteDecomposition route_decomposition(const Dag& dag) {
  if (!degree_equality(dag)) throw NotGorenstein();

  std::vector<bool> used(dag.edge_count(), false);
  std::size_t remaining = dag.edge_count();
  RouteDecomposition decomp;
  while (remaining > 0) {
    Route r;
    int at = dag.source();
    while (at != dag.sink()) {
      std::optional<std::size_t> next;
      for (auto e : dag.out_edges(at))
        if (!used[e] && (!next || dag.edge(e).id < dag.edge(*next).id)) next = e;
      if (!next) throw ConsistencyError("route peel reached a vertex with no remaining out-edge");
      r.edges.push_back(*next);
      at = dag.edge(*next).head;
    }
    for (auto e : r.edges) used[e] = true;
    remaining -= r.edges.size();
    decomp.push_back(std::move(r));

    // Peeling a route keeps degree equality in the remaining graph.
    for (int v = 1; v <= dag.inner_count(); ++v) {
      auto live = [&](std::span<const std::size_t> es) {
        return std::count_if(es.begin(), es.end(), [&](std::size_t e) { return !used[e]; });
      };
      if (live(dag.in_edges(v)) != live(dag.out_edges(v)))
        throw ConsistencyError("degree equality lost after peeling a route");
    }
  }
  if (static_cast<int>(decomp.size()) != dag.outdeg(dag.source()))
    throw ConsistencyError("decomposition size differs from outdeg(s)");
  return decomp;
}

bool is_route_decomposition(const Dag& dag, const std::vector<Route>& routes) {
  std::vector<int> hits(dag.edge_count(), 0);
  for (const auto& r : routes) {
    if (!is_route(dag, r)) return false;
    for (auto e : r.edges) ++hits[e];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

Framing::Framing(const Dag& dag, std::vector<std::vector<std::size_t>> in_orders,
                 std::vector<std::vector<std::size_t>> out_orders)
    : in_(std::move(in_orders)), out_(std::move(out_orders)) {
  const auto nv = static_cast<std::size_t>(dag.vertex_count());
  in_.resize(nv);
  out_.resize(nv);
  in_rank_.assign(dag.edge_count(), -1);
  out_rank_.assign(dag.edge_count(), -1);
  auto check = [&](const std::vector<std::size_t>& order, std::span<const std::size_t> edges, int v,
                   std::vector<int>& ranks) {
    std::vector<std::size_t> a(order), b(edges.begin(), edges.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw InvalidInput("framing at vertex " + dag.vertex_name(v) + " is not a permutation of its edges");
    for (std::size_t i = 0; i < order.size(); ++i) ranks[order[i]] = static_cast<int>(i);
  };
  for (int v = 1; v <= dag.inner_count(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    check(in_[i], dag.in_edges(v), v, in_rank_);
    check(out_[i], dag.out_edges(v), v, out_rank_);
  }
  in_[0].clear();
  out_[nv - 1].clear();
}

std::vector<int> edge_labels(const Dag& dag, const RouteDecomposition& decomp) {
  if (!is_route_decomposition(dag, decomp)) throw InvalidInput("not a route decomposition");
  std::vector<int> label(dag.edge_count(), 0);
  for (std::size_t i = 0; i < decomp.size(); ++i)
    for (auto e : decomp[i].edges) label[e] = static_cast<int>(i) + 1;
  return label;
}

Framing decomposition_framing(const Dag& dag, const RouteDecomposition& decomp) {
  const auto label = edge_labels(dag, decomp);
  const auto nv = static_cast<std::size_t>(dag.vertex_count());
  std::vector<std::vector<std::size_t>> in(nv), out(nv);
  auto by_label = [&](std::span<const std::size_t> es) {
    std::vector<std::size_t> v(es.begin(), es.end());
    std::sort(v.begin(), v.end(), [&](std::size_t x, std::size_t y) { return label[x] < label[y]; });
    return v;
  };
  for (int v = 1; v <= dag.inner_count(); ++v) {
    in[static_cast<std::size_t>(v)] = by_label(dag.in_edges(v));
    out[static_cast<std::size_t>(v)] = by_label(dag.out_edges(v));
  }
  return Framing(dag, std::move(in), std::move(out));
}

IntVector indicator_vector(const Dag& dag, const Route& route) {
  IntVector x(dag.edge_count(), 0);
  for (auto e : route.edges) x[e] = 1;
  return x;
}

bool is_flow(const Dag& dag, const IntVector& flow) {
  if (flow.size() != dag.edge_count()) return false;
  if (std::any_of(flow.begin(), flow.end(), [](auto x) { return x < 0; })) return false;
  for (int v = 1; v <= dag.inner_count(); ++v) {
    std::int64_t net = 0;
    for (auto e : dag.in_edges(v)) net += flow[e];
    for (auto e : dag.out_edges(v)) net -= flow[e];
    if (net != 0) return false;
  }
  return true;
}

std::int64_t flow_strength(const Dag& dag, const IntVector& flow) {
  std::int64_t s = 0;
  for (auto e : dag.out_edges(dag.source())) s += flow[e];
  return s;
}

}  // namespace flowtri
