#include "flowtri/equatorial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flowtri/dkk.hpp"
#include "flowtri/errors.hpp"

namespace flowtri {

std::vector<Transversal> enumerate_transversals(const RouteDecomposition& decomp) {
  std::vector<Transversal> out;
  if (decomp.empty()) return out;
  std::vector<std::size_t> pos(decomp.size(), 0);
  for (;;) {
    Transversal m;
    for (std::size_t i = 0; i < decomp.size(); ++i) m.edges.push_back(decomp[i].edges[pos[i]]);
    out.push_back(std::move(m));
    std::size_t k = decomp.size();
    while (k > 0) {
      --k;
      if (++pos[k] < decomp[k].edges.size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::size_t transversal_position(const RouteDecomposition& decomp, const Transversal& m, std::size_t i) {
  const auto& es = decomp.at(i).edges;
  const auto it = std::find(es.begin(), es.end(), m.edges.at(i));
  if (it == es.end()) throw InvalidInput("transversal edge does not lie on its route");
  return static_cast<std::size_t>(it - es.begin());
}

std::vector<int> routes_avoiding(const std::vector<Route>& routes, const std::vector<Transversal>& transversals) {
  std::set<std::size_t> banned;
  for (const auto& m : transversals) banned.insert(m.edges.begin(), m.edges.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const auto& es = routes[i].edges;
    if (std::none_of(es.begin(), es.end(), [&](std::size_t e) { return banned.count(e) > 0; }))
      out.push_back(static_cast<int>(i));
  }
  return out;
}

bool common_face(const Dag& dag, const RouteDecomposition& decomp, const std::vector<Route>& routeset) {
  std::vector<bool> used(dag.edge_count(), false);
  for (const auto& r : routeset)
    for (auto e : r.edges) used[e] = true;
  for (const auto& r : decomp)
    if (std::all_of(r.edges.begin(), r.edges.end(), [&](std::size_t e) { return used[e]; })) return false;
  return true;
}

bool is_facet_transversal(const Dag& dag, const std::vector<Route>& routes, const Transversal& m) {
  std::vector<bool> covered(static_cast<std::size_t>(dag.vertex_count()), false);
  for (int i : routes_avoiding(routes, {m}))
    for (int v : route_vertices(dag, routes[static_cast<std::size_t>(i)])) covered[static_cast<std::size_t>(v)] = true;
  for (int v = 1; v <= dag.inner_count(); ++v)
    if (!covered[static_cast<std::size_t>(v)]) return false;
  return true;
}

bool is_facet_transversal(const Dag& dag, const Transversal& m) {
  return is_facet_transversal(dag, enumerate_routes(dag), m);
}

std::vector<EquatorialFace> equatorial_facets(const Dag& dag, const RouteDecomposition& decomp) {
  if (!is_route_decomposition(dag, decomp)) throw InvalidInput("not a route decomposition");
  const auto routes = enumerate_routes(dag);
  std::map<std::vector<int>, std::vector<Transversal>> faces;
  for (const auto& m : enumerate_transversals(decomp))
    if (is_facet_transversal(dag, routes, m)) faces[routes_avoiding(routes, {m})].push_back(m);
  std::vector<EquatorialFace> out;
  for (auto& [rs, ms] : faces) out.push_back({std::move(ms), rs});
  return out;
}

std::vector<int> decomposition_indices(const Dag& dag, const RouteDecomposition& decomp) {
  const auto routes = enumerate_routes(dag);
  std::vector<int> idx;
  for (const auto& r : decomp) {
    const auto it = std::find(routes.begin(), routes.end(), r);
    if (it == routes.end()) throw InvalidInput("decomposition route is not a route of the DAG");
    idx.push_back(static_cast<int>(it - routes.begin()));
  }
  return idx;
}

SimplicialComplex t_eq(const Dag& dag, const RouteDecomposition& decomp) {
  if (!degree_equality(dag)) throw NotGorenstein();
  const auto routes = enumerate_routes(dag);
  const auto facets = equatorial_facets(dag, decomp);
  const auto cliques = max_cliques(dag, decomposition_framing(dag, decomp));
  std::vector<std::vector<int>> faces;
  for (const auto& c : cliques)
    for (const auto& f : facets) {
      std::vector<int> meet;
      std::set_intersection(c.begin(), c.end(), f.routes.begin(), f.routes.end(), std::back_inserter(meet));
      faces.push_back(std::move(meet));
    }
  if (faces.empty()) faces.push_back({});
  return SimplicialComplex::from_faces(routes.size(), std::move(faces));
}

Triangulation equatorial_flow_triangulation(const Dag& dag, const RouteDecomposition& decomp) {
  const auto routes = enumerate_routes(dag);
  const auto sphere = t_eq(dag, decomp);
  const auto apex = decomposition_indices(dag, decomp);
  std::vector<std::vector<int>> faces;
  for (auto f : sphere.facets) {
    f.insert(f.end(), apex.begin(), apex.end());
    faces.push_back(std::move(f));
  }
  Triangulation tri = route_vertex_frame(dag, routes);
  tri.complex = SimplicialComplex::from_faces(routes.size(), std::move(faces));
  return tri;
}

DkkComparison differs_from_dkk(const Dag& dag, const RouteDecomposition& decomp, bool exhaustive,
                               std::int64_t bound) {
  DkkComparison out;
  out.exhaustive = exhaustive;
  const auto target = equatorial_flow_triangulation(dag, decomp).complex.facets;
  out.equals_decomposition_framing = max_cliques(dag, decomposition_framing(dag, decomp)) == target;
  if (!exhaustive) {
    out.framings_checked = 1;
    out.matching_framings = out.equals_decomposition_framing ? 1 : 0;
    out.verdict = out.equals_decomposition_framing ? "equal to decomposition-framing DKK"
                                                   : "differs from decomposition-framing DKK";
    return out;
  }
  if (framing_count(dag) > bound) throw BoundExceeded("exhaustive bound exceeded");
  for_each_framing(dag, [&](const Framing& f) {
    ++out.framings_checked;
    if (max_cliques(dag, f) == target) ++out.matching_framings;
    return true;
  });
  out.verdict = out.matching_framings == 0 ? "not DKK" : "DKK";
  bool wide = false;
  for (int v = 1; v <= dag.inner_count(); ++v) wide = wide || dag.indeg(v) >= 3;
  if (wide && out.matching_framings != 0)
    throw ConsistencyError("an indegree-3 vertex exists but some framing reproduces the equatorial triangulation");
  return out;
}

}  // namespace flowtri
