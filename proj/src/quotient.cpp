#include "flowtri/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "flowtri/errors.hpp"

namespace flowtri {

LeveledSpace::LeveledSpace(const Dag& dag, const RouteDecomposition& decomp) {
  const auto labels = edge_labels(dag, decomp);
  inlevel_.assign(static_cast<std::size_t>(dag.vertex_count()), {});
  for (int i = 1; i <= dag.inner_count(); ++i) {
    auto& level = inlevel_[static_cast<std::size_t>(i)];
    for (auto e : dag.in_edges(i)) level.push_back(labels[e]);
    std::sort(level.begin(), level.end());
    for (int l : level) coords_.push_back({i, l});
  }
}

std::optional<std::size_t> LeveledSpace::index(int vertex, int label) const {
  const LeveledCoord key{vertex, label};
  const auto it = std::lower_bound(coords_.begin(), coords_.end(), key);
  if (it == coords_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - coords_.begin());
}

std::string LeveledSpace::name(std::size_t k) const {
  return std::to_string(coords_.at(k).vertex) + ":" + std::to_string(coords_.at(k).label);
}

IntMatrix LeveledSpace::block_equations() const {
  IntMatrix rows;
  int current = -1;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].vertex != current) {
      rows.emplace_back(coords_.size(), 0);
      current = coords_[k].vertex;
    }
    rows.back()[k] = 1;
  }
  return rows;
}

IntVector phi(const Dag& dag, const RouteDecomposition& decomp, const LeveledSpace& space, const IntVector& flow) {
  if (flow.size() != dag.edge_count()) throw InvalidInput("flow vector has the wrong length");
  const auto labels = edge_labels(dag, decomp);
  IntVector out(space.size(), 0);
  auto add = [&](int v, int label, std::int64_t amount) {
    if (!dag.is_inner(v)) return;
    const auto k = space.index(v, label);
    if (!k) throw ConsistencyError("label missing from the inlevel of vertex " + std::to_string(v));
    out[*k] += amount;
  };
  for (std::size_t e = 0; e < dag.edge_count(); ++e) {
    if (flow[e] == 0) continue;
    add(dag.edge(e).head, labels[e], flow[e]);
    add(dag.edge(e).tail, labels[e], -flow[e]);
  }
  return out;
}

IntVector phi(const Dag& dag, const RouteDecomposition& decomp, const LeveledSpace& space, const Route& route) {
  return phi(dag, decomp, space, indicator_vector(dag, route));
}

IntVector transversal_functional(const Dag& dag, const RouteDecomposition& decomp, const LeveledSpace& space,
                                 const Transversal& m) {
  if (m.edges.size() != decomp.size()) throw InvalidInput("transversal size differs from the decomposition size");
  IntVector coeffs(space.size(), 0);
  for (std::size_t j = 0; j < decomp.size(); ++j) {
    const auto stop = transversal_position(decomp, m, j);
    for (std::size_t p = 0; p < stop; ++p) {
      const int head = dag.edge(decomp[j].edges[p]).head;
      if (!dag.is_inner(head)) continue;
      const auto k = space.index(head, static_cast<int>(j) + 1);
      if (!k) throw ConsistencyError("route label missing from an inlevel");
      coeffs[*k] = 1;
    }
  }
  return coeffs;
}

IdentityCheck check_transversal_identity(const Dag& dag, const RouteDecomposition& decomp, const LeveledSpace& space,
                                         const Route& s, const Transversal& m) {
  IdentityCheck out;
  out.lhs = dot(transversal_functional(dag, decomp, space, m), phi(dag, decomp, space, s));
  const std::set<std::size_t> chosen(m.edges.begin(), m.edges.end());
  std::int64_t shared = 0;
  for (auto e : s.edges) shared += static_cast<std::int64_t>(chosen.count(e));
  out.rhs = 1 - shared;
  out.ok = out.lhs == out.rhs;
  return out;
}

QuotientPolytope quotient_vertices(const Dag& dag, const RouteDecomposition& decomp) {
  if (!degree_equality(dag)) throw NotGorenstein();
  if (!is_route_decomposition(dag, decomp)) throw InvalidInput("not a route decomposition");
  QuotientPolytope q;
  q.space = LeveledSpace(dag, decomp);
  q.subspace = q.space.block_equations();
  const auto routes = enumerate_routes(dag);
  const std::set<Route> in_decomp(decomp.begin(), decomp.end());
  std::set<IntVector> seen;
  const IntVector origin(q.space.size(), 0);
  for (std::size_t r = 0; r < routes.size(); ++r) {
    auto image = phi(dag, decomp, q.space, routes[r]);
    if (in_decomp.count(routes[r])) {
      if (image != origin) throw ConsistencyError("decomposition route with nonzero image");
      continue;
    }
    if (image == origin) throw ConsistencyError("route " + route_name(dag, routes[r]) + " maps to the origin");
    if (!seen.insert(image).second) throw ConsistencyError("two routes share an image under phi");
    q.vertex_routes.push_back(static_cast<int>(r));
    q.vertices.push_back(std::move(image));
  }
  for (int v = 1; v <= dag.inner_count(); ++v) q.dimension += dag.indeg(v) - 1;
  return q;
}

QuotientPolytope quotient_facets(const Dag& dag, const RouteDecomposition& decomp) {
  auto q = quotient_vertices(dag, decomp);
  const auto routes = enumerate_routes(dag);
  std::map<IntVector, std::size_t> by_coeffs;
  for (const auto& m : enumerate_transversals(decomp)) {
    if (!is_facet_transversal(dag, routes, m)) continue;
    auto coeffs = transversal_functional(dag, decomp, q.space, m);
    // Without inner vertices the functional is identically zero and Q_R is a point.
    if (std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; })) continue;
    const auto [it, fresh] = by_coeffs.emplace(coeffs, q.facets.size());
    if (fresh)
      q.facets.push_back({std::move(coeffs), 1, m, 1});
    else
      ++q.facets[it->second].transversal_count;
  }
  for (const auto& v : q.vertices) {
    for (const auto& row : q.subspace)
      if (dot(row, v) != 0) throw ConsistencyError("vertex outside the block-sum-zero subspace");
    for (const auto& f : q.facets)
      if (dot(f.coeffs, v) > f.rhs) throw ConsistencyError("vertex violates a facet inequality");
  }
  IntMatrix points = q.vertices;
  points.emplace_back(q.space.size(), 0);
  if (static_cast<int>(affine_rank(points)) != q.dimension)
    throw ConsistencyError("quotient dimension differs from sum(indeg - 1)");
  return q;
}

namespace {

// Calls visit(x) for every integer x with lo <= x <= hi entrywise whose block
// sums vanish. Coordinates of a block are contiguous.
void for_each_block_point(const LeveledSpace& space, const IntVector& lo, const IntVector& hi,
                          const std::function<void(const IntVector&)>& visit) {
  const auto& coords = space.coords();
  const std::size_t n = coords.size();
  IntVector x(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t block_sum) {
    if (k == n) {
      visit(x);
      return;
    }
    const bool last = k + 1 == n || coords[k + 1].vertex != coords[k].vertex;
    if (last) {
      const std::int64_t forced = -block_sum;
      if (forced < lo[k] || forced > hi[k]) return;
      x[k] = forced;
      rec(k + 1, 0);
      return;
    }
    for (std::int64_t value = lo[k]; value <= hi[k]; ++value) {
      x[k] = value;
      rec(k + 1, block_sum + value);
    }
  };
  rec(0, 0);
}

std::int64_t box_size(const IntVector& lo, const IntVector& hi) {
  std::int64_t total = 1;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    total *= hi[k] - lo[k] + 1;
    if (total > (std::int64_t{1} << 40)) return total;
  }
  return total;
}

void bounding_box(const QuotientPolytope& q, IntVector& lo, IntVector& hi) {
  lo.assign(q.space.size(), 0);
  hi.assign(q.space.size(), 0);
  for (const auto& v : q.vertices)
    for (std::size_t k = 0; k < v.size(); ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
}

}  // namespace

ReflexiveReport verify_reflexive(const QuotientPolytope& q, std::int64_t box_limit) {
  ReflexiveReport r;
  r.integral_unit_rhs = std::all_of(q.facets.begin(), q.facets.end(), [](const QuotientFacet& f) { return f.rhs == 1; });
  if (!r.integral_unit_rhs) r.issues.push_back("a facet has right-hand side other than 1");

  r.vertices_feasible = true;
  for (const auto& v : q.vertices)
    for (const auto& f : q.facets)
      if (dot(f.coeffs, v) > f.rhs) r.vertices_feasible = false;
  if (!r.vertices_feasible) r.issues.push_back("a vertex violates a facet inequality");

  r.facets_supported = true;
  for (std::size_t i = 0; i < q.facets.size(); ++i) {
    IntMatrix tight;
    for (const auto& v : q.vertices)
      if (dot(q.facets[i].coeffs, v) == q.facets[i].rhs) tight.push_back(v);
    if (tight.empty() || static_cast<int>(affine_rank(tight)) != q.dimension - 1) {
      r.facets_supported = false;
      r.issues.push_back("facet " + std::to_string(i) + " is not supported by dim affinely independent vertices");
    }
  }

  r.vertices_on_enough_facets = true;
  for (const auto& v : q.vertices) {
    int count = 0;
    for (const auto& f : q.facets) count += dot(f.coeffs, v) == f.rhs ? 1 : 0;
    if (count < q.dimension) r.vertices_on_enough_facets = false;
  }
  if (!r.vertices_on_enough_facets) r.issues.push_back("a vertex lies on fewer than dim facets");

  IntVector lo;
  IntVector hi;
  bounding_box(q, lo, hi);
  if (box_size(lo, hi) > box_limit) throw BoundExceeded("lattice box exceeds the enumeration limit");
  bool origin_inside = false;
  for_each_block_point(q.space, lo, hi, [&](const IntVector& x) {
    for (const auto& f : q.facets)
      if (dot(f.coeffs, x) >= f.rhs) return;
    ++r.interior_points;
    if (std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; })) origin_inside = true;
  });
  r.unique_interior_point = origin_inside && r.interior_points == 1;
  if (!r.unique_interior_point)
    r.issues.push_back(std::to_string(r.interior_points) + " interior lattice points found");

  r.ok = r.integral_unit_rhs && r.vertices_feasible && r.facets_supported && r.vertices_on_enough_facets &&
         r.unique_interior_point;
  return r;
}

QuotientPolytope scaled(const QuotientPolytope& q, std::int64_t k) {
  QuotientPolytope out = q;
  for (auto& v : out.vertices)
    for (auto& c : v) c *= k;
  for (auto& f : out.facets) f.rhs *= k;
  return out;
}

std::int64_t count_quotient_points(const QuotientPolytope& q, int t, bool interior) {
  IntVector lo;
  IntVector hi;
  bounding_box(q, lo, hi);
  for (auto& c : lo) c *= t;
  for (auto& c : hi) c *= t;
  std::int64_t count = 0;
  for_each_block_point(q.space, lo, hi, [&](const IntVector& x) {
    for (const auto& f : q.facets) {
      const auto value = dot(f.coeffs, x);
      if (interior ? value >= t * f.rhs : value > t * f.rhs) return;
    }
    ++count;
  });
  return count;
}

HStarData quotient_hstar(const QuotientPolytope& q) {
  return hstar_from_counter(q.dimension, [&](int t, bool interior) { return count_quotient_points(q, t, interior); });
}

}  // namespace flowtri
