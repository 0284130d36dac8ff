#include "flowtri/dag.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "flowtri/errors.hpp"

namespace flowtri {

Dag::Dag(int inner_count, std::vector<Edge> edges)
    : inner_count_(inner_count), edges_(std::move(edges)) {
  if (inner_count_ < 0) throw InvalidInput("inner_count must be non-negative");
  in_.assign(static_cast<std::size_t>(vertex_count()), {});
  out_.assign(static_cast<std::size_t>(vertex_count()), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.tail < 0 || e.tail >= vertex_count() || e.head < 0 || e.head >= vertex_count())
      throw InvalidInput("edge '" + e.id + "' has an endpoint outside the vertex range");
    out_[static_cast<std::size_t>(e.tail)].push_back(i);
    in_[static_cast<std::size_t>(e.head)].push_back(i);
  }
}

std::optional<std::size_t> Dag::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  return std::nullopt;
}

std::size_t Dag::edge_index(std::string_view id) const {
  if (auto i = find_edge(id)) return *i;
  throw InvalidInput("unknown edge id '" + std::string(id) + "'");
}

std::string Dag::vertex_name(int v) const {
  if (v == source()) return "s";
  if (v == sink()) return "t";
  return std::to_string(v);
}

int Dag::parse_vertex(std::string_view name) const {
  if (name == "s") return source();
  if (name == "t") return sink();
  int v = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
  if (ec != std::errc{} || ptr != name.data() + name.size() || !is_inner(v))
    throw InvalidInput("unknown vertex '" + std::string(name) + "'");
  return v;
}

ValidationReport validate(const Dag& dag) {
  ValidationReport report;
  auto add = [&](std::string rule, std::string message) {
    report.violations.push_back({std::move(rule), std::move(message)});
  };

  std::set<std::string> seen;
  for (const Edge& e : dag.edges()) {
    if (e.tail >= e.head)
      add("self-loop/order", "edge '" + e.id + "' does not go forward in the vertex order");
    if (!seen.insert(e.id).second) add("duplicate-id", "edge id '" + e.id + "' is repeated");
  }
  if (dag.indeg(dag.source()) > 0) add("source", "s has incoming edges");
  if (dag.outdeg(dag.sink()) > 0) add("sink", "t has outgoing edges");
  for (int v = 1; v <= dag.inner_count(); ++v) {
    if (dag.indeg(v) == 0)
      add("extra source", "inner vertex " + dag.vertex_name(v) + " has no incoming edge");
    if (dag.outdeg(v) == 0)
      add("dead inner vertex", "inner vertex " + dag.vertex_name(v) + " has no outgoing edge");
  }

  // Forward reachability from s and backward reachability from t, over
  // forward-going edges only (order violations are reported above).
  const auto n = static_cast<std::size_t>(dag.vertex_count());
  std::vector<bool> from_s(n, false), to_t(n, false);
  from_s[0] = true;
  for (int v = 0; v < dag.vertex_count(); ++v) {
    if (!from_s[static_cast<std::size_t>(v)]) continue;
    for (auto e : dag.out_edges(v))
      if (dag.edge(e).head > v) from_s[static_cast<std::size_t>(dag.edge(e).head)] = true;
  }
  to_t[n - 1] = true;
  for (int v = dag.vertex_count() - 1; v >= 0; --v) {
    if (!to_t[static_cast<std::size_t>(v)]) continue;
    for (auto e : dag.in_edges(v))
      if (dag.edge(e).tail < v) to_t[static_cast<std::size_t>(dag.edge(e).tail)] = true;
  }
  if (!to_t[0]) add("no route", "there is no route from s to t");
  for (int v = 1; v <= dag.inner_count(); ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (!(from_s[i] && to_t[i]))
      add("off route", "inner vertex " + dag.vertex_name(v) + " lies on no route");
  }

  report.ok = report.violations.empty();
  return report;
}

bool is_idle(const Dag& dag, std::size_t edge) {
  const Edge& e = dag.edge(edge);
  return (dag.is_inner(e.head) && dag.indeg(e.head) == 1) ||
         (dag.is_inner(e.tail) && dag.outdeg(e.tail) == 1);
}

bool has_idle_edges(const Dag& dag) {
  for (std::size_t i = 0; i < dag.edge_count(); ++i)
    if (is_idle(dag, i)) return true;
  return false;
}

namespace {

// Merges vertex `from` into vertex `into`, drops edge `dropped`, and renumbers
// the inner vertices so that the order of the survivors is preserved.
Dag merge_vertices(const Dag& dag, std::size_t dropped, int from, int into) {
  std::vector<Edge> edges;
  edges.reserve(dag.edge_count() - 1);
  auto renumber = [&](int v) {
    if (v == from) v = into;
    return v > from ? v - 1 : v;
  };
  for (std::size_t i = 0; i < dag.edge_count(); ++i) {
    if (i == dropped) continue;
    Edge e = dag.edge(i);
    e.tail = renumber(e.tail);
    e.head = renumber(e.head);
    edges.push_back(std::move(e));
  }
  return Dag(dag.inner_count() - 1, std::move(edges));
}

}  // namespace

ContractionResult contract_idle_edges(const Dag& dag) {
  ContractionResult result{dag, {}, {}};
  for (const Edge& e : dag.edges()) result.edge_map[e.id] = e.id;

  for (;;) {
    const Dag& g = result.dag;
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (is_idle(g, i) && (!pick || g.edge(i).id < g.edge(*pick).id)) pick = i;
    }
    if (!pick) break;
    const Edge e = g.edge(*pick);
    // The sole in-edge of its head merges forward into the smaller tail; the
    // sole out-edge of its tail merges into the head, so that the merged
    // vertex keeps every edge pointing forward.
    Dag next = (g.is_inner(e.head) && g.indeg(e.head) == 1) ? merge_vertices(g, *pick, e.head, e.tail)
                                                             : merge_vertices(g, *pick, e.tail, e.head);
    result.edge_map[e.id] = std::nullopt;
    result.contracted.push_back(e.id);
    result.dag = std::move(next);
  }
  if (result.dag.edge_count() == 0) throw InvalidInput("trivial graph");
  return result;
}

bool degree_equality(const Dag& dag) {
  for (int v = 1; v <= dag.inner_count(); ++v)
    if (dag.indeg(v) != dag.outdeg(v)) return false;
  return true;
}

Dag gorenstein_completion(const Dag& dag) {
  std::vector<Edge> edges(dag.edges().begin(), dag.edges().end());
  std::set<std::string> ids;
  for (const Edge& e : edges) ids.insert(e.id);
  auto fresh = [&](std::string base) {
    std::string id = base;
    while (ids.count(id)) id += "'";
    ids.insert(id);
    return id;
  };
  for (int v = 1; v <= dag.inner_count(); ++v) {
    const int gap = dag.outdeg(v) - dag.indeg(v);
    const std::string name = dag.vertex_name(v);
    for (int k = 1; k <= std::abs(gap); ++k) {
      if (gap > 0)
        edges.push_back({fresh("+s>" + name + "#" + std::to_string(k)), dag.source(), v});
      else
        edges.push_back({fresh("+" + name + ">t#" + std::to_string(k)), v, dag.sink()});
    }
  }
  return Dag(dag.inner_count(), std::move(edges));
}

int dimension(const Dag& dag) {
  return static_cast<int>(dag.edge_count()) - dag.inner_count() - 1;
}

}  // namespace flowtri
