#include "flowtri/serialize.hpp"

#include <algorithm>
#include <cstdio>

#include "flowtri/errors.hpp"

namespace flowtri {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int endpoint(const Json& j, int inner_count) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "s") return 0;
    if (s == "t") return inner_count + 1;
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("edge endpoint must be \"s\", \"t\" or an inner index");
}

std::vector<std::string> id_list(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of edge ids");
  std::vector<std::string> ids;
  for (const auto& x : j) {
    if (!x.is_string()) throw InvalidInput("edge ids must be strings");
    ids.push_back(x.get<std::string>());
  }
  return ids;
}

std::vector<std::size_t> indices(const Dag& dag, const Json& j) {
  std::vector<std::size_t> out;
  for (const auto& id : id_list(j)) out.push_back(dag.edge_index(id));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Dag dag_from_json(const Json& j) {
  const auto& n = member(j, "inner_count");
  if (!n.is_number_integer() || n.get<int>() < 0) throw InvalidInput("inner_count must be a non-negative integer");
  const int inner = n.get<int>();
  const auto& list = member(j, "edges");
  if (!list.is_array()) throw InvalidInput("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : list) {
    const auto& id = member(e, "id");
    if (!id.is_string()) throw InvalidInput("edge id must be a string");
    edges.push_back({id.get<std::string>(), endpoint(member(e, "tail"), inner), endpoint(member(e, "head"), inner)});
  }
  return Dag(inner, std::move(edges));
}

Json dag_to_json(const Dag& dag) {
  Json edges = Json::array();
  auto name = [&](int v) -> Json {
    if (dag.is_inner(v)) return v;
    return dag.vertex_name(v);
  };
  for (const auto& e : dag.edges()) edges.push_back({{"id", e.id}, {"tail", name(e.tail)}, {"head", name(e.head)}});
  return {{"inner_count", dag.inner_count()}, {"edges", edges}};
}

PlanarEmbedding embedding_from_json(const Dag& dag, const Json& j) {
  const auto& rot = member(j, "rotations");
  if (!rot.is_object()) throw InvalidInput("rotations must be an object keyed by vertex");
  PlanarEmbedding emb;
  emb.rotations.resize(static_cast<std::size_t>(dag.vertex_count()));
  std::vector<bool> seen(static_cast<std::size_t>(dag.vertex_count()), false);
  for (const auto& [key, value] : rot.items()) {
    const int v = dag.parse_vertex(key);
    if (seen[static_cast<std::size_t>(v)]) throw InvalidInput("vertex " + key + " has two rotations");
    seen[static_cast<std::size_t>(v)] = true;
    emb.rotations[static_cast<std::size_t>(v)] = indices(dag, value);
  }
  for (int v = 0; v < dag.vertex_count(); ++v)
    if (!seen[static_cast<std::size_t>(v)]) throw InvalidInput("no rotation for vertex " + dag.vertex_name(v));
  return emb;
}

Json embedding_to_json(const Dag& dag, const PlanarEmbedding& embedding) {
  Json rot = Json::object();
  for (int v = 0; v < dag.vertex_count(); ++v) {
    Json ids = Json::array();
    for (auto e : embedding.rotations.at(static_cast<std::size_t>(v))) ids.push_back(dag.edge(e).id);
    rot[dag.vertex_name(v)] = ids;
  }
  return {{"rotations", rot}};
}

RouteDecomposition decomposition_from_json(const Dag& dag, const Json& j) {
  const Json& list = j.is_object() ? member(j, "decomposition") : j;
  if (!list.is_array()) throw InvalidInput("decomposition must be an array of routes");
  RouteDecomposition out;
  for (const auto& r : list) {
    std::vector<std::string> ids;
    if (r.is_string()) {
      for (char c : r.get<std::string>()) ids.emplace_back(1, c);
    } else {
      ids = id_list(r);
    }
    out.push_back(route_from_ids(dag, ids));
  }
  if (!is_route_decomposition(dag, out)) throw InvalidInput("routes do not partition the edge set");
  return out;
}

Json routes_to_json(const Dag& dag, const std::vector<Route>& routes) {
  Json out = Json::array();
  for (const auto& r : routes) out.push_back(route_name(dag, r));
  return out;
}

Framing framing_from_json(const Dag& dag, const Json& j) {
  std::vector<std::vector<std::size_t>> ins(static_cast<std::size_t>(dag.vertex_count()));
  std::vector<std::vector<std::size_t>> outs(static_cast<std::size_t>(dag.vertex_count()));
  for (int v = 1; v <= dag.inner_count(); ++v) {
    ins[static_cast<std::size_t>(v)].assign(dag.in_edges(v).begin(), dag.in_edges(v).end());
    outs[static_cast<std::size_t>(v)].assign(dag.out_edges(v).begin(), dag.out_edges(v).end());
  }
  for (const char* side : {"in", "out"}) {
    if (!j.contains(side)) continue;
    const auto& table = j.at(side);
    if (!table.is_object()) throw InvalidInput(std::string("framing.") + side + " must be an object");
    for (const auto& [key, value] : table.items()) {
      const int v = dag.parse_vertex(key);
      if (!dag.is_inner(v)) throw InvalidInput("framings are given at inner vertices only");
      (std::string(side) == "in" ? ins : outs)[static_cast<std::size_t>(v)] = indices(dag, value);
    }
  }
  return Framing(dag, std::move(ins), std::move(outs));
}

Json framing_to_json(const Dag& dag, const Framing& framing) {
  Json in = Json::object();
  Json out = Json::object();
  for (int v = 1; v <= dag.inner_count(); ++v) {
    Json a = Json::array();
    Json b = Json::array();
    for (auto e : framing.in_order(v)) a.push_back(dag.edge(e).id);
    for (auto e : framing.out_order(v)) b.push_back(dag.edge(e).id);
    in[dag.vertex_name(v)] = a;
    out[dag.vertex_name(v)] = b;
  }
  return {{"in", in}, {"out", out}};
}

Poset poset_from_json(const Json& j) {
  std::vector<std::string> elements;
  for (const auto& x : member(j, "elements")) {
    if (!x.is_string()) throw InvalidInput("poset elements must be strings");
    elements.push_back(x.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> relations;
  for (const auto& c : member(j, "covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw InvalidInput("each cover is a pair of element names");
    relations.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return Poset::from_names(std::move(elements), relations);
}

Json poset_to_json(const Poset& poset) {
  Json covers = Json::array();
  for (auto [a, b] : poset.covers())
    covers.push_back({poset.elements()[static_cast<std::size_t>(a)], poset.elements()[static_cast<std::size_t>(b)]});
  return {{"elements", poset.elements()}, {"covers", covers}};
}

HasseEmbedding hasse_embedding_from_json(const Poset& poset, const Json& j) {
  const auto& rot = member(j, "rotations");
  if (!rot.is_object()) throw InvalidInput("rotations must be an object keyed by element");
  auto index = [&](const std::string& name) {
    if (name == "^0") return poset.size();
    if (name == "^1") return poset.size() + 1;
    return poset.index(name);
  };
  HasseEmbedding emb;
  emb.rotations.resize(static_cast<std::size_t>(poset.size() + 2));
  std::vector<bool> seen(emb.rotations.size(), false);
  for (const auto& [key, value] : rot.items()) {
    const int v = index(key);
    if (seen[static_cast<std::size_t>(v)]) throw InvalidInput("element " + key + " has two rotations");
    seen[static_cast<std::size_t>(v)] = true;
    for (const auto& name : id_list(value)) emb.rotations[static_cast<std::size_t>(v)].push_back(index(name));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InvalidInput("Hasse embedding is missing a rotation");
  return emb;
}

Json hstar_to_json(const HStarData& h) {
  return {{"h_star", h.h_star}, {"degree", h.degree}, {"codegree", h.codegree}, {"L", h.counts}};
}

Json complex_to_json(const SimplicialComplex& complex, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& f : complex.facets) {
    Json face = Json::array();
    for (int v : f) face.push_back(labels.at(static_cast<std::size_t>(v)));
    out.push_back(face);
  }
  return out;
}

Json report_to_json(const TriangulationReport& r) {
  return {{"ok", r.ok},
          {"pure", r.pure},
          {"unimodular", r.unimodular},
          {"common_faces", r.common_faces},
          {"volume", r.volume},
          {"volume_sum", r.volume_sum},
          {"expected_volume", r.expected_volume},
          {"issues", r.issues}};
}

std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace flowtri
