#pragma once

// JSON encodings of graphs, embeddings, decompositions, posets and results.
// Every decoder throws InvalidInput on malformed input.

#include <json.hpp>
#include <string>

#include "flowtri/dag.hpp"
#include "flowtri/geometry.hpp"
#include "flowtri/planar.hpp"
#include "flowtri/routes.hpp"

namespace flowtri {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to InvalidInput.
Json parse_json(const std::string& text);

/// {"inner_count": n, "edges": [{"id": "a", "tail": "s", "head": 1}, ...]}
/// Endpoints are "s", "t", or inner indices given as integers or strings.
Dag dag_from_json(const Json& j);
Json dag_to_json(const Dag& dag);

/// {"rotations": {"s": [ids...], "1": [...], ..., "t": [...]}}
PlanarEmbedding embedding_from_json(const Dag& dag, const Json& j);
Json embedding_to_json(const Dag& dag, const PlanarEmbedding& embedding);

/// [["a", "c"], ["b", "d"]] or ["ac", "bd"] for single-character ids.
RouteDecomposition decomposition_from_json(const Dag& dag, const Json& j);
Json routes_to_json(const Dag& dag, const std::vector<Route>& routes);

/// {"in": {"1": [ids top to bottom]}, "out": {...}}
Framing framing_from_json(const Dag& dag, const Json& j);
Json framing_to_json(const Dag& dag, const Framing& framing);

/// {"elements": [...], "covers": [[a, b], ...]}
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& poset);
/// {"rotations": {"^0": [names], "x": [...], "^1": [...]}}
HasseEmbedding hasse_embedding_from_json(const Poset& poset, const Json& j);

Json hstar_to_json(const HStarData& h);
/// Facets as lists of vertex labels.
Json complex_to_json(const SimplicialComplex& complex, const std::vector<std::string>& labels);
Json report_to_json(const TriangulationReport& report);

/// 64-bit FNV-1a digest as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace flowtri
