#pragma once

#include <string>
#include <vector>

#include "flowtri/dag.hpp"
#include "flowtri/routes.hpp"

namespace testing_helpers {

inline flowtri::Route route(const flowtri::Dag& dag, const std::string& ids) {
  std::vector<std::string> parts;
  for (char c : ids) parts.emplace_back(1, c);
  return flowtri::route_from_ids(dag, parts);
}

inline std::vector<std::string> names(const flowtri::Dag& dag, const std::vector<flowtri::Route>& routes) {
  std::vector<std::string> out;
  for (const auto& r : routes) out.push_back(flowtri::route_name(dag, r));
  return out;
}

inline flowtri::RouteDecomposition decomposition(const flowtri::Dag& dag, const std::vector<std::string>& routes) {
  flowtri::RouteDecomposition out;
  for (const auto& r : routes) out.push_back(route(dag, r));
  return out;
}

// s -> v with `in` parallel edges, v -> t with `out` parallel edges.
inline flowtri::Dag star(int in, int out) {
  std::vector<flowtri::Edge> edges;
  char id = 'a';
  for (int i = 0; i < in; ++i) edges.push_back({std::string(1, id++), 0, 1});
  for (int i = 0; i < out; ++i) edges.push_back({std::string(1, id++), 1, 2});
  return flowtri::Dag(1, std::move(edges));
}

}  // namespace testing_helpers
