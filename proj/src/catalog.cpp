#include "flowtri/catalog.hpp"

namespace flowtri::catalog {

Dag parallel(int k) {
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({"e" + std::to_string(i), 0, 1});
  return Dag(0, std::move(edges));
}

Dag d1() { return Dag(1, {{"a", 0, 1}, {"b", 0, 1}, {"c", 1, 2}, {"d", 1, 2}}); }

Dag d2() {
  return Dag(2, {{"a", 0, 1}, {"b", 0, 1}, {"c", 1, 2}, {"d", 1, 2}, {"e", 2, 3}, {"f", 2, 3}});
}

Dag d3() {
  return Dag(1, {{"a", 0, 1}, {"b", 0, 1}, {"c", 0, 1}, {"d", 1, 2}, {"e", 1, 2}, {"f", 1, 2}});
}

Dag skew_pair() {
  return Dag(2, {{"a", 0, 1},
                 {"b", 0, 1},
                 {"c", 0, 2},
                 {"d", 1, 2},
                 {"e", 1, 3},
                 {"f", 2, 3},
                 {"g", 2, 3}});
}

}  // namespace flowtri::catalog
