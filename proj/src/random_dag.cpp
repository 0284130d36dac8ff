#include "flowtri/random_dag.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace flowtri {

namespace {

std::string edge_id(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "e" + std::to_string(k);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Dag random_dag(std::mt19937_64& rng, int max_edges) {
  max_edges = std::max(max_edges, 1);
  const int n = uniform(rng, 0, std::max(0, (max_edges - 1) / 2));
  std::vector<std::pair<int, int>> ends;
  for (int v = 1; v <= n; ++v) {
    ends.emplace_back(uniform(rng, 0, v - 1), v);
    ends.emplace_back(v, uniform(rng, v + 1, n + 1));
  }
  if (n == 0 || uniform(rng, 0, 1) == 0) ends.emplace_back(0, n + 1);
  const int extra = uniform(rng, 0, std::max(0, max_edges - static_cast<int>(ends.size())));
  for (int k = 0; k < extra; ++k) {
    const int u = uniform(rng, 0, n);
    ends.emplace_back(u, uniform(rng, u + 1, n + 1));
  }
  std::shuffle(ends.begin(), ends.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < ends.size(); ++k) edges.push_back({edge_id(k), ends[k].first, ends[k].second});
  return Dag(n, std::move(edges));
}

Dag random_balanced_dag(std::mt19937_64& rng, int route_count, int max_inner) {
  const int n = uniform(rng, 0, std::max(0, max_inner));
  std::vector<std::vector<int>> paths;
  std::vector<bool> used(static_cast<std::size_t>(n + 2), false);
  for (int r = 0; r < std::max(route_count, 1); ++r) {
    std::vector<int> path{0};
    for (int v = 1; v <= n; ++v)
      if (uniform(rng, 0, 1) == 0) path.push_back(v);
    path.push_back(n + 1);
    for (int v : path) used[static_cast<std::size_t>(v)] = true;
    paths.push_back(std::move(path));
  }
  std::vector<int> renumber(static_cast<std::size_t>(n + 2), -1);
  int next = 0;
  for (int v = 0; v <= n + 1; ++v)
    if (used[static_cast<std::size_t>(v)] || v == 0 || v == n + 1) renumber[static_cast<std::size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (const auto& path : paths)
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      edges.push_back({edge_id(edges.size()), renumber[static_cast<std::size_t>(path[k])],
                       renumber[static_cast<std::size_t>(path[k + 1])]});
  const Dag dag(next - 2, std::move(edges));
  return contract_idle_edges(dag).dag;
}

Dag random_balanced_dag_within(std::mt19937_64& rng, int max_edges) {
  for (;;) {
    const int routes = uniform(rng, 1, std::max(1, max_edges / 2));
    const Dag dag = random_balanced_dag(rng, routes, 3);
    if (static_cast<int>(dag.edge_count()) <= max_edges) return dag;
  }
}

}  // namespace flowtri
