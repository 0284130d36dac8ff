#pragma once

// Brute-force reference implementations used to check the library. They use
// only the Dag accessors and plain enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "flowtri/dag.hpp"
#include "flowtri/planar.hpp"

namespace oracle {

using flowtri::Dag;

// Integer flows of strength t by scanning the box [lo, t]^E.
inline std::int64_t box_count(const Dag& dag, int t, bool interior) {
  const std::size_t m = dag.edge_count();
  const std::int64_t lo = interior ? 1 : 0;
  std::vector<std::int64_t> x(m, lo);
  std::int64_t count = 0;
  for (;;) {
    bool ok = true;
    std::int64_t out_of_s = 0;
    for (auto e : dag.out_edges(dag.source())) out_of_s += x[e];
    ok = out_of_s == t;
    for (int v = 1; v <= dag.inner_count() && ok; ++v) {
      std::int64_t balance = 0;
      for (auto e : dag.in_edges(v)) balance += x[e];
      for (auto e : dag.out_edges(v)) balance -= x[e];
      ok = balance == 0;
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < m && x[k] == t) x[k++] = lo;
    if (k == m) return count;
    ++x[k];
  }
}

// h* from lattice counts L(0..d): coefficients of (1-z)^{d+1} * sum L(t) z^t.
inline std::vector<std::int64_t> hstar_from_counts(const std::vector<std::int64_t>& counts, int d) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
  for (int j = 0; j <= d; ++j) {
    std::int64_t binom = 1;
    for (int i = 0; i <= j; ++i) {
      h[static_cast<std::size_t>(j)] += (i % 2 == 0 ? binom : -binom) * counts[static_cast<std::size_t>(j - i)];
      binom = binom * (d + 1 - i) / (i + 1);
    }
  }
  return h;
}

inline std::vector<std::int64_t> box_hstar(const Dag& dag) {
  const int d = static_cast<int>(dag.edge_count()) - dag.inner_count() - 1;
  std::vector<std::int64_t> counts{1};
  for (int t = 1; t <= d; ++t) counts.push_back(box_count(dag, t, false));
  return hstar_from_counts(counts, d);
}

// Exhaustive search for a partition of E into s-t paths.
inline bool has_route_partition(const Dag& dag) {
  std::vector<bool> used(dag.edge_count(), false);
  std::size_t remaining = dag.edge_count();
  std::function<bool()> start;
  std::function<bool(int)> walk = [&](int v) -> bool {
    if (v == dag.sink()) return start();
    for (auto e : dag.out_edges(v)) {
      if (used[e]) continue;
      used[e] = true;
      --remaining;
      if (walk(dag.edge(e).head)) return true;
      used[e] = false;
      ++remaining;
    }
    return false;
  };
  start = [&]() -> bool {
    if (remaining == 0) return true;
    // Canonical choice: the route through the first unused s-edge.
    for (auto e : dag.out_edges(dag.source()))
      if (!used[e]) {
        used[e] = true;
        --remaining;
        if (walk(dag.edge(e).head)) return true;
        used[e] = false;
        ++remaining;
        return false;
      }
    return false;
  };
  return start();
}

// All s-t paths as edge-index lists, by plain DFS.
inline std::vector<std::vector<std::size_t>> all_paths(const Dag& dag) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::function<void(int)> go = [&](int v) {
    if (v == dag.sink()) {
      out.push_back(path);
      return;
    }
    for (auto e : dag.out_edges(v)) {
      path.push_back(e);
      go(dag.edge(e).head);
      path.pop_back();
    }
  };
  go(dag.source());
  return out;
}

// Order-preserving maps P -> {0..t} by full enumeration.
inline std::int64_t order_box_count(const flowtri::Poset& p, int t, bool interior) {
  const int n = p.size();
  const int lo = interior ? 1 : 0;
  const int hi = interior ? t - 1 : t;
  if (n == 0) return interior ? (t >= 1 ? 1 : 0) : 1;
  if (hi < lo) return 0;
  std::vector<int> f(static_cast<std::size_t>(n), lo);
  std::int64_t count = 0;
  for (;;) {
    bool ok = true;
    for (auto [a, b] : p.covers()) {
      const int fa = f[static_cast<std::size_t>(a)];
      const int fb = f[static_cast<std::size_t>(b)];
      if (interior ? fa >= fb : fa > fb) ok = false;
    }
    if (ok) ++count;
    int k = 0;
    while (k < n && f[static_cast<std::size_t>(k)] == hi) f[static_cast<std::size_t>(k++)] = lo;
    if (k == n) return count;
    ++f[static_cast<std::size_t>(k)];
  }
}

inline std::int64_t linear_extensions(const flowtri::Poset& p) {
  std::vector<int> perm(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i)
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j)
        if (p.less(perm[j], perm[i])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// h-vector from an explicit face list (all faces, including the empty one):
// coefficients of sum_k f_k z^{k+1} (1 - z)^{D-1-k}.
inline std::vector<std::int64_t> h_from_faces(const std::vector<std::vector<int>>& maximal) {
  std::set<std::vector<int>> faces;
  for (const auto& m : maximal) {
    const std::size_t n = m.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> f;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) f.push_back(m[i]);
      faces.insert(f);
    }
  }
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  const int D = static_cast<int>(top);
  std::vector<std::int64_t> h(static_cast<std::size_t>(D + 1), 0);
  for (const auto& f : faces) {
    const int k1 = static_cast<int>(f.size());
    // z^{k1} (1 - z)^{D - k1}
    std::int64_t binom = 1;
    for (int i = 0; i <= D - k1; ++i) {
      h[static_cast<std::size_t>(k1 + i)] += (i % 2 == 0 ? binom : -binom);
      binom = binom * (D - k1 - i) / (i + 1);
    }
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace oracle
