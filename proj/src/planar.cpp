#include "flowtri/planar.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "flowtri/dkk.hpp"
#include "flowtri/equatorial.hpp"
#include "flowtri/errors.hpp"

namespace flowtri {

namespace {

constexpr int kMaxPosetSize = 63;

// Face tracing on a graph with a rotation system. Dart 2e runs along edge e
// from its first endpoint to its second; dart 2e + 1 runs back. Each dart is
// assigned the face on its left.
struct Traced {
  std::vector<int> dart_face;
  std::vector<std::vector<int>> orbits;
};

Traced trace(int vertex_count, const std::vector<std::pair<int, int>>& ends,
             const std::vector<std::vector<std::size_t>>& rotations) {
  std::vector<std::map<std::size_t, std::size_t>> position(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) {
    const auto& rot = rotations[static_cast<std::size_t>(v)];
    for (std::size_t p = 0; p < rot.size(); ++p) position[static_cast<std::size_t>(v)][rot[p]] = p;
  }
  Traced out;
  out.dart_face.assign(2 * ends.size(), -1);
  for (std::size_t start = 0; start < out.dart_face.size(); ++start) {
    if (out.dart_face[start] != -1) continue;
    const int face = static_cast<int>(out.orbits.size());
    out.orbits.emplace_back();
    std::size_t d = start;
    while (out.dart_face[d] == -1) {
      out.dart_face[d] = face;
      out.orbits.back().push_back(static_cast<int>(d));
      const std::size_t e = d / 2;
      const int w = d % 2 == 0 ? ends[e].second : ends[e].first;
      const auto& rot = rotations[static_cast<std::size_t>(w)];
      const std::size_t p = position[static_cast<std::size_t>(w)].at(e);
      const std::size_t next = rot[(p + rot.size() - 1) % rot.size()];
      d = 2 * next + (ends[next].first == w ? 0 : 1);
    }
    if (d != start) throw InvalidInput("non-planar rotation: face orbit does not close");
  }
  return out;
}

void check_rotation_covers(const std::vector<std::size_t>& rot, std::vector<std::size_t> incident,
                           const std::string& where) {
  auto sorted = rot;
  std::sort(sorted.begin(), sorted.end());
  std::sort(incident.begin(), incident.end());
  if (sorted != incident) throw InvalidInput("rotation at " + where + " does not list each incident edge exactly once");
}

std::vector<std::pair<int, int>> dag_ends(const Dag& dag) {
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : dag.edges()) ends.emplace_back(e.tail, e.head);
  return ends;
}

// Splits the cyclic rotation of an inner vertex into its out-block (bottom to
// top) and in-block (top to bottom).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_rotation(const Dag& dag, int v,
                                                                           const std::vector<std::size_t>& rot) {
  const std::size_t n = rot.size();
  auto is_out = [&](std::size_t p) { return dag.edge(rot[p % n]).tail == v; };
  std::size_t boundaries = 0;
  std::size_t first_out = n;
  for (std::size_t p = 0; p < n; ++p)
    if (is_out(p) && !is_out(p + n - 1)) {
      ++boundaries;
      first_out = p;
    }
  if (boundaries != 1)
    throw InvalidInput("rotation at vertex " + dag.vertex_name(v) + " interleaves in- and out-edges");
  std::vector<std::size_t> outs;
  std::vector<std::size_t> ins;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = (first_out + k) % n;
    (is_out(p) ? outs : ins).push_back(rot[p]);
  }
  return {outs, ins};
}

std::string element_label(const Poset& poset, int x) {
  if (x == poset.size()) return "^0";
  if (x == poset.size() + 1) return "^1";
  return poset.elements()[static_cast<std::size_t>(x)];
}

}  // namespace

PlanarEmbedding embedding_from_orders(const Dag& dag, const std::vector<std::vector<std::size_t>>& in_orders,
                                      const std::vector<std::vector<std::size_t>>& out_orders) {
  PlanarEmbedding emb;
  emb.rotations.resize(static_cast<std::size_t>(dag.vertex_count()));
  for (int v = 0; v < dag.vertex_count(); ++v) {
    auto& rot = emb.rotations[static_cast<std::size_t>(v)];
    if (v != dag.sink()) {
      const auto& outs = out_orders.at(static_cast<std::size_t>(v));
      rot.assign(outs.rbegin(), outs.rend());
    }
    if (v != dag.source()) {
      const auto& ins = in_orders.at(static_cast<std::size_t>(v));
      rot.insert(rot.end(), ins.begin(), ins.end());
    }
  }
  return emb;
}

PlanarEmbedding stacked_embedding(const Dag& dag) {
  std::vector<std::vector<std::size_t>> ins(static_cast<std::size_t>(dag.vertex_count()));
  std::vector<std::vector<std::size_t>> outs(static_cast<std::size_t>(dag.vertex_count()));
  for (int v = 0; v < dag.vertex_count(); ++v) {
    ins[static_cast<std::size_t>(v)].assign(dag.in_edges(v).begin(), dag.in_edges(v).end());
    outs[static_cast<std::size_t>(v)].assign(dag.out_edges(v).begin(), dag.out_edges(v).end());
  }
  return embedding_from_orders(dag, ins, outs);
}

FaceStructure trace_faces(const Dag& dag, const PlanarEmbedding& embedding) {
  if (embedding.rotations.size() != static_cast<std::size_t>(dag.vertex_count()))
    throw InvalidInput("embedding needs one rotation per vertex");
  for (int v = 0; v < dag.vertex_count(); ++v) {
    std::vector<std::size_t> incident(dag.in_edges(v).begin(), dag.in_edges(v).end());
    incident.insert(incident.end(), dag.out_edges(v).begin(), dag.out_edges(v).end());
    const auto& rot = embedding.rotations[static_cast<std::size_t>(v)];
    check_rotation_covers(rot, incident, "vertex " + dag.vertex_name(v));
    if (incident.empty()) throw InvalidInput("vertex " + dag.vertex_name(v) + " has no edges");
    if (dag.is_inner(v)) split_rotation(dag, v, rot);
  }
  const auto traced = trace(dag.vertex_count(), dag_ends(dag), embedding.rotations);
  FaceStructure fs;
  fs.face_count = static_cast<int>(traced.orbits.size());
  if (dag.vertex_count() - static_cast<int>(dag.edge_count()) + fs.face_count != 2)
    throw InvalidInput("non-planar rotation: Euler characteristic check failed");
  for (std::size_t e = 0; e < dag.edge_count(); ++e) {
    fs.above.push_back(traced.dart_face[2 * e]);
    fs.below.push_back(traced.dart_face[2 * e + 1]);
  }
  const auto& at_s = embedding.rotations[static_cast<std::size_t>(dag.source())];
  const auto& at_t = embedding.rotations[static_cast<std::size_t>(dag.sink())];
  fs.outer = fs.above[at_s.back()];
  if (fs.below[at_s.front()] != fs.outer || fs.above[at_t.front()] != fs.outer || fs.below[at_t.back()] != fs.outer)
    throw InvalidInput("non-planar rotation: s and t do not both face the outer region");
  for (std::size_t e = 0; e < dag.edge_count(); ++e)
    if (fs.above[e] == fs.below[e] && fs.above[e] != fs.outer)
      throw InvalidInput("non-planar rotation: edge " + dag.edge(e).id + " has one bounded face on both sides");
  return fs;
}

Framing planar_framing(const Dag& dag, const PlanarEmbedding& embedding) {
  trace_faces(dag, embedding);
  std::vector<std::vector<std::size_t>> ins(static_cast<std::size_t>(dag.vertex_count()));
  std::vector<std::vector<std::size_t>> outs(static_cast<std::size_t>(dag.vertex_count()));
  for (int v = 1; v <= dag.inner_count(); ++v) {
    auto [out_block, in_block] = split_rotation(dag, v, embedding.rotations[static_cast<std::size_t>(v)]);
    std::reverse(out_block.begin(), out_block.end());
    outs[static_cast<std::size_t>(v)] = std::move(out_block);
    ins[static_cast<std::size_t>(v)] = std::move(in_block);
  }
  return Framing(dag, std::move(ins), std::move(outs));
}

RouteDecomposition topmost_decomposition(const Dag& dag, const PlanarEmbedding& embedding) {
  if (!degree_equality(dag)) throw NotGorenstein();
  const auto framing = planar_framing(dag, embedding);
  const auto& at_s = embedding.rotations[static_cast<std::size_t>(dag.source())];
  std::vector<bool> used(dag.edge_count(), false);
  RouteDecomposition out;
  for (auto first = at_s.rbegin(); first != at_s.rend(); ++first) {
    Route r;
    std::size_t e = *first;
    for (;;) {
      if (used[e]) throw ConsistencyError("topmost peel reused an edge");
      used[e] = true;
      r.edges.push_back(e);
      const int v = dag.edge(e).head;
      if (v == dag.sink()) break;
      const auto& order = framing.out_order(v);
      const auto next = std::find_if(order.begin(), order.end(), [&](std::size_t c) { return !used[c]; });
      if (next == order.end()) throw ConsistencyError("topmost peel got stuck");
      e = *next;
    }
    out.push_back(std::move(r));
  }
  if (!is_route_decomposition(dag, out)) throw ConsistencyError("topmost peel is not a route decomposition");
  return out;
}

Poset::Poset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& relations)
    : elements_(std::move(elements)) {
  const int n = size();
  if (n > kMaxPosetSize) throw InvalidInput("posets are limited to 63 elements");
  if (std::set<std::string>(elements_.begin(), elements_.end()).size() != elements_.size())
    throw InvalidInput("repeated poset element name");
  for (const auto& name : elements_)
    if (name == "^0" || name == "^1") throw InvalidInput("element names ^0 and ^1 are reserved");
  above_.assign(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidInput("relation refers to an unknown element");
    above_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((above_[static_cast<std::size_t>(i)] >> k) & 1U) above_[static_cast<std::size_t>(i)] |= above_[static_cast<std::size_t>(k)];
  for (int i = 0; i < n; ++i)
    if ((above_[static_cast<std::size_t>(i)] >> i) & 1U) throw InvalidInput("poset relations contain a cycle");
  upper_covers_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) cover = !(less(a, c) && less(c, b));
      if (cover) {
        covers_.emplace_back(a, b);
        upper_covers_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      }
    }
}

Poset Poset::from_names(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& relations) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> rel;
  for (const auto& [a, b] : relations) {
    if (!index.count(a) || !index.count(b)) throw InvalidInput("relation refers to an unknown element");
    rel.emplace_back(index.at(a), index.at(b));
  }
  return Poset(std::move(elements), rel);
}

std::uint64_t Poset::full_mask() const noexcept {
  return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

int Poset::index(const std::string& name) const {
  const auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) throw InvalidInput("unknown poset element " + name);
  return static_cast<int>(it - elements_.begin());
}

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return false;
  const int n = a.size();
  auto below_count = [](const Poset& p, int x) {
    int c = 0;
    for (int y = 0; y < p.size(); ++y) c += p.less(y, x) ? 1 : 0;
    return c;
  };
  auto signature = [&](const Poset& p, int x) { return std::pair{std::popcount(p.above(x)), below_count(p, x)}; };
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  std::function<bool(int)> extend = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (taken[static_cast<std::size_t>(y)] || signature(a, x) != signature(b, y)) continue;
      bool fits = true;
      for (int z = 0; z < x && fits; ++z) {
        const int w = image[static_cast<std::size_t>(z)];
        fits = a.less(z, x) == b.less(w, y) && a.less(x, z) == b.less(y, w);
      }
      if (!fits) continue;
      image[static_cast<std::size_t>(x)] = y;
      taken[static_cast<std::size_t>(y)] = true;
      if (extend(x + 1)) return true;
      taken[static_cast<std::size_t>(y)] = false;
    }
    return false;
  };
  return extend(0);
}

Grading is_graded(const Poset& poset) {
  const int n = poset.size();
  Grading g;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return std::popcount(poset.above(x)) > std::popcount(poset.above(y)); });
  g.ranks.assign(static_cast<std::size_t>(n), 1);
  for (int x : order)
    for (auto [a, b] : poset.covers())
      if (b == x) g.ranks[static_cast<std::size_t>(x)] = std::max(g.ranks[static_cast<std::size_t>(x)], g.ranks[static_cast<std::size_t>(a)] + 1);
  g.graded = true;
  for (auto [a, b] : poset.covers())
    if (g.ranks[static_cast<std::size_t>(b)] != g.ranks[static_cast<std::size_t>(a)] + 1) g.graded = false;
  std::set<int> top_ranks;
  for (int x = 0; x < n; ++x)
    if (poset.upper_covers(x) == 0) top_ranks.insert(g.ranks[static_cast<std::size_t>(x)]);
  if (top_ranks.size() > 1) g.graded = false;
  g.rank_count = top_ranks.empty() ? 0 : *top_ranks.rbegin();
  if (!g.graded) {
    g.ranks.clear();
    g.rank_count = 0;
  }
  return g;
}

std::vector<std::uint64_t> filters(const Poset& poset) {
  const int n = poset.size();
  std::set<std::uint64_t> found;
  std::function<void(int, std::uint64_t, std::uint64_t)> grow = [&](int next, std::uint64_t antichain,
                                                                      std::uint64_t closure) {
    found.insert(closure);
    for (int x = next; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      bool free = true;
      for (int y = 0; y < n && free; ++y)
        if ((antichain >> y) & 1U) free = !poset.less(x, y) && !poset.less(y, x);
      if (free) grow(x + 1, antichain | bit, closure | bit | poset.above(x));
    }
  };
  grow(0, 0, 0);
  std::vector<std::uint64_t> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

std::vector<std::int64_t> characteristic(const Poset& poset, std::uint64_t filter) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(poset.size()), 0);
  for (int x = 0; x < poset.size(); ++x) v[static_cast<std::size_t>(x)] = (filter >> x) & 1U;
  return v;
}

IntMatrix order_polytope_vertices(const Poset& poset) {
  IntMatrix out;
  for (auto f : filters(poset)) out.push_back(characteristic(poset, f));
  return out;
}

std::int64_t count_linear_extensions(const Poset& poset) {
  std::unordered_map<std::uint64_t, std::int64_t> ways;
  for (auto f : filters(poset)) {
    if (f == 0) {
      ways[f] = 1;
      continue;
    }
    std::int64_t total = 0;
    for (int x = 0; x < poset.size(); ++x) {
      if (!((f >> x) & 1U)) continue;
      const std::uint64_t rest = f & ~(std::uint64_t{1} << x);
      bool minimal = true;
      for (int y = 0; y < poset.size() && minimal; ++y)
        if (((rest >> y) & 1U) && poset.less(y, x)) minimal = false;
      if (minimal) total += ways.at(rest);
    }
    ways[f] = total;
  }
  return ways.at(poset.full_mask());
}

std::int64_t count_order_points(const Poset& poset, int t, bool interior) {
  if (t < 0) throw InvalidInput("negative dilate");
  if (t == 0) return interior ? (poset.size() == 0 ? 1 : 0) : 1;
  // G_k = {f >= k} for k = 1..t is a descending chain of filters.
  const auto fs = filters(poset);
  const std::size_t nf = fs.size();
  std::vector<std::uint64_t> raised(nf, 0);
  for (std::size_t i = 0; i < nf; ++i)
    for (int x = 0; x < poset.size(); ++x)
      if ((fs[i] >> x) & 1U) raised[i] |= poset.upper_covers(x);
  std::vector<std::vector<std::size_t>> step(nf);
  for (std::size_t a = 0; a < nf; ++a)
    for (std::size_t b = 0; b < nf; ++b) {
      const bool nested = (fs[b] & ~fs[a]) == 0;
      const bool strict = (raised[a] & ~fs[b]) == 0;
      if (nested && (!interior || strict)) step[a].push_back(b);
    }
  std::vector<std::int64_t> ways(nf, 0);
  for (std::size_t i = 0; i < nf; ++i)
    if (!interior || fs[i] == poset.full_mask()) ways[i] = 1;
  for (int k = 1; k < t; ++k) {
    std::vector<std::int64_t> next(nf, 0);
    for (std::size_t a = 0; a < nf; ++a)
      if (ways[a] != 0)
        for (auto b : step[a]) next[b] += ways[a];
    ways = std::move(next);
  }
  if (!interior) return std::accumulate(ways.begin(), ways.end(), std::int64_t{0});
  for (std::size_t i = 0; i < nf; ++i)
    if (fs[i] == 0) return ways[i];
  return 0;
}

HStarData order_hstar(const Poset& poset) {
  return hstar_from_counter(poset.size(), [&](int t, bool interior) { return count_order_points(poset, t, interior); });
}

Carrier order_carrier(const Poset& poset) {
  Carrier c;
  const auto n = static_cast<std::size_t>(poset.size());
  c.dimension = poset.size();
  for (std::size_t x = 0; x < n; ++x) {
    Halfspace lower{IntVector(n, 0), 0};
    lower.coeffs[x] = -1;
    Halfspace upper{IntVector(n, 0), 1};
    upper.coeffs[x] = 1;
    c.halfspaces.push_back(std::move(lower));
    c.halfspaces.push_back(std::move(upper));
  }
  for (auto [a, b] : poset.covers()) {
    Halfspace h{IntVector(n, 0), 0};
    h.coeffs[static_cast<std::size_t>(a)] = 1;
    h.coeffs[static_cast<std::size_t>(b)] = -1;
    c.halfspaces.push_back(std::move(h));
  }
  c.normalized_volume = count_linear_extensions(poset);
  return c;
}

std::string filter_name(const Poset& poset, std::uint64_t filter) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < poset.size(); ++x)
    if ((filter >> x) & 1U) {
      if (!first) out += ",";
      out += poset.elements()[static_cast<std::size_t>(x)];
      first = false;
    }
  return out + "}";
}

TruncatedDual truncated_dual(const Dag& dag, const PlanarEmbedding& embedding) {
  const auto fs = trace_faces(dag, embedding);
  std::vector<int> element(static_cast<std::size_t>(fs.face_count), -1);
  std::vector<std::string> names;
  for (int f = 0; f < fs.face_count; ++f)
    if (f != fs.outer) {
      element[static_cast<std::size_t>(f)] = static_cast<int>(names.size());
      names.push_back("f" + std::to_string(names.size() + 1));
    }
  TruncatedDual dual;
  std::set<std::pair<int, int>> relations;
  for (std::size_t e = 0; e < dag.edge_count(); ++e) {
    const int lo = fs.below[e] == fs.outer ? TruncatedDual::bottom : element[static_cast<std::size_t>(fs.below[e])];
    const int hi = fs.above[e] == fs.outer ? TruncatedDual::top : element[static_cast<std::size_t>(fs.above[e])];
    dual.below.push_back(lo);
    dual.above.push_back(hi);
    if (lo >= 0 && hi >= 0) relations.emplace(lo, hi);
  }
  dual.poset = Poset(std::move(names), std::vector<std::pair<int, int>>(relations.begin(), relations.end()));
  return dual;
}

DualDag poset_to_dag(const Poset& poset, const HasseEmbedding& embedding) {
  const int m = poset.size();
  const int bottom = m;
  const int top = m + 1;
  std::vector<std::pair<int, int>> ends(poset.covers().begin(), poset.covers().end());
  for (int x = 0; x < m; ++x) {
    bool minimal = true;
    for (int y = 0; y < m; ++y) minimal = minimal && !poset.less(y, x);
    if (minimal) ends.emplace_back(bottom, x);
  }
  for (int x = 0; x < m; ++x)
    if (poset.above(x) == 0) ends.emplace_back(x, top);
  if (m == 0) ends.emplace_back(bottom, top);

  std::map<std::pair<int, int>, std::size_t> edge_of;
  for (std::size_t e = 0; e < ends.size(); ++e) {
    edge_of[ends[e]] = e;
    edge_of[{ends[e].second, ends[e].first}] = e;
  }
  if (embedding.rotations.size() != static_cast<std::size_t>(m + 2))
    throw InvalidInput("Hasse embedding needs one rotation per element, bottom and top");
  std::vector<std::vector<std::size_t>> rotations(static_cast<std::size_t>(m + 2));
  for (int v = 0; v < m + 2; ++v) {
    std::vector<std::size_t> incident;
    for (std::size_t e = 0; e < ends.size(); ++e)
      if (ends[e].first == v || ends[e].second == v) incident.push_back(e);
    for (int w : embedding.rotations[static_cast<std::size_t>(v)]) {
      const auto it = edge_of.find({v, w});
      if (it == edge_of.end())
        throw InvalidInput("rotation at " + element_label(poset, v) + " lists a non-neighbour");
      rotations[static_cast<std::size_t>(v)].push_back(it->second);
    }
    check_rotation_covers(rotations[static_cast<std::size_t>(v)], incident, element_label(poset, v));
  }
  const auto traced = trace(m + 2, ends, rotations);
  const int face_count = static_cast<int>(traced.orbits.size());
  if ((m + 2) - static_cast<int>(ends.size()) + face_count != 2)
    throw InvalidInput("non-planar rotation: Euler characteristic check failed");
  const std::size_t start = 2 * rotations[static_cast<std::size_t>(bottom)].back();
  const int outer = traced.dart_face[start];
  if (traced.dart_face[2 * rotations[static_cast<std::size_t>(top)].back() + 1] != outer)
    throw InvalidInput("non-planar rotation: bottom and top do not both face the outer region");

  // Dual vertices: bounded faces in topological order of the dual edges.
  std::vector<std::set<int>> succ(static_cast<std::size_t>(face_count));
  std::vector<int> indegree(static_cast<std::size_t>(face_count), 0);
  for (std::size_t e = 0; e < ends.size(); ++e) {
    const int tail = traced.dart_face[2 * e];
    const int head = traced.dart_face[2 * e + 1];
    if (tail == outer || head == outer) continue;
    if (tail == head) throw InvalidInput("non-planar rotation: a cover has one bounded face on both sides");
    if (succ[static_cast<std::size_t>(tail)].insert(head).second) ++indegree[static_cast<std::size_t>(head)];
  }
  std::set<int> ready;
  for (int f = 0; f < face_count; ++f)
    if (f != outer && indegree[static_cast<std::size_t>(f)] == 0) ready.insert(f);
  std::vector<int> vertex_of(static_cast<std::size_t>(face_count), -1);
  int next_vertex = 1;
  while (!ready.empty()) {
    const int f = *ready.begin();
    ready.erase(ready.begin());
    vertex_of[static_cast<std::size_t>(f)] = next_vertex++;
    for (int g : succ[static_cast<std::size_t>(f)])
      if (--indegree[static_cast<std::size_t>(g)] == 0) ready.insert(g);
  }
  const int inner = face_count - 1;
  if (next_vertex != inner + 1) throw InvalidInput("non-planar rotation: dual orientation has a cycle");
  const int sink = inner + 1;

  std::vector<Edge> edges;
  for (std::size_t e = 0; e < ends.size(); ++e) {
    const int tail = traced.dart_face[2 * e];
    const int head = traced.dart_face[2 * e + 1];
    edges.push_back({element_label(poset, ends[e].first) + "<" + element_label(poset, ends[e].second),
                     tail == outer ? 0 : vertex_of[static_cast<std::size_t>(tail)],
                     head == outer ? sink : vertex_of[static_cast<std::size_t>(head)]});
  }
  DualDag out{Dag(inner, std::move(edges)), {}};
  out.embedding.rotations.resize(static_cast<std::size_t>(inner + 2));
  for (int f = 0; f < face_count; ++f) {
    if (f == outer) continue;
    auto& rot = out.embedding.rotations[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(f)])];
    for (int d : traced.orbits[static_cast<std::size_t>(f)]) rot.push_back(static_cast<std::size_t>(d) / 2);
  }
  const auto& orbit = traced.orbits[static_cast<std::size_t>(outer)];
  const auto first = std::find(orbit.begin(), orbit.end(), static_cast<int>(start));
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    const int d = orbit[(static_cast<std::size_t>(first - orbit.begin()) + k) % orbit.size()];
    auto& rot = out.embedding.rotations[static_cast<std::size_t>(d % 2 == 0 ? 0 : sink)];
    rot.push_back(static_cast<std::size_t>(d) / 2);
  }
  if (!validate(out.dag).ok) throw InvalidInput("dual of the Hasse diagram is not a valid DAG");
  return out;
}

std::vector<std::int64_t> flow_to_order(const Dag& dag, const TruncatedDual& dual, const IntVector& flow) {
  if (flow.size() != dag.edge_count() || dual.below.size() != dag.edge_count())
    throw InvalidInput("flow and dual do not match the DAG");
  const int m = dual.poset.size();
  auto slot = [&](int x) -> std::size_t {
    if (x == TruncatedDual::bottom) return static_cast<std::size_t>(m);
    if (x == TruncatedDual::top) return static_cast<std::size_t>(m + 1);
    return static_cast<std::size_t>(x);
  };
  std::vector<std::optional<std::int64_t>> value(static_cast<std::size_t>(m + 2));
  value[slot(TruncatedDual::bottom)] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < dag.edge_count(); ++e) {
      auto& lo = value[slot(dual.below[e])];
      auto& hi = value[slot(dual.above[e])];
      if (lo && !hi) {
        hi = *lo + flow[e];
        changed = true;
      } else if (hi && !lo) {
        lo = *hi - flow[e];
        changed = true;
      }
    }
  }
  for (std::size_t e = 0; e < dag.edge_count(); ++e) {
    const auto& lo = value[slot(dual.below[e])];
    const auto& hi = value[slot(dual.above[e])];
    if (!lo || !hi) throw ConsistencyError("dual poset is disconnected from the bottom element");
    if (*hi - *lo != flow[e]) throw ConsistencyError("chain-dependent sum along the dual poset");
  }
  if (*value[slot(TruncatedDual::top)] != flow_strength(dag, flow))
    throw ConsistencyError("value at the top element differs from the flow strength");
  std::vector<std::int64_t> out;
  for (int x = 0; x < m; ++x) out.push_back(*value[static_cast<std::size_t>(x)]);
  return out;
}

IntVector order_to_flow(const TruncatedDual& dual, const std::vector<std::int64_t>& f, std::int64_t top_value) {
  if (f.size() != static_cast<std::size_t>(dual.poset.size())) throw InvalidInput("order function has the wrong length");
  auto at = [&](int x) -> std::int64_t {
    if (x == TruncatedDual::bottom) return 0;
    if (x == TruncatedDual::top) return top_value;
    return f[static_cast<std::size_t>(x)];
  };
  IntVector flow;
  for (std::size_t e = 0; e < dual.below.size(); ++e) flow.push_back(at(dual.above[e]) - at(dual.below[e]));
  return flow;
}

Triangulation canonical_triangulation(const Poset& poset) {
  const auto fs = filters(poset);
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < fs.size(); ++i) index[fs[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> faces;
  std::vector<int> chain{index.at(0)};
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t f) {
    if (f == poset.full_mask()) {
      faces.push_back(chain);
      return;
    }
    for (int x = 0; x < poset.size(); ++x) {
      if ((f >> x) & 1U) continue;
      if ((poset.above(x) & ~f) != 0) continue;
      const std::uint64_t g = f | (std::uint64_t{1} << x);
      chain.push_back(index.at(g));
      extend(g);
      chain.pop_back();
    }
  };
  extend(0);
  Triangulation tri;
  tri.complex = SimplicialComplex::from_faces(fs.size(), std::move(faces));
  tri.points = order_polytope_vertices(poset);
  for (auto f : fs) tri.labels.push_back(filter_name(poset, f));
  return tri;
}

namespace {

// Sorts by size, checks nesting and upward closure.
void normalize_chain(const Poset& poset, std::vector<std::uint64_t>& chain) {
  std::sort(chain.begin(), chain.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (int x = 0; x < poset.size(); ++x)
      if (((chain[i] >> x) & 1U) && (poset.above(x) & ~chain[i]) != 0)
        throw InvalidInput("chain member is not a filter");
    if (i > 0 && ((chain[i - 1] & ~chain[i]) != 0 || chain[i - 1] == chain[i]))
      throw InvalidInput("filters do not form a strictly nested chain");
  }
}

std::vector<std::int64_t> chain_sum(const Poset& poset, const std::vector<std::uint64_t>& chain) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(poset.size()), 0);
  for (auto filter : chain)
    for (int x = 0; x < poset.size(); ++x) f[static_cast<std::size_t>(x)] += (filter >> x) & 1U;
  return f;
}

}  // namespace

bool is_equatorial_chain(const Poset& poset, const Grading& grading, std::vector<std::uint64_t> chain) {
  if (!grading.graded) throw InvalidInput("equatorial chains need a graded poset");
  normalize_chain(poset, chain);
  for (auto f : chain)
    if (f == 0) throw InvalidInput("equatorial chains consist of nonempty filters");
  const std::size_t t = chain.size();
  const int r = grading.rank_count;
  auto rank = [&](int x) { return grading.ranks[static_cast<std::size_t>(x)]; };

  // Jump J_i = F_i - F_{i-1} with F_0 empty and F_{t+1} = P; chains are
  // stored smallest first, so an element's jump is its first containing filter.
  std::vector<std::size_t> jump(static_cast<std::size_t>(poset.size()), t + 1);
  for (std::size_t i = t; i-- > 0;)
    for (int x = 0; x < poset.size(); ++x)
      if ((chain[i] >> x) & 1U) jump[static_cast<std::size_t>(x)] = i + 1;
  bool by_jumps = t == 0 || chain.back() != poset.full_mask();
  for (int j = 2; j <= r && by_jumps; ++j) {
    bool found = false;
    for (auto [a, b] : poset.covers())
      found = found || (rank(a) == j - 1 && rank(b) == j && jump[static_cast<std::size_t>(a)] == jump[static_cast<std::size_t>(b)]);
    by_jumps = found;
  }

  const auto f = chain_sum(poset, chain);
  bool by_sum = !f.empty() && *std::min_element(f.begin(), f.end()) == 0;
  for (int j = 2; j <= r && by_sum; ++j) {
    bool found = false;
    for (auto [a, b] : poset.covers())
      found = found || (rank(a) == j - 1 && rank(b) == j && f[static_cast<std::size_t>(a)] == f[static_cast<std::size_t>(b)]);
    by_sum = found;
  }
  if (poset.size() == 0) by_jumps = by_sum;
  if (by_jumps != by_sum) throw ConsistencyError("jump and characteristic-sum equatorial tests disagree");
  return by_sum;
}

bool is_rank_constant(const Poset& poset, const Grading& grading, std::vector<std::uint64_t> chain) {
  if (!grading.graded) throw InvalidInput("rank-constant chains need a graded poset");
  normalize_chain(poset, chain);
  const auto f = chain_sum(poset, chain);
  std::map<int, std::int64_t> level;
  for (int x = 0; x < poset.size(); ++x) {
    const auto [it, fresh] = level.emplace(grading.ranks[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(x)]);
    if (!fresh && it->second != f[static_cast<std::size_t>(x)]) return false;
  }
  return true;
}

std::vector<std::uint64_t> rank_constant_filters(const Poset& poset, const Grading& grading) {
  if (!grading.graded) throw InvalidInput("rank-constant filters need a graded poset");
  std::vector<std::uint64_t> out;
  for (int j = 0; j <= grading.rank_count; ++j) {
    std::uint64_t f = 0;
    for (int x = 0; x < poset.size(); ++x)
      if (grading.ranks[static_cast<std::size_t>(x)] > j) f |= std::uint64_t{1} << x;
    out.push_back(f);
  }
  return out;
}

Triangulation rw_equatorial_triangulation(const Poset& poset) {
  const auto grading = is_graded(poset);
  if (!grading.graded) throw InvalidInput("poset is not graded");
  const auto fs = filters(poset);
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < fs.size(); ++i) index[fs[i]] = static_cast<int>(i);
  std::vector<int> sigma;
  for (auto f : rank_constant_filters(poset, grading)) sigma.push_back(index.at(f));

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i] != 0 && fs[i] != poset.full_mask()) candidates.push_back(i);
  std::vector<std::vector<int>> faces;
  std::vector<std::uint64_t> chain;
  std::vector<int> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    auto face = chosen;
    face.insert(face.end(), sigma.begin(), sigma.end());
    faces.push_back(std::move(face));
    for (std::size_t k = from; k < candidates.size(); ++k) {
      const auto f = fs[candidates[k]];
      if (!chain.empty() && ((chain.back() & ~f) != 0 || chain.back() == f)) continue;
      chain.push_back(f);
      if (is_equatorial_chain(poset, grading, chain)) {
        chosen.push_back(static_cast<int>(candidates[k]));
        grow(k + 1);
        chosen.pop_back();
      }
      chain.pop_back();
    }
  };
  grow(0);
  Triangulation tri;
  tri.complex = SimplicialComplex::from_faces(fs.size(), std::move(faces));
  tri.points = order_polytope_vertices(poset);
  for (auto f : fs) tri.labels.push_back(filter_name(poset, f));
  return tri;
}

EquivalenceReport verify_equivalence(const Dag& dag, const PlanarEmbedding& embedding, int max_dilate) {
  EquivalenceReport rep;
  const auto dual = truncated_dual(dag, embedding);
  const auto& poset = dual.poset;
  const auto grading = is_graded(poset);
  rep.graded = grading.graded;
  if (!rep.graded) {
    rep.mismatches.push_back("dual poset is not graded");
    return rep;
  }
  rep.topmost = topmost_decomposition(dag, embedding);
  rep.topmost_framing_is_planar = decomposition_framing(dag, rep.topmost) == planar_framing(dag, embedding);
  if (!rep.topmost_framing_is_planar) rep.mismatches.push_back("topmost decomposition framing differs from the planar framing");

  rep.lattice_counts_agree = true;
  for (int t = 1; t <= max_dilate; ++t) {
    const auto flows = count_lattice_points(dag, t, false);
    const auto orders = count_order_points(poset, t, false);
    if (flows != orders) {
      rep.lattice_counts_agree = false;
      rep.mismatches.push_back("lattice counts differ at t=" + std::to_string(t) + ": " + std::to_string(flows) +
                               " flows vs " + std::to_string(orders) + " order points");
    }
  }

  const auto routes = enumerate_routes(dag);
  std::map<IntVector, int> route_of;
  for (std::size_t r = 0; r < routes.size(); ++r) route_of[indicator_vector(dag, routes[r])] = static_cast<int>(r);
  const auto fs = filters(poset);
  std::vector<int> image;
  std::set<int> hit;
  for (auto f : fs) {
    const auto flow = order_to_flow(dual, characteristic(poset, f));
    const auto it = route_of.find(flow);
    if (it == route_of.end()) {
      rep.mismatches.push_back("filter " + filter_name(poset, f) + " does not map to a route");
      return rep;
    }
    image.push_back(it->second);
    hit.insert(it->second);
    if (flow_to_order(dag, dual, flow) != characteristic(poset, f))
      rep.mismatches.push_back("round trip fails on filter " + filter_name(poset, f));
  }
  if (hit.size() != routes.size() || image.size() != routes.size()) {
    rep.mismatches.push_back("filters and routes are not in bijection");
    return rep;
  }
  auto translate = [&](const SimplicialComplex& c) {
    std::vector<std::vector<int>> faces;
    for (const auto& face : c.facets) {
      std::vector<int> mapped;
      for (int i : face) mapped.push_back(image[static_cast<std::size_t>(i)]);
      std::sort(mapped.begin(), mapped.end());
      faces.push_back(std::move(mapped));
    }
    std::sort(faces.begin(), faces.end());
    return faces;
  };

  const auto canonical = canonical_triangulation(poset);
  const auto planar_dkk = max_cliques(dag, planar_framing(dag, embedding));
  rep.canonical_simplices = canonical.complex.facets.size();
  rep.canonical_matches_dkk = translate(canonical.complex) == planar_dkk;
  if (!rep.canonical_matches_dkk) rep.mismatches.push_back("canonical triangulation differs from the planar-framing DKK triangulation");

  std::set<int> sigma_routes;
  for (auto f : rank_constant_filters(poset, grading))
    sigma_routes.insert(image[static_cast<std::size_t>(std::find(fs.begin(), fs.end(), f) - fs.begin())]);
  const auto apex = decomposition_indices(dag, rep.topmost);
  rep.rank_constant_is_route_simplex = sigma_routes == std::set<int>(apex.begin(), apex.end());
  if (!rep.rank_constant_is_route_simplex) rep.mismatches.push_back("rank-constant simplex does not map to the route simplex");

  const auto rw = rw_equatorial_triangulation(poset);
  const auto eft = equatorial_flow_triangulation(dag, rep.topmost);
  rep.rw_simplices = rw.complex.facets.size();
  rep.equatorial_simplices = eft.complex.facets.size();
  const auto rw_mapped = translate(rw.complex);
  rep.rw_matches_equatorial = rw_mapped == eft.complex.facets;
  if (!rep.rw_matches_equatorial) {
    for (const auto& face : rw_mapped)
      if (!std::binary_search(eft.complex.facets.begin(), eft.complex.facets.end(), face)) {
        std::string names;
        for (int r : face) names += (names.empty() ? "" : " ") + route_name(dag, routes[static_cast<std::size_t>(r)]);
        rep.mismatches.push_back("equatorial chain simplex {" + names + "} is not an equatorial flow simplex");
      }
    for (const auto& face : eft.complex.facets)
      if (!std::binary_search(rw_mapped.begin(), rw_mapped.end(), face)) {
        std::string names;
        for (int r : face) names += (names.empty() ? "" : " ") + route_name(dag, routes[static_cast<std::size_t>(r)]);
        rep.mismatches.push_back("equatorial flow simplex {" + names + "} has no equatorial chain preimage");
      }
  }
  rep.ok = rep.mismatches.empty();
  return rep;
}

}  // namespace flowtri
