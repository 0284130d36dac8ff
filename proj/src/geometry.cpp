#include "flowtri/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "flowtri/errors.hpp"

namespace flowtri {

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count,
                                                std::vector<std::vector<int>> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex c;
  c.vertex_count = vertex_count;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < faces.size() && !contained; ++j) {
      if (i == j || faces[j].size() <= faces[i].size()) continue;
      contained = std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end());
    }
    if (!contained) c.facets.push_back(faces[i]);
  }
  return c;
}

int SimplicialComplex::dimension() const {
  std::size_t m = 0;
  for (const auto& f : facets) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets.begin(), facets.end(),
                     [&](const auto& f) { return f.size() == facets.front().size(); });
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& complex) {
  if (complex.facets.empty()) return {};
  std::set<std::vector<int>> faces;
  for (const auto& facet : complex.facets) {
    const std::size_t k = facet.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1U) face.push_back(facet[i]);
      faces.insert(std::move(face));
    }
  }
  std::vector<std::int64_t> f(static_cast<std::size_t>(complex.dimension() + 2), 0);
  for (const auto& face : faces) ++f[face.size()];
  return f;
}

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f) {
  if (f.empty()) return {};
  const int big_d = static_cast<int>(f.size()) - 1;
  std::vector<std::int64_t> h(f.size(), 0);
  for (int j = 0; j <= big_d; ++j) {
    std::int64_t sum = 0;
    for (int i = 0; i <= j; ++i) {
      const std::int64_t sign = ((j - i) % 2 == 0) ? 1 : -1;
      sum += f[static_cast<std::size_t>(i)] * sign * binomial(big_d - i, j - i);
    }
    h[static_cast<std::size_t>(j)] = sum;
  }
  return h;
}

std::vector<std::int64_t> h_vector(const SimplicialComplex& complex) { return h_from_f(f_vector(complex)); }

std::vector<std::int64_t> trim_trailing_zeros(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

bool is_palindromic(const std::vector<std::int64_t>& v) {
  const auto t = trim_trailing_zeros(v);
  return std::equal(t.begin(), t.end(), t.rbegin());
}

std::int64_t euler_characteristic(const SimplicialComplex& complex) {
  const auto f = f_vector(complex);
  std::int64_t chi = 0;
  for (std::size_t k = 1; k < f.size(); ++k) chi += ((k - 1) % 2 == 0 ? 1 : -1) * f[k];
  return chi;
}

bool is_closed_pseudomanifold(const SimplicialComplex& complex) {
  if (complex.facets.empty() || !complex.is_pure()) return false;
  std::map<std::vector<int>, int> ridges;
  for (const auto& facet : complex.facets) {
    for (std::size_t drop = 0; drop < facet.size(); ++drop) {
      std::vector<int> ridge;
      for (std::size_t i = 0; i < facet.size(); ++i)
        if (i != drop) ridge.push_back(facet[i]);
      ++ridges[ridge];
    }
  }
  return std::all_of(ridges.begin(), ridges.end(), [](const auto& kv) { return kv.second == 2; });
}

BigInt normalized_volume(const IntMatrix& vertices) {
  const auto diffs = difference_rows(vertices);
  const auto divisors = elementary_divisors(diffs);
  if (divisors.size() + 1 != vertices.size())
    throw ConsistencyError("simplex vertices are affinely dependent");
  BigInt v = 1;
  for (const auto& d : divisors) v *= d;
  return v;
}

bool is_unimodular_simplex(const IntMatrix& vertices) { return normalized_volume(vertices) == 1; }

namespace {

IntMatrix facet_points(const Triangulation& tri, const std::vector<int>& facet) {
  IntMatrix pts;
  for (int v : facet) pts.push_back(tri.points.at(static_cast<std::size_t>(v)));
  return pts;
}

std::string face_string(const Triangulation& tri, const std::vector<int>& face) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) os << ',';
    const auto v = static_cast<std::size_t>(face[i]);
    os << (v < tri.labels.size() ? tri.labels[v] : std::to_string(v));
  }
  os << '}';
  return os.str();
}

}  // namespace

TriangulationReport verify_triangulation(const Carrier& carrier, const Triangulation& tri) {
  TriangulationReport report;
  report.expected_volume = carrier.normalized_volume;
  const auto d = static_cast<std::size_t>(carrier.dimension);

  report.pure = true;
  report.unimodular = true;
  BigInt total = 0;
  for (const auto& facet : tri.complex.facets) {
    const auto pts = facet_points(tri, facet);
    if (facet.size() != d + 1 || affine_rank(pts) != d) {
      report.pure = false;
      report.issues.push_back("simplex " + face_string(tri, facet) + " is not full-dimensional");
      continue;
    }
    const BigInt vol = normalized_volume(pts);
    if (vol != 1) {
      report.unimodular = false;
      report.issues.push_back("simplex " + face_string(tri, facet) + " has normalized volume " + vol.str());
    }
    total += vol;
  }
  report.volume_sum = static_cast<std::int64_t>(total);
  report.volume = report.pure && total == carrier.normalized_volume;
  if (!report.volume)
    report.issues.push_back("normalized volumes sum to " + total.str() + ", expected " +
                            std::to_string(carrier.normalized_volume));

  // Ridge matching. A ridge on the boundary of the carrier must lie in exactly
  // one simplex; an interior ridge in exactly two, with the two apexes on
  // opposite sides of its affine hull. Together with the volume sum this makes
  // every pairwise intersection a common face.
  report.common_faces = report.pure;
  if (report.pure) {
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>> ridges;
    for (std::size_t s = 0; s < tri.complex.facets.size(); ++s) {
      const auto& facet = tri.complex.facets[s];
      for (std::size_t drop = 0; drop < facet.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t i = 0; i < facet.size(); ++i)
          if (i != drop) ridge.push_back(facet[i]);
        ridges[ridge].push_back({s, facet[drop]});
      }
    }
    for (const auto& [ridge, owners] : ridges) {
      bool on_boundary = false;
      for (const auto& h : carrier.halfspaces) {
        bool tight = true;
        for (int v : ridge)
          if (dot(h.coeffs, tri.points.at(static_cast<std::size_t>(v))) != h.rhs) {
            tight = false;
            break;
          }
        if (tight) {
          on_boundary = true;
          break;
        }
      }
      const std::size_t want = on_boundary ? 1 : 2;
      if (owners.size() != want) {
        report.common_faces = false;
        report.issues.push_back("ridge " + face_string(tri, ridge) + " lies in " +
                                std::to_string(owners.size()) + " simplices, expected " +
                                std::to_string(want));
        continue;
      }
      if (on_boundary) continue;
      // Apex of the second simplex in affine coordinates of the first: the
      // coefficient on the first apex is negative iff they lie on opposite sides.
      IntMatrix pts = facet_points(tri, tri.complex.facets[owners[0].first]);
      const auto apex_pos = static_cast<std::size_t>(
          std::find(tri.complex.facets[owners[0].first].begin(), tri.complex.facets[owners[0].first].end(),
                    owners[0].second) -
          tri.complex.facets[owners[0].first].begin());
      const auto lambda = affine_coordinates(pts, tri.points.at(static_cast<std::size_t>(owners[1].second)));
      if (!lambda || (*lambda)[apex_pos] >= 0) {
        report.common_faces = false;
        report.issues.push_back("simplices sharing ridge " + face_string(tri, ridge) + " overlap");
      }
    }
  }

  std::set<std::vector<int>> distinct(tri.complex.facets.begin(), tri.complex.facets.end());
  if (distinct.size() != tri.complex.facets.size()) {
    report.common_faces = false;
    report.issues.push_back("duplicate simplices");
  }
  report.ok = report.pure && report.common_faces && report.volume;
  return report;
}

std::int64_t count_lattice_points(const Dag& dag, int t, bool interior) {
  if (t < 0) return 0;
  const std::int64_t lo = interior ? 1 : 0;
  std::vector<std::int64_t> inflow(static_cast<std::size_t>(dag.vertex_count()), 0);
  inflow[0] = t;

  // Vertices are processed in order; every in-edge of v has a smaller tail, so
  // the inflow of v is final when v is reached and must be split over out(v).
  auto visit = [&](auto&& self, int v) -> std::int64_t {
    if (v == dag.sink()) return 1;
    const auto outs = dag.out_edges(v);
    const std::int64_t amount = inflow[static_cast<std::size_t>(v)];
    if (outs.empty()) return amount == 0 ? self(self, v + 1) : 0;
    std::int64_t total = 0;
    auto split = [&](auto&& rec, std::size_t i, std::int64_t left) -> void {
      const auto head = static_cast<std::size_t>(dag.edge(outs[i]).head);
      if (i + 1 == outs.size()) {
        if (left < lo) return;
        inflow[head] += left;
        total += self(self, v + 1);
        inflow[head] -= left;
        return;
      }
      const std::int64_t reserve = lo * static_cast<std::int64_t>(outs.size() - i - 1);
      for (std::int64_t x = lo; x + reserve <= left; ++x) {
        inflow[head] += x;
        rec(rec, i + 1, left - x);
        inflow[head] -= x;
      }
    };
    split(split, 0, amount);
    return total;
  };
  return visit(visit, dag.source());
}

HStarData hstar_from_counter(int d, const std::function<std::int64_t(int, bool)>& count) {
  HStarData data;
  for (int t = 0; t <= d + 1; ++t) data.counts.push_back(t == 0 ? 1 : count(t, false));
  const int n = d + 1;
  for (int j = 0; j <= n; ++j) {
    std::int64_t h = 0;
    for (int i = 0; i <= j; ++i)
      h += (i % 2 == 0 ? 1 : -1) * binomial(n, i) * data.counts[static_cast<std::size_t>(j - i)];
    data.h_star.push_back(h);
  }
  // L is a polynomial of degree d, so the (d+1)-st coefficient must vanish.
  if (data.h_star.back() != 0) throw ConsistencyError("lattice counts are not a degree-d polynomial");
  data.h_star.pop_back();
  if (data.h_star.front() != 1) throw ConsistencyError("h*_0 != 1");
  for (auto h : data.h_star)
    if (h < 0) throw ConsistencyError("negative h* coefficient");

  data.degree = 0;
  for (int i = 0; i <= d; ++i)
    if (data.h_star[static_cast<std::size_t>(i)] != 0) data.degree = i;
  data.codegree = d + 1 - data.degree;

  int first_interior = 0;
  for (int t = 1; t <= d + 1; ++t)
    if (count(t, true) > 0) {
      first_interior = t;
      break;
    }
  if (first_interior != data.codegree)
    throw ConsistencyError("codegree " + std::to_string(data.codegree) +
                           " disagrees with first interior dilate " + std::to_string(first_interior));
  return data;
}

HStarData ehrhart_hstar(const Dag& dag) {
  if (!validate(dag).ok) throw InvalidInput("invalid DAG");
  if (has_idle_edges(dag)) throw InvalidInput("ehrhart_hstar requires a DAG without idle edges");
  return hstar_from_counter(dimension(dag),
                            [&](int t, bool interior) { return count_lattice_points(dag, t, interior); });
}

bool is_gorenstein(const Dag& dag) {
  const bool balanced = degree_equality(dag);
  if (dag.edge_count() <= 12) {
    const auto h = ehrhart_hstar(dag);
    if (is_palindromic(h.h_star) != balanced)
      throw ConsistencyError("degree equality and h* palindromicity disagree");
  }
  return balanced;
}

Carrier flow_carrier(const Dag& dag) {
  Carrier c;
  c.dimension = dimension(dag);
  for (std::size_t e = 0; e < dag.edge_count(); ++e) {
    Halfspace h;
    h.coeffs.assign(dag.edge_count(), 0);
    h.coeffs[e] = -1;
    c.halfspaces.push_back(std::move(h));
  }
  std::int64_t vol = 0;
  for (auto h : ehrhart_hstar(dag).h_star) vol += h;
  c.normalized_volume = vol;
  return c;
}

}  // namespace flowtri
