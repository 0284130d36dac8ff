// Acceptance sweep: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "flowtri/catalog.hpp"
#include "flowtri/commands.hpp"
#include "flowtri/dkk.hpp"
#include "flowtri/equatorial.hpp"
#include "flowtri/errors.hpp"
#include "flowtri/geometry.hpp"
#include "flowtri/planar.hpp"
#include "flowtri/quotient.hpp"
#include "flowtri/random_dag.hpp"
#include "oracles.hpp"

using namespace flowtri;
using Counts = std::vector<std::int64_t>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string show(const Counts& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string read(const std::string& name) {
  std::ifstream in(std::string(FLOWTRI_DATA) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome decomposition_iff_balanced() {
  Outcome o;
  std::vector<Dag> graphs;
  for (int k = 1; k <= 4; ++k) graphs.push_back(catalog::parallel(k));
  for (const auto& g : {catalog::d1(), catalog::d2(), catalog::d3(), catalog::skew_pair()}) graphs.push_back(g);
  std::mt19937_64 rng(20261017);
  for (int k = 0; k < 240; ++k) graphs.push_back(random_dag(rng, 8));
  int discrepancies = 0;
  int balanced = 0;
  for (const auto& g : graphs) {
    bool decomposed = false;
    try {
      decomposed = is_route_decomposition(g, route_decomposition(g));
    } catch (const NotGorenstein&) {
    }
    const bool oracle_says = oracle::has_route_partition(g);
    balanced += degree_equality(g) ? 1 : 0;
    if (decomposed != degree_equality(g) || decomposed != oracle_says) ++discrepancies;
  }
  o.require(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(balanced) + " balanced, " +
             std::to_string(discrepancies) + " discrepancies" + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome h_equals_hstar() {
  Outcome o;
  int nontrivial = 0;
  auto check = [&](const Dag& g, const std::string& name, const Counts* expected) {
    const auto decomp = route_decomposition(g);
    const auto h = trim_trailing_zeros(ehrhart_hstar(g).h_star);
    const auto dkk = trim_trailing_zeros(h_vector(dkk_triangulation(g, decomposition_framing(g, decomp)).complex));
    const auto eft = trim_trailing_zeros(h_vector(equatorial_flow_triangulation(g, decomp).complex));
    o.require(dkk == h && eft == h, name + ": h(dkk)=" + show(dkk) + " h(eft)=" + show(eft) + " h*=" + show(h));
    if (g.edge_count() <= 7) o.require(h == trim_trailing_zeros(oracle::box_hstar(g)), name + ": brute-force h* differs");
    nontrivial += h.size() > 1 ? 1 : 0;
    if (expected) o.require(h == *expected, name + ": expected " + show(*expected) + ", got " + show(h));
  };
  const Counts d1{1, 1}, d2{1, 4, 1}, d3{1, 4, 1};
  check(catalog::d1(), "D1", &d1);
  check(catalog::d2(), "D2", &d2);
  check(catalog::d3(), "D3", &d3);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 60; ++k) check(random_balanced_dag_within(rng, 9), "random #" + std::to_string(k), nullptr);
  if (o.pass) o.detail = "D1 (1,1), D2 (1,4,1), D3 (1,4,1) and 60 random balanced DAGs agree (" + std::to_string(nontrivial) + " with h* != (1))";
  return o;
}

Outcome skew_pair_numerator() {
  Outcome o;
  const Dag g = catalog::skew_pair();
  const auto h = ehrhart_hstar(g);
  const int d = dimension(g);
  o.require(trim_trailing_zeros(h.h_star) == Counts{1, 3, 1}, "numerator " + show(h.h_star));
  o.require(d + 1 == 5, "denominator exponent " + std::to_string(d + 1));
  o.require(h.degree == 2, "degree " + std::to_string(h.degree));
  o.require(h.codegree == 3, "codegree " + std::to_string(h.codegree));
  o.require(h.h_star == oracle::box_hstar(g), "brute-force h* differs");
  if (o.pass) o.detail = "1+3z+z^2 over (1-z)^5, degree 2, codegree 3 (reconstructed example graph)";
  return o;
}

Outcome sphere_structure() {
  Outcome o;
  auto check = [&](const Dag& g, const std::string& name, std::int64_t euler, bool hexagon) {
    const auto c = t_eq(g, route_decomposition(g));
    o.require(c.is_pure(), name + " not pure");
    o.require(is_closed_pseudomanifold(c), name + " has a ridge not in exactly two facets");
    o.require(euler_characteristic(c) == euler, name + " Euler characteristic " + std::to_string(euler_characteristic(c)));
    if (hexagon) o.require(f_vector(c) == Counts{1, 6, 6}, name + " f-vector " + show(f_vector(c)));
  };
  check(catalog::d1(), "D1", 2, false);
  check(catalog::d2(), "D2", 0, true);
  check(catalog::d3(), "D3", 0, true);
  if (o.pass) o.detail = "D1 is S^0 (chi 2); D2 and D3 are hexagons (chi 0)";
  return o;
}

Outcome not_dkk() {
  Outcome o;
  const Dag d3 = catalog::d3();
  const auto r3 = differs_from_dkk(d3, route_decomposition(d3), true);
  o.require(r3.framings_checked == 36, "D3 framings checked " + std::to_string(r3.framings_checked));
  o.require(r3.matching_framings == 0 && r3.verdict == "not DKK", "D3 verdict " + r3.verdict);
  const Dag d1 = catalog::d1();
  const auto r1 = differs_from_dkk(d1, route_decomposition(d1), false);
  o.require(r1.equals_decomposition_framing, "D1 differs from its decomposition-framing DKK triangulation");
  if (o.pass) o.detail = "D3: 0 of 36 framings match; D1 equals decomposition-framing DKK";
  return o;
}

Outcome transversal_identity() {
  Outcome o;
  std::string counts;
  for (const auto& [g, name] : {std::pair{catalog::d1(), "D1"}, std::pair{catalog::d2(), "D2"}, std::pair{catalog::d3(), "D3"}}) {
    const auto decomp = route_decomposition(g);
    const LeveledSpace space(g, decomp);
    std::int64_t expected_pairs = static_cast<std::int64_t>(oracle::all_paths(g).size());
    for (const auto& r : decomp) expected_pairs *= static_cast<std::int64_t>(r.edges.size());
    std::int64_t pairs = 0, failures = 0;
    for (const auto& s : enumerate_routes(g))
      for (const auto& m : enumerate_transversals(decomp)) {
        ++pairs;
        std::int64_t shared = 0;
        for (auto e : s.edges) shared += std::count(m.edges.begin(), m.edges.end(), e);
        const auto f = transversal_functional(g, decomp, space, m);
        if (dot(f, phi(g, decomp, space, s)) != 1 - shared) ++failures;
      }
    o.require(pairs == expected_pairs, std::string(name) + " pair count " + std::to_string(pairs));
    o.require(failures == 0, std::string(name) + " " + std::to_string(failures) + " failures");
    counts += (counts.empty() ? "" : ", ") + std::string(name) + " " + std::to_string(pairs);
  }
  if (o.pass) o.detail = "0 failures over every (route, transversal) pair: " + counts;
  return o;
}

Outcome reflexive_quotient() {
  Outcome o;
  auto check = [&](const Dag& g, const std::string& name, std::size_t vertices) {
    const auto decomp = route_decomposition(g);
    const auto q = quotient_facets(g, decomp);
    int excess = 0;
    for (int v = 1; v <= g.inner_count(); ++v) excess += g.indeg(v) - 1;
    std::size_t gamma = 0;
    for (const auto& f : equatorial_facets(g, decomp)) gamma += f.routes.empty() ? 0 : 1;
    o.require(q.vertices.size() == vertices, name + " has " + std::to_string(q.vertices.size()) + " vertices");
    o.require(q.facets.size() == vertices, name + " has " + std::to_string(q.facets.size()) + " facets");
    o.require(q.facets.size() == gamma, name + " facet count differs from the equatorial complex");
    o.require(q.dimension == excess, name + " dimension " + std::to_string(q.dimension));
    const auto r = verify_reflexive(q);
    o.require(r.ok && r.interior_points == 1, name + " not reflexive");
    return q;
  };
  const auto q1 = check(catalog::d1(), "D1", 2);
  o.require(std::set<IntVector>(q1.vertices.begin(), q1.vertices.end()) == std::set<IntVector>{{1, -1}, {-1, 1}},
            "D1 vertices are not +-(1,-1)");
  check(catalog::d2(), "D2", 6);
  check(catalog::d3(), "D3", 6);
  if (o.pass) o.detail = "D1 segment +-(1,-1); D2, D3 hexagons; all reflexive with the origin as sole interior point";
  return o;
}

Outcome codegree_is_route_count() {
  Outcome o;
  auto smallest_interior = [](const Dag& g) {
    for (int t = 1;; ++t)
      if (oracle::box_count(g, t, true) > 0) return t;
  };
  std::vector<std::pair<Dag, std::string>> graphs{{catalog::d1(), "D1"}, {catalog::d2(), "D2"}, {catalog::d3(), "D3"}};
  for (int k = 1; k <= 5; ++k) graphs.emplace_back(catalog::parallel(k), "G" + std::to_string(k));
  std::string seen;
  for (const auto& [g, name] : graphs) {
    const int t = smallest_interior(g);
    o.require(t == g.outdeg(g.source()), name + ": smallest interior dilate " + std::to_string(t));
    o.require(ehrhart_hstar(g).codegree == t, name + ": codegree from h* " + std::to_string(ehrhart_hstar(g).codegree));
    seen += (seen.empty() ? "" : ", ") + name + " " + std::to_string(t);
  }
  if (o.pass) o.detail = seen;
  return o;
}

Outcome planar_equivalence() {
  Outcome o;
  for (const auto& [g, name] : {std::pair{catalog::d1(), "D1"}, std::pair{catalog::d2(), "D2"}}) {
    const auto emb = stacked_embedding(g);
    const auto rep = verify_equivalence(g, emb, 4);
    o.require(rep.lattice_counts_agree, std::string(name) + " lattice counts differ");
    o.require(rep.canonical_matches_dkk, std::string(name) + " canonical triangulation differs from planar DKK");
    o.require(rep.rw_matches_equatorial, std::string(name) + " RW triangulation differs from equatorial");
    o.require(rep.ok, std::string(name) + " equivalence report not ok");
    const auto poset = truncated_dual(g, emb).poset;
    for (int t = 1; t <= 4; ++t)
      o.require(oracle::box_count(g, t, false) == oracle::order_box_count(poset, t, false),
                std::string(name) + " brute-force counts differ at t=" + std::to_string(t));
  }
  if (o.pass) o.detail = "D1 and D2: counts agree for t=1..4, canonical = planar DKK, RW = equatorial";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  const Dag d1 = catalog::d1();
  auto tri = dkk_triangulation(d1, decomposition_framing(d1, route_decomposition(d1)));
  tri.complex.facets.pop_back();
  o.require(!verify_triangulation(flow_carrier(d1), tri).ok, "corrupted triangulation accepted");
  const auto doubled = scaled(quotient_facets(d1, route_decomposition(d1)), 2);
  o.require(!verify_reflexive(doubled).ok, "doubled quotient accepted as reflexive");
  const auto result = cmd_equatorial({read("unbalanced.json"), std::nullopt, std::nullopt}, {});
  o.require(result.exit_code == 1 && result.report.value("error", "") == "not Gorenstein", "unbalanced graph not rejected");
  if (o.pass) o.detail = "corrupted triangulation, doubled quotient and unbalanced graph all rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"route decomposition iff degree equality", decomposition_iff_balanced},
      {"h-vectors of DKK and equatorial triangulations equal h*", h_equals_hstar},
      {"Ehrhart numerator of the skew-pair example", skew_pair_numerator},
      {"equatorial sphere structure", sphere_structure},
      {"equatorial triangulation of D3 is not DKK", not_dkk},
      {"transversal identity", transversal_identity},
      {"reflexive quotient polytope", reflexive_quotient},
      {"codegree equals route count", codegree_is_route_count},
      {"strongly planar equivalence", planar_equivalence},
      {"negative controls", negative_controls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
