#include "flowtri/commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "flowtri/dkk.hpp"
#include "flowtri/equatorial.hpp"
#include "flowtri/errors.hpp"
#include "flowtri/quotient.hpp"
#include "flowtri/random_dag.hpp"

namespace flowtri {

namespace {

using Body = std::function<bool(Json&)>;

CommandResult run_guarded(const std::string& command, const CommandInputs& in, const CommandOptions& opt,
                          const Body& body) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  Json& report = result.report;
  report["command"] = command;
  report["input_digest"] = digest(in.graph);
  try {
    const bool ok = body(report);
    report["ok"] = ok;
    result.exit_code = ok ? 0 : 1;
  } catch (const InvalidInput& e) {
    report["ok"] = false;
    report["error"] = e.what();
    result.exit_code = 2;
  } catch (const NotGorenstein& e) {
    report["ok"] = false;
    report["error"] = e.what();
    result.exit_code = 1;
  } catch (const BoundExceeded& e) {
    report["ok"] = false;
    report["error"] = e.what();
    result.exit_code = 1;
  } catch (const ConsistencyError& e) {
    report["ok"] = false;
    report["error"] = std::string("internal consistency check failed: ") + e.what();
    result.exit_code = 1;
  }
  if (opt.timings) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timings"] = {{"total_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }
  return result;
}

Dag load_graph(const Json& j) {
  Dag dag = dag_from_json(j);
  const auto v = validate(dag);
  if (!v.ok) {
    std::string msg = "invalid DAG:";
    for (const auto& x : v.violations) msg += " [" + x.rule + "] " + x.message + ";";
    throw InvalidInput(msg);
  }
  return dag;
}

// The graph with idle edges contracted, plus a record of what was contracted.
struct Working {
  Dag dag;
  ContractionResult contraction;
};

Working working_graph(const Dag& dag, Json& report) {
  Working w{dag, {dag, {}, {}}};
  if (has_idle_edges(dag)) {
    w.contraction = contract_idle_edges(dag);
    w.dag = w.contraction.dag;
    report["contracted_edges"] = w.contraction.contracted;
  }
  return w;
}

RouteDecomposition translate_decomposition(const Dag& original, const Working& w, const RouteDecomposition& decomp) {
  if (w.contraction.contracted.empty()) return decomp;
  RouteDecomposition out;
  for (const auto& r : decomp) {
    std::vector<std::string> ids;
    for (auto e : r.edges)
      if (const auto& kept = w.contraction.edge_map.at(original.edge(e).id)) ids.push_back(*kept);
    out.push_back(route_from_ids(w.dag, ids));
  }
  return out;
}

RouteDecomposition choose_decomposition(const Dag& original, const Json& graph, const CommandInputs& in,
                                        const Working& w, Json& report) {
  if (!degree_equality(w.dag)) throw NotGorenstein();
  std::optional<RouteDecomposition> given;
  if (in.decomposition) {
    given = decomposition_from_json(original, parse_json(*in.decomposition));
    report["decomposition_source"] = "file";
  } else if (graph.contains("decomposition")) {
    given = decomposition_from_json(original, graph.at("decomposition"));
    report["decomposition_source"] = "graph";
  }
  if (given) return translate_decomposition(original, w, *given);
  report["decomposition_source"] = "greedy";
  return route_decomposition(w.dag);
}

std::optional<PlanarEmbedding> choose_embedding(const Dag& dag, const Json& graph, const CommandInputs& in) {
  if (in.embedding) return embedding_from_json(dag, parse_json(*in.embedding));
  if (graph.contains("embedding")) return embedding_from_json(dag, graph.at("embedding"));
  return std::nullopt;
}

// h-vector of a d-dimensional triangulation, cut to d + 1 entries when the
// trailing entry vanishes.
std::vector<std::int64_t> triangulation_h(const SimplicialComplex& complex, int d) {
  auto h = h_vector(complex);
  while (h.size() > static_cast<std::size_t>(d + 1) && h.back() == 0) h.pop_back();
  return h;
}

std::vector<std::string> route_labels(const Dag& dag, const std::vector<Route>& routes) {
  std::vector<std::string> out;
  for (const auto& r : routes) out.push_back(route_name(dag, r));
  return out;
}

Json transversal_json(const Dag& dag, const Transversal& m) {
  Json out = Json::array();
  for (auto e : m.edges) out.push_back(dag.edge(e).id);
  return out;
}

}  // namespace

CommandResult cmd_analyze(const CommandInputs& in, const CommandOptions& opt) {
  return run_guarded("analyze", in, opt, [&](Json& report) {
    const Dag dag = dag_from_json(parse_json(in.graph));
    const auto v = validate(dag);
    Json violations = Json::array();
    for (const auto& x : v.violations) violations.push_back({{"rule", x.rule}, {"message", x.message}});
    report["validation"] = {{"ok", v.ok}, {"violations", violations}};
    if (!v.ok) throw InvalidInput("invalid DAG");
    report["inner_vertices"] = dag.inner_count();
    report["edges"] = dag.edge_count();
    const auto contraction = contract_idle_edges(dag);
    const Dag& g = contraction.dag;
    report["idle_contraction"] = {{"contracted", contraction.contracted},
                                  {"inner_vertices", g.inner_count()},
                                  {"edges", g.edge_count()}};
    const bool balanced = degree_equality(g);
    report["degree_equality"] = balanced;
    report["dimension"] = dimension(g);
    const auto routes = enumerate_routes(dag);
    report["route_count"] = routes.size();
    const auto h = ehrhart_hstar(g);
    report["ehrhart"] = hstar_to_json(h);
    Json checks = Json::object();
    checks["route_count_matches_dp"] = static_cast<std::int64_t>(routes.size()) == count_routes(dag);
    checks["palindromic_iff_balanced"] = is_palindromic(h.h_star) == balanced;
    if (balanced) checks["codegree_is_outdeg_s"] = h.codegree == g.outdeg(g.source());
    report["gorenstein"] = balanced;
    report["checks"] = checks;
    bool ok = true;
    for (const auto& [k, val] : checks.items()) ok = ok && val.get<bool>();
    return ok;
  });
}

CommandResult cmd_decompose(const CommandInputs& in, const CommandOptions& opt) {
  return run_guarded("decompose", in, opt, [&](Json& report) {
    const Json graph = parse_json(in.graph);
    const Dag dag = load_graph(graph);
    const auto decomp = route_decomposition(dag);
    report["decomposition"] = routes_to_json(dag, decomp);
    report["size"] = decomp.size();
    report["outdeg_s"] = dag.outdeg(dag.source());
    Json checks = {{"partitions_edges", is_route_decomposition(dag, decomp)},
                   {"size_is_outdeg_s", static_cast<int>(decomp.size()) == dag.outdeg(dag.source())}};
    if (const auto emb = choose_embedding(dag, graph, in)) {
      const auto top = topmost_decomposition(dag, *emb);
      report["topmost_decomposition"] = routes_to_json(dag, top);
      checks["topmost_framing_is_planar"] = decomposition_framing(dag, top) == planar_framing(dag, *emb);
    }
    report["checks"] = checks;
    bool ok = true;
    for (const auto& [k, val] : checks.items()) ok = ok && val.get<bool>();
    return ok;
  });
}

CommandResult cmd_dkk(const CommandInputs& in, const CommandOptions& opt) {
  return run_guarded("dkk", in, opt, [&](Json& report) {
    const Json graph = parse_json(in.graph);
    const Dag original = load_graph(graph);
    if (has_idle_edges(original) && (graph.contains("framing") || in.embedding || graph.contains("embedding")))
      throw InvalidInput("framings and embeddings require a DAG without idle edges");
    const Working w = working_graph(original, report);
    const Dag& dag = w.dag;
    Framing framing;
    if (graph.contains("framing")) {
      framing = framing_from_json(dag, graph.at("framing"));
      report["framing_source"] = "graph";
    } else if (in.decomposition && !in.embedding) {
      framing = decomposition_framing(dag, choose_decomposition(original, graph, in, w, report));
      report["framing_source"] = "decomposition";
    } else if (const auto emb = choose_embedding(dag, graph, in)) {
      framing = planar_framing(dag, *emb);
      report["framing_source"] = "planar";
    } else if (degree_equality(dag)) {
      framing = decomposition_framing(dag, choose_decomposition(original, graph, in, w, report));
      report["framing_source"] = "decomposition";
    } else {
      std::vector<std::vector<std::size_t>> ins(static_cast<std::size_t>(dag.vertex_count()));
      std::vector<std::vector<std::size_t>> outs(static_cast<std::size_t>(dag.vertex_count()));
      for (int v = 1; v <= dag.inner_count(); ++v) {
        ins[static_cast<std::size_t>(v)].assign(dag.in_edges(v).begin(), dag.in_edges(v).end());
        outs[static_cast<std::size_t>(v)].assign(dag.out_edges(v).begin(), dag.out_edges(v).end());
      }
      framing = Framing(dag, std::move(ins), std::move(outs));
      report["framing_source"] = "edge order";
    }
    report["framing"] = framing_to_json(dag, framing);
    const auto tri = dkk_triangulation(dag, framing);
    const auto h = ehrhart_hstar(dag);
    const auto verification = verify_triangulation(flow_carrier(dag), tri);
    const auto hv = triangulation_h(tri.complex, dimension(dag));
    report["routes"] = tri.labels;
    report["exceptional_routes"] = routes_to_json(dag, exceptional_routes(dag, framing));
    report["simplices"] = complex_to_json(tri.complex, tri.labels);
    report["simplex_count"] = tri.complex.facets.size();
    report["verification"] = report_to_json(verification);
    report["h_vector"] = hv;
    report["h_star"] = h.h_star;
    report["checks"] = {{"triangulation_valid", verification.ok}, {"h_equals_h_star", hv == h.h_star}};
    return verification.ok && hv == h.h_star;
  });
}

CommandResult cmd_equatorial(const CommandInputs& in, const CommandOptions& opt) {
  return run_guarded("equatorial", in, opt, [&](Json& report) {
    const Json graph = parse_json(in.graph);
    const Dag original = load_graph(graph);
    const Working w = working_graph(original, report);
    const Dag& dag = w.dag;
    const auto decomp = choose_decomposition(original, graph, in, w, report);
    report["decomposition"] = routes_to_json(dag, decomp);
    const auto routes = enumerate_routes(dag);
    const auto labels = route_labels(dag, routes);

    Json facets = Json::array();
    for (const auto& f : equatorial_facets(dag, decomp)) {
      Json ms = Json::array();
      for (const auto& m : f.transversals) ms.push_back(transversal_json(dag, m));
      Json face = Json::array();
      for (int r : f.routes) face.push_back(labels[static_cast<std::size_t>(r)]);
      facets.push_back({{"transversals", ms}, {"routes", face}});
    }
    report["facet_transversals"] = facets;

    const auto sphere = t_eq(dag, decomp);
    report["t_eq_maximal_faces"] = complex_to_json(sphere, labels);
    const auto sphere_h = trim_trailing_zeros(h_vector(sphere));
    report["t_eq"] = {{"dimension", sphere.dimension()},
                      {"f_vector", f_vector(sphere)},
                      {"h_vector", sphere_h},
                      {"euler_characteristic", euler_characteristic(sphere)},
                      {"pure", sphere.is_pure()},
                      {"pseudomanifold", sphere.facets.size() <= 1 || is_closed_pseudomanifold(sphere)}};

    const auto tri = equatorial_flow_triangulation(dag, decomp);
    const auto verification = verify_triangulation(flow_carrier(dag), tri);
    const auto h = ehrhart_hstar(dag);
    const auto hv = triangulation_h(tri.complex, dimension(dag));
    report["triangulation"] = {{"simplices", complex_to_json(tri.complex, tri.labels)},
                               {"simplex_count", tri.complex.facets.size()},
                               {"verification", report_to_json(verification)}};
    report["h_vector"] = hv;
    report["h_star"] = h.h_star;

    const auto cmp = differs_from_dkk(dag, decomp, opt.exhaustive_dkk, opt.exhaustive_bound);
    std::string summary = cmp.verdict;
    if (cmp.verdict == "not DKK") summary = "not a DKK triangulation";
    if (cmp.verdict == "DKK") summary = "equal to a DKK triangulation";
    report["dkk_comparison"] = {{"exhaustive", cmp.exhaustive},
                                {"framings_checked", cmp.framings_checked},
                                {"matching_framings", cmp.matching_framings},
                                {"equals_decomposition_framing", cmp.equals_decomposition_framing},
                                {"verdict", cmp.verdict},
                                {"summary", summary}};
    const bool h_ok = hv == h.h_star;
    const bool sphere_ok = sphere_h == trim_trailing_zeros(h.h_star);
    report["checks"] = {{"triangulation_valid", verification.ok},
                        {"h_equals_h_star", h_ok},
                        {"t_eq_h_equals_h_star", sphere_ok}};
    report["verdict"] = verification.ok && h_ok && sphere_ok ? "pass" : "fail";
    return verification.ok && h_ok && sphere_ok;
  });
}

CommandResult cmd_quotient(const CommandInputs& in, const CommandOptions& opt) {
  return run_guarded("quotient", in, opt, [&](Json& report) {
    const Json graph = parse_json(in.graph);
    const Dag original = load_graph(graph);
    const Working w = working_graph(original, report);
    const Dag& dag = w.dag;
    const auto decomp = choose_decomposition(original, graph, in, w, report);
    report["decomposition"] = routes_to_json(dag, decomp);
    const auto q = quotient_facets(dag, decomp);
    const auto routes = enumerate_routes(dag);

    Json blocks = Json::object();
    for (int i = 1; i <= dag.inner_count(); ++i) blocks[dag.vertex_name(i)] = q.space.inlevel(i);
    report["blocks"] = blocks;
    Json coords = Json::array();
    for (std::size_t k = 0; k < q.space.size(); ++k) coords.push_back(q.space.name(k));
    report["coordinates"] = coords;
    Json vertices = Json::object();
    for (std::size_t k = 0; k < q.vertices.size(); ++k)
      vertices[route_name(dag, routes[static_cast<std::size_t>(q.vertex_routes[k])])] = q.vertices[k];
    report["vertices"] = vertices;
    Json facets = Json::array();
    for (const auto& f : q.facets) {
      Json c = Json::object();
      for (std::size_t k = 0; k < f.coeffs.size(); ++k)
        if (f.coeffs[k] != 0) c[q.space.name(k)] = f.coeffs[k];
      facets.push_back({{"coeffs", c},
                        {"rhs", f.rhs},
                        {"transversal", transversal_json(dag, f.transversal)},
                        {"transversal_count", f.transversal_count}});
    }
    report["facets"] = facets;
    Json subspace = Json::array();
    for (const auto& row : q.subspace) {
      Json names = Json::array();
      for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] != 0) names.push_back(q.space.name(k));
      subspace.push_back(names);
    }
    report["subspace"] = subspace;
    report["dimension"] = q.dimension;

    const auto refl = verify_reflexive(q);
    report["reflexive"] = {{"ok", refl.ok},
                           {"interior_lattice_points", refl.interior_points},
                           {"issues", refl.issues}};
    std::int64_t pairs = 0;
    std::int64_t failures = 0;
    const auto transversals = enumerate_transversals(decomp);
    for (const auto& s : routes)
      for (const auto& m : transversals) {
        ++pairs;
        failures += check_transversal_identity(dag, decomp, q.space, s, m).ok ? 0 : 1;
      }
    report["transversal_identity"] = {{"pairs", pairs}, {"failures", failures}};
    const auto gamma = equatorial_facets(dag, decomp);
    const auto gamma_facets = std::count_if(gamma.begin(), gamma.end(), [](const EquatorialFace& f) { return !f.routes.empty(); });
    const auto hq = quotient_hstar(q);
    const auto hf = ehrhart_hstar(dag);
    report["h_star_quotient"] = hq.h_star;
    report["h_star_flow"] = hf.h_star;
    const bool facets_ok = static_cast<std::size_t>(gamma_facets) == q.facets.size();
    const bool h_ok = trim_trailing_zeros(hq.h_star) == trim_trailing_zeros(hf.h_star);
    report["checks"] = {{"reflexive", refl.ok},
                        {"transversal_identity", failures == 0},
                        {"facet_count_matches_equatorial_complex", facets_ok},
                        {"h_star_matches_flow_polytope", h_ok}};
    return refl.ok && failures == 0 && facets_ok && h_ok;
  });
}

CommandResult cmd_order(const CommandInputs& in, const CommandOptions& opt) {
  return run_guarded("order", in, opt, [&](Json& report) {
    const Json graph = parse_json(in.graph);
    const Dag dag = load_graph(graph);
    const auto emb = choose_embedding(dag, graph, in);
    if (!emb) throw InvalidInput("order needs an embedding (graph field \"embedding\" or --embedding)");
    const auto dual = truncated_dual(dag, *emb);
    report["poset"] = poset_to_json(dual.poset);
    const auto grading = is_graded(dual.poset);
    report["graded"] = grading.graded;
    if (grading.graded) {
      Json ranks = Json::object();
      for (int x = 0; x < dual.poset.size(); ++x)
        ranks[dual.poset.elements()[static_cast<std::size_t>(x)]] = grading.ranks[static_cast<std::size_t>(x)];
      report["ranks"] = ranks;
      report["rank_count"] = grading.rank_count;
    }
    report["linear_extensions"] = count_linear_extensions(dual.poset);
    if (!degree_equality(dag)) throw NotGorenstein();
    const auto eq = verify_equivalence(dag, *emb, opt.max_dilate);
    report["topmost_decomposition"] = routes_to_json(dag, eq.topmost);
    report["equivalence"] = {{"lattice_counts_agree", eq.lattice_counts_agree},
                             {"topmost_framing_is_planar", eq.topmost_framing_is_planar},
                             {"canonical_matches_dkk", eq.canonical_matches_dkk},
                             {"rank_constant_is_route_simplex", eq.rank_constant_is_route_simplex},
                             {"rw_matches_equatorial", eq.rw_matches_equatorial},
                             {"canonical_simplices", eq.canonical_simplices},
                             {"rw_simplices", eq.rw_simplices},
                             {"equatorial_simplices", eq.equatorial_simplices},
                             {"mismatches", eq.mismatches}};
    report["verdict"] = eq.ok ? "match" : "mismatch";
    return eq.ok;
  });
}

CommandResult cmd_fuzz(const CommandInputs& in, const CommandOptions& opt) {
  return run_guarded("fuzz", in, opt, [&](Json& report) {
    std::mt19937_64 rng(opt.seed);
    report["seed"] = opt.seed;
    report["count"] = opt.count;
    Json discrepancies = Json::array();
    int balanced = 0;
    for (int i = 0; i < opt.count; ++i) {
      const Dag dag = random_dag(rng, opt.max_edges);
      bool decomposed = false;
      try {
        decomposed = is_route_decomposition(dag, route_decomposition(dag));
      } catch (const NotGorenstein&) {
      }
      if (decomposed != degree_equality(dag))
        discrepancies.push_back({{"case", i}, {"check", "decomposition iff degree equality"}, {"graph", dag_to_json(dag)}});
    }
    for (int i = 0; i < opt.count / 4; ++i) {
      const Dag dag = random_balanced_dag_within(rng, std::max(opt.max_edges, 2));
      ++balanced;
      const auto decomp = route_decomposition(dag);
      const auto h = ehrhart_hstar(dag);
      const int d = dimension(dag);
      const auto dkk = dkk_triangulation(dag, decomposition_framing(dag, decomp));
      const auto eft = equatorial_flow_triangulation(dag, decomp);
      if (triangulation_h(dkk.complex, d) != h.h_star || triangulation_h(eft.complex, d) != h.h_star)
        discrepancies.push_back({{"case", i}, {"check", "h equals h*"}, {"graph", dag_to_json(dag)}});
    }
    report["balanced_cases"] = balanced;
    report["discrepancies"] = discrepancies;
    return discrepancies.empty();
  });
}

CommandResult run_command(const std::string& name, const CommandInputs& in, const CommandOptions& opt) {
  if (name == "analyze") return cmd_analyze(in, opt);
  if (name == "decompose") return cmd_decompose(in, opt);
  if (name == "dkk") return cmd_dkk(in, opt);
  if (name == "equatorial") return cmd_equatorial(in, opt);
  if (name == "quotient") return cmd_quotient(in, opt);
  if (name == "order") return cmd_order(in, opt);
  if (name == "fuzz") return cmd_fuzz(in, opt);
  CommandResult r;
  r.report = {{"command", name}, {"ok", false}, {"error", "unknown command"}};
  r.exit_code = 2;
  return r;
}

namespace {

void render(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace flowtri
