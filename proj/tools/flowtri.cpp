// flowtri: command-line reports on flow polytopes of DAGs.
//
//   flowtri analyze graph.json
//   flowtri equatorial graph.json --exhaustive-dkk
//   flowtri order graph.json --embedding embedding.json
//   flowtri fuzz --seed 7 --count 500

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flowtri/commands.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations, Ehrhart data and quotient polytopes of flow polytopes"};
  app.require_subcommand(1);

  flowtri::CommandOptions opt;
  std::string graph_path;
  std::string decomposition_path;
  std::string embedding_path;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    if (needs_graph) sub->add_option("graph", graph_path, "JSON graph file")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timings", opt.timings, "Include wall-clock timings (output is then not reproducible)");
  };

  auto* analyze = app.add_subcommand("analyze", "Validation, contraction, degree equality, dimension, h*");
  add_common(analyze, true);

  auto* decompose = app.add_subcommand("decompose", "Greedy route decomposition (and topmost with an embedding)");
  add_common(decompose, true);
  decompose->add_option("--embedding", embedding_path, "JSON embedding file");

  auto* dkk = app.add_subcommand("dkk", "DKK triangulation for a framing");
  add_common(dkk, true);
  dkk->add_option("--decomposition", decomposition_path, "JSON decomposition file");
  dkk->add_option("--embedding", embedding_path, "JSON embedding file (planar framing)");

  auto* equatorial = app.add_subcommand("equatorial", "Equatorial complex, sphere and flow triangulation");
  add_common(equatorial, true);
  equatorial->add_option("--decomposition", decomposition_path, "JSON decomposition file");
  equatorial->add_flag("--exhaustive-dkk", opt.exhaustive_dkk, "Compare against every framing");
  equatorial->add_option("--exhaustive-bound", opt.exhaustive_bound, "Largest framing space to sweep");

  auto* quotient = app.add_subcommand("quotient", "Quotient polytope, facets and reflexivity");
  add_common(quotient, true);
  quotient->add_option("--decomposition", decomposition_path, "JSON decomposition file");

  auto* order = app.add_subcommand("order", "Dual poset and the order-polytope equivalences");
  add_common(order, true);
  order->add_option("--embedding", embedding_path, "JSON embedding file");
  order->add_option("--max-dilate", opt.max_dilate, "Largest dilate for lattice-count comparison")
      ->check(CLI::Range(1, 12));

  auto* fuzz = app.add_subcommand("fuzz", "Random consistency sweep");
  add_common(fuzz, false);
  fuzz->add_option("--seed", opt.seed, "Random seed");
  fuzz->add_option("--count", opt.count, "Number of random graphs")->check(CLI::Range(1, 100000));
  fuzz->add_option("--max-edges", opt.max_edges, "Edge budget per graph")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  flowtri::CommandInputs in;
  auto load = [&](const std::string& path, std::string& out) {
    if (read_file(path, out)) return true;
    std::cerr << "flowtri: cannot read " << path << "\n";
    return false;
  };
  if (!graph_path.empty() && !load(graph_path, in.graph)) return 2;
  if (!decomposition_path.empty()) {
    std::string text;
    if (!load(decomposition_path, text)) return 2;
    in.decomposition = text;
  }
  if (!embedding_path.empty()) {
    std::string text;
    if (!load(embedding_path, text)) return 2;
    in.embedding = text;
  }

  const auto result = flowtri::run_command(chosen->get_name(), in, opt);
  if (format == "text")
    std::cout << flowtri::render_text(result.report);
  else
    std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}
