#include "gsr/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "gsr/certify.hpp"
#include "gsr/cycles.hpp"
#include "gsr/harness.hpp"
#include "gsr/recover.hpp"
#include "gsr/serialize.hpp"

namespace gsr {

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Sparse recovery of edge signals measured through graph incidence matrices"};
  app.require_subcommand(1);

  std::string graph_file;
  std::size_t cap = kDefaultCycleCap;

  auto *girth_cmd = app.add_subcommand("girth", "Print the girth of a graph");
  girth_cmd->add_option("--graph", graph_file, "Edge-list file")->required();

  auto *cycles_cmd = app.add_subcommand("cycles", "List every simple cycle as a 1-based vertex sequence");
  cycles_cmd->add_option("--graph", graph_file, "Edge-list file")->required();
  cycles_cmd->add_option("--cap", cap, "Abort beyond this many cycles");

  Index sparsity = 1;
  bool per_component = false;
  auto *certify_cmd = app.add_subcommand("certify", "Nullspace-property certificate of a given order (JSON)");
  certify_cmd->add_option("--graph", graph_file, "Edge-list file")->required();
  certify_cmd->add_option("--sparsity", sparsity, "Sparsity order s")->required()->check(CLI::PositiveNumber);
  certify_cmd->add_flag("--per-component", per_component, "Accept disconnected graphs");

  std::string support_text;
  auto *support_cmd = app.add_subcommand("certify-support", "Support-dependent recovery certificate (JSON)");
  support_cmd->add_option("--graph", graph_file, "Edge-list file")->required();
  support_cmd->add_option("--support", support_text, "Comma-separated 1-based edge ids")->required();
  support_cmd->add_option("--cap", cap, "Cycle enumeration cap");

  std::string measurements_file;
  std::string truth_file;
  std::string algorithm = "l1";
  auto *recover_cmd = app.add_subcommand("recover", "Recover an edge signal from vertex measurements (JSON)");
  recover_cmd->add_option("--graph", graph_file, "Edge-list file")->required();
  recover_cmd->add_option("--measurements", measurements_file, "One value per vertex")->required();
  recover_cmd->add_option("--algorithm", algorithm, "l1 or subgraph")->check(CLI::IsMember({"l1", "subgraph"}));
  recover_cmd->add_option("--truth", truth_file, "Ground truth, one value per edge");

  std::string config_file;
  std::string out_file;
  int threads = 0;
  Index trials_override = 0;
  std::string shared_override;
  auto *simulate_cmd = app.add_subcommand("simulate", "Monte Carlo recovery sweep (CSV)");
  simulate_cmd->add_option("--config", config_file, "JSON sweep configuration")->required();
  simulate_cmd->add_option("--out", out_file, "CSV output path; metadata goes to <out>.meta.json");
  simulate_cmd->add_option("--threads", threads, "Worker threads (default: all)");
  simulate_cmd->add_option("--trials", trials_override, "Override the configured trials per level")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--shared", shared_override, "Two-cycle gluing override: edge or vertex")
      ->check(CLI::IsMember({"edge", "vertex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? 0 : 1; // --help exits cleanly
  }

  try {
    const DirectedGraph g = graph_file.empty() ? DirectedGraph() : load_graph(graph_file);

    if (*girth_cmd) {
      const Girth gi = girth(g);
      if (gi.is_infinite()) out << "inf\n";
      else out << gi.value() << '\n';
    } else if (*cycles_cmd) {
      for (const SimpleCycle &c : enumerate_simple_cycles(g, cap)) {
        for (std::size_t i = 0; i < c.vertices.size(); ++i) out << (i ? " " : "") << c.vertices[i] + 1;
        out << '\n';
      }
    } else if (*certify_cmd) {
      const auto policy = per_component ? ComponentPolicy::per_component : ComponentPolicy::require_connected;
      out << to_json(certify_nup(g, sparsity, policy)).dump(2) << '\n';
    } else if (*support_cmd) {
      out << to_json(certify_support(g, parse_support(support_text), cap)).dump(2) << '\n';
    } else if (*recover_cmd) {
      const Vector y = load_vector(measurements_file);
      std::optional<SparseSignal> truth;
      if (!truth_file.empty()) truth = SparseSignal::from_values(load_vector(truth_file));
      RecoveryOptions opts;
      opts.certify = truth.has_value();
      const RecoveryReport report =
          algorithm == "l1" ? recover_l1(g, y, truth, opts) : algorithm1_recover(g, y, truth, opts);
      out << to_json(report).dump(2) << '\n';
    } else if (*simulate_cmd) {
      std::ifstream in(config_file);
      if (!in) throw std::invalid_argument("cannot open '" + config_file + "'");
      SweepConfig cfg = sweep_config_from_json(nlohmann::json::parse(in));
      if (trials_override > 0) cfg.trials = trials_override;
      if (!shared_override.empty()) cfg.graph.shared = shared_override == "edge" ? SharedPart::edge : SharedPart::vertex;
      if (threads > 0) set_threads(threads);
      const SweepResult result = run_sweep(cfg);
      const std::string meta = to_json(result).dump(2);
      if (out_file.empty()) {
        out << to_csv(result);
        err << meta << '\n';
      } else {
        std::ofstream csv(out_file);
        std::ofstream meta_out(out_file + ".meta.json");
        if (!csv || !meta_out) throw std::invalid_argument("cannot write '" + out_file + "'");
        csv << to_csv(result);
        meta_out << meta << '\n';
      }
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

} // namespace gsr
