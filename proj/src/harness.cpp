#include "gsr/harness.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "gsr/certify.hpp"
#include "gsr/cycles.hpp"

namespace gsr {

DirectedGraph gen_two_cycle_graph(Index l, SharedPart shared) {
  if (l < 3 || l % 2 == 0) throw GraphError("two-cycle graph needs an odd cycle length l >= 3");
  std::vector<Edge> edges;
  if (shared == SharedPart::edge) {
    // Triangle 0 -> 1 -> l -> 0; the l-cycle runs 1 -> 2 -> ... -> l and
    // closes through the shared edge 1 -> l.
    edges = {{0, 1}, {1, l}, {l, 0}};
    for (Index v = 1; v < l; ++v) edges.push_back({v, v + 1});
    return DirectedGraph(l + 1, std::move(edges));
  }
  // Triangle 0 -> 1 -> l+1 -> 0 and the l-cycle 1 -> 2 -> ... -> l -> 1.
  edges = {{0, 1}, {1, l + 1}, {l + 1, 0}};
  for (Index v = 1; v < l; ++v) edges.push_back({v, v + 1});
  edges.push_back({l, 1});
  return DirectedGraph(l + 2, std::move(edges));
}

DirectedGraph gen_ring_graph(Index nodes) {
  if (nodes < 3) throw GraphError("ring graph needs at least 3 nodes");
  std::vector<Edge> edges;
  for (Index v = 0; v < nodes; ++v) edges.push_back({v, (v + 1) % nodes});
  return DirectedGraph(nodes, std::move(edges));
}

DirectedGraph gen_ring_chord_graph(Index nodes, Index skip) {
  if (skip < 2 || nodes < 2 * skip + 1) {
    throw GraphError("ring-with-chords graph needs skip >= 2 and nodes >= 2 skip + 1");
  }
  std::vector<Edge> edges;
  for (Index v = 0; v < nodes; ++v) edges.push_back({v, (v + 1) % nodes});
  for (Index v = 0; v < nodes; ++v) edges.push_back({v, (v + skip) % nodes});
  return DirectedGraph(nodes, std::move(edges));
}

Rng trial_rng(std::uint64_t seed, Index sparsity, Index trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sparsity), static_cast<std::uint32_t>(trial), 0x9e3779b9u};
  return Rng(seq);
}

SparseSignal random_sparse_signal(Index n, Index s, Rng &rng) {
  if (s < 0 || s > n) throw std::invalid_argument("random_sparse_signal: need 0 <= s <= n");
  std::vector<Index> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), Index{0});
  for (Index i = 0; i < s; ++i) {
    boost::random::uniform_int_distribution<Index> pick(i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
  }
  std::sort(pool.begin(), pool.begin() + s);
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  Vector values = Vector::Zero(n);
  for (Index i = 0; i < s; ++i) values(pool[static_cast<std::size_t>(i)]) = normal(rng);
  return SparseSignal::from_values(std::move(values));
}

DirectedGraph build_graph(const GraphSource &source) {
  if (!source.file.empty()) return load_graph(source.file);
  if (source.generator == "two_cycle") return gen_two_cycle_graph(source.length, source.shared);
  if (source.generator == "ring") return gen_ring_graph(source.nodes);
  if (source.generator == "ring_chord") return gen_ring_chord_graph(source.nodes, source.skip);
  throw std::invalid_argument("unknown graph generator '" + source.generator + "'");
}

std::string graph_hash(const DirectedGraph &g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : format_graph(g)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

namespace {

struct TrialOutcome {
  bool l1_success = false;
  bool sub_success = false;
  bool sub_infeasible = false;
  bool certified = false;
  std::string error;
};

TrialOutcome run_trial(const DirectedGraph &g, const Matrix &A, const SweepConfig &cfg, Index s, Index t,
                       const std::optional<std::vector<SimpleCycle>> &cycles) {
  TrialOutcome out;
  Rng rng = trial_rng(cfg.seed, s, t);
  const SparseSignal truth = random_sparse_signal(g.edge_count(), s, rng);
  const Vector y = A * truth.values;
  RecoveryOptions opts;
  opts.threshold = cfg.threshold;
  const std::string where = "sparsity " + std::to_string(s) + ", trial " + std::to_string(t);

  if (cfg.algorithm != SweepAlgorithm::subgraph_l1) {
    const RecoveryReport rep = recover_l1(g, y, truth, opts);
    out.l1_success = rep.success;
    if (cycles) {
      out.certified = truth.support.empty() || certify_support(truth.support, *cycles).holds;
      if (out.certified && !rep.success) {
        out.error = where + ": certified support was not recovered by l1 minimisation";
      }
    }
  }
  if (cfg.algorithm != SweepAlgorithm::full_l1) {
    const RecoveryReport rep = algorithm1_recover(g, y, truth, opts);
    out.sub_success = rep.success;
    out.sub_infeasible = rep.diagnostic == Diagnostic::reduced_system_infeasible;
    const double y_inf = y.size() > 0 ? y.cwiseAbs().maxCoeff() : 0.0;
    if (rep.success && (rep.diagnostic != Diagnostic::none || rep.residual > 1e-8 * (1.0 + y_inf))) {
      out.error = where + ": subgraph recovery succeeded without reproducing the measurements";
    }
  }
  return out;
}

} // namespace

SweepResult run_sweep(const SweepConfig &config, Exec exec) { return run_sweep(build_graph(config.graph), config, exec); }

SweepResult run_sweep(const DirectedGraph &g, const SweepConfig &config, Exec exec) {
  if (config.trials < 1) throw std::invalid_argument("sweep needs at least one trial per level");
  const IncidenceMatrix incidence = incidence_matrix(g);
  const Matrix &A = incidence.matrix();

  SweepResult result;
  result.seed = config.seed;
  result.graph_hash = graph_hash(g);
  result.vertex_count = g.vertex_count();
  result.edge_count = g.edge_count();
  result.config = config;

  std::optional<std::vector<SimpleCycle>> cycles;
  if (config.cycle_cap > 0 && config.algorithm != SweepAlgorithm::subgraph_l1) {
    try {
      cycles = enumerate_simple_cycles(g, config.cycle_cap);
    } catch (const CycleCapExceeded &) {
    }
  }
  result.certificates_checked = cycles.has_value();

  std::vector<SweepRow> l1_rows;
  std::vector<SweepRow> sub_rows;
  for (Index s : config.sparsity) {
    if (s < 0) throw std::invalid_argument("negative sparsity level");
    if (s > g.edge_count()) {
      result.skipped_sparsity.push_back(s);
      continue;
    }
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(config.trials));
    auto body = [&](Index t) {
      try {
        outcomes[static_cast<std::size_t>(t)] = run_trial(g, A, config, s, t, cycles);
      } catch (const std::exception &e) {
        outcomes[static_cast<std::size_t>(t)].error =
            "sparsity " + std::to_string(s) + ", trial " + std::to_string(t) + ": " + e.what();
      }
    };
    if (exec == Exec::serial) {
      for (Index t = 0; t < config.trials; ++t) body(t);
    } else {
#pragma omp parallel for schedule(dynamic, 4)
      for (Index t = 0; t < config.trials; ++t) body(t);
    }

    SweepRow l1{RecoveryMethod::full_l1, s, config.trials};
    SweepRow sub{RecoveryMethod::subgraph_l1, s, config.trials};
    for (const TrialOutcome &o : outcomes) {
      if (!o.error.empty()) throw SweepInvariantViolation(o.error);
      l1.successes += o.l1_success;
      l1.certified += o.certified;
      sub.successes += o.sub_success;
      sub.reduced_infeasible += o.sub_infeasible;
    }
    l1.probability = static_cast<double>(l1.successes) / static_cast<double>(config.trials);
    sub.probability = static_cast<double>(sub.successes) / static_cast<double>(config.trials);
    l1_rows.push_back(l1);
    sub_rows.push_back(sub);
  }
  if (config.algorithm != SweepAlgorithm::subgraph_l1) result.rows.insert(result.rows.end(), l1_rows.begin(), l1_rows.end());
  if (config.algorithm != SweepAlgorithm::full_l1) result.rows.insert(result.rows.end(), sub_rows.begin(), sub_rows.end());
  return result;
}

std::string to_csv(const SweepResult &result) {
  std::ostringstream out;
  out << "algorithm,sparsity,trials,successes,probability,seed\n";
  for (const SweepRow &row : result.rows) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, row.probability);
    out << to_string(row.method) << ',' << row.sparsity << ',' << row.trials << ',' << row.successes << ','
        << std::string_view(buf, static_cast<std::size_t>(end - buf)) << ',' << result.seed << '\n';
  }
  return out.str();
}

} // namespace gsr
