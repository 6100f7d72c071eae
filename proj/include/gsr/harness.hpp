#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsr/graph.hpp"
#include "gsr/parallel.hpp"
#include "gsr/recover.hpp"

namespace gsr {

/// How the two cycles of the two-cycle family are glued together.
enum class SharedPart { edge, vertex };

/// A triangle and an l-cycle (l odd, l >= 3). With a shared edge the graph
/// has l + 1 vertices and l + 2 edges; with a shared vertex, l + 2 and l + 3.
DirectedGraph gen_two_cycle_graph(Index l, SharedPart shared = SharedPart::edge);

/// Directed ring 1 -> 2 -> ... -> nodes -> 1.
DirectedGraph gen_ring_graph(Index nodes);

/// Ring plus chords i -> i + skip (mod nodes). Requires skip >= 2 and
/// nodes >= 2 skip + 1 so that no chord duplicates another edge.
DirectedGraph gen_ring_chord_graph(Index nodes, Index skip);

using Rng = std::mt19937_64;

/// Independent stream for one trial of one sparsity level, so results do
/// not depend on scheduling.
Rng trial_rng(std::uint64_t seed, Index sparsity, Index trial);

/// Support uniform over all s-subsets, values i.i.d. standard normal.
SparseSignal random_sparse_signal(Index n, Index s, Rng &rng);

enum class SweepAlgorithm { full_l1, subgraph_l1, both };

struct GraphSource {
  std::string file;      // edge-list path; takes precedence when non-empty
  std::string generator; // "two_cycle", "ring" or "ring_chord"
  Index length = 3;      // two_cycle
  SharedPart shared = SharedPart::edge;
  Index nodes = 20;      // ring, ring_chord
  Index skip = 3;        // ring_chord
};

DirectedGraph build_graph(const GraphSource &source);

struct SweepConfig {
  GraphSource graph;
  std::vector<Index> sparsity;
  Index trials = 300;
  std::uint64_t seed = 0;
  SweepAlgorithm algorithm = SweepAlgorithm::both;
  double threshold = kRecoveryThreshold;
  /// Cycle cap for the per-trial certificate check; 0 disables the check.
  std::size_t cycle_cap = 20000;
};

struct SweepRow {
  RecoveryMethod method = RecoveryMethod::full_l1;
  Index sparsity = 0;
  Index trials = 0;
  Index successes = 0;
  double probability = 0.0;
  Index reduced_infeasible = 0; // subgraph trials lost to measurement cancellation
  Index certified = 0;          // trials whose drawn support was certified
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::uint64_t seed = 0;
  std::string graph_hash;
  Index vertex_count = 0;
  Index edge_count = 0;
  std::vector<Index> skipped_sparsity; // levels above the edge count
  bool certificates_checked = false;
  SweepConfig config;
};

/// Raised when a certified support fails full l1 recovery, or a successful
/// subgraph recovery does not reproduce the measurements.
class SweepInvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

SweepResult run_sweep(const SweepConfig &config, Exec exec = Exec::parallel);
SweepResult run_sweep(const DirectedGraph &g, const SweepConfig &config, Exec exec = Exec::parallel);

/// Columns: algorithm,sparsity,trials,successes,probability,seed.
std::string to_csv(const SweepResult &result);

/// FNV-1a over the canonical edge-list text, as 16 hex digits.
std::string graph_hash(const DirectedGraph &g);

} // namespace gsr
