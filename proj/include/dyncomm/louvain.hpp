#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyncomm/graph.hpp"
#include "dyncomm/partition.hpp"

namespace dyncomm {

enum class VisitOrder {
  kAscending,      // deterministic, the default
  kSeededShuffle,  // Fisher-Yates reshuffle per iteration, seeded
};

struct EngineConfig {
  double tau = 1e-6;  // net modularity gain below which an iteration/level converged
  int max_iterations_per_level = 100;
  int max_levels = 20;
  VisitOrder visit_order = VisitOrder::kAscending;
  std::uint64_t seed = 0;
};

struct IterationStats {
  double wall_ms = 0.0;
  std::size_t vertices_evaluated = 0;
  double net_gain = 0.0;
};

struct LevelStats {
  std::vector<IterationStats> iterations;
  double modularity_after = 0.0;
};

struct LevelTrace {
  std::vector<LevelStats> levels;

  std::size_t total_iterations() const;
  double mean_iteration_ms() const;
};

/// Evaluation scope for the first-level sweeps: either every vertex or a
/// restricted subset (ascending ids).
using EvalSet = std::optional<std::vector<VertexId>>;

inline const EvalSet kEvalAll = std::nullopt;

/// One local-moving phase: sweeps the evaluation set repeatedly, greedily
/// moving each vertex to the neighboring community with the largest
/// strictly positive gain, until an iteration's net gain drops below tau or
/// the iteration cap is hit. Mutates part in place.
LevelStats local_move_phase(const DynamicGraph& graph, Partition& part, const EvalSet& eval_set,
                            const EngineConfig& config);

/// Collapses each non-empty community into one supervertex. Inter-community
/// weights are summed into single edges; intra-community weight becomes a
/// self-loop (counted once in m, twice in the degree), so the coarse
/// singleton partition has the same modularity as (graph, part).
/// Returns the coarse graph and the fine-vertex -> supervertex map.
std::pair<DynamicGraph, std::vector<VertexId>> coarsen(const DynamicGraph& graph, const Partition& part);

struct MultilevelResult {
  Partition partition;  // over the original vertex set
  LevelTrace trace;
};

/// Full multi-level run: local-move phase, coarsen, repeat until a level's
/// modularity gain falls below tau or max_levels is reached. The eval-set
/// restriction applies only to the first level; coarse levels evaluate all
/// supervertices. Final labels live in the initial partition's label space:
/// communities merged at coarse levels adopt the smallest constituent label,
/// so untouched communities keep their incoming label.
MultilevelResult run_multilevel(const DynamicGraph& graph, const Partition& initial,
                                const EvalSet& first_level_eval_set, const EngineConfig& config);

}  // namespace dyncomm
