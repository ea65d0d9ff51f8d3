#include "dyncomm/louvain.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

namespace dyncomm {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// splitmix64; self-contained so shuffles are reproducible across platforms.
std::uint64_t mix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void shuffle_ids(std::vector<VertexId>& ids, std::uint64_t seed) {
  std::uint64_t state = seed;
  for (std::size_t i = ids.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(mix64(state) % i);
    std::swap(ids[i - 1], ids[j]);
  }
}

}  // namespace

std::size_t LevelTrace::total_iterations() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.iterations.size();
  return total;
}

double LevelTrace::mean_iteration_ms() const {
  std::size_t count = 0;
  double sum = 0.0;
  for (const auto& level : levels) {
    for (const auto& it : level.iterations) {
      sum += it.wall_ms;
      ++count;
    }
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

LevelStats local_move_phase(const DynamicGraph& graph, Partition& part, const EvalSet& eval_set,
                            const EngineConfig& config) {
  LevelStats stats;
  const double m = graph.total_weight();
  if (!(m > 0.0)) return stats;

  std::vector<VertexId> order;
  if (eval_set.has_value()) {
    order = *eval_set;
  } else {
    order.resize(graph.vertex_count());
    std::iota(order.begin(), order.end(), 0);
  }

  // scratch accumulator of e_{v->C} over the touched communities
  std::vector<double> edge_to(part.community_count(), 0.0);
  std::vector<CommunityId> touched;

  for (int iteration = 0; iteration < config.max_iterations_per_level; ++iteration) {
    if (config.visit_order == VisitOrder::kSeededShuffle) {
      shuffle_ids(order, config.seed + static_cast<std::uint64_t>(iteration) * 0x51ed2701u + 1);
    }
    const auto started = Clock::now();
    double net_gain = 0.0;
    for (VertexId v : order) {
      const CommunityId home = part.community_of(v);
      touched.clear();
      for (const Neighbor& nb : graph.neighbors(v)) {
        if (nb.id == v) continue;
        const CommunityId c = part.community_of(nb.id);
        if (edge_to[c] == 0.0) touched.push_back(c);
        edge_to[c] += nb.weight;
      }
      const double d = graph.weighted_degree(v);
      const double e_home = edge_to[home];
      const double a_home_less = part.community_degree(home) - d;
      CommunityId best = home;
      double best_gain = 0.0;
      for (CommunityId c : touched) {
        if (c == home) continue;
        const double g =
            (edge_to[c] - e_home) / m + d * (a_home_less - part.community_degree(c)) / (2.0 * m * m);
        if (g > best_gain || (g == best_gain && best != home && c < best)) {
          best_gain = g;
          best = c;
        }
      }
      for (CommunityId c : touched) edge_to[c] = 0.0;
      if (best != home && best_gain > 0.0) {
        part.move(graph, v, best);
        net_gain += best_gain;
      }
    }
    stats.iterations.push_back({elapsed_ms(started), order.size(), net_gain});
    if (net_gain < config.tau) break;
  }
  return stats;
}

std::pair<DynamicGraph, std::vector<VertexId>> coarsen(const DynamicGraph& graph, const Partition& part) {
  // dense supervertex ids for non-empty communities, ascending by label
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> super_of_community(part.community_count(), kNone);
  VertexId supervertices = 0;
  for (CommunityId c = 0; c < part.community_count(); ++c) {
    if (part.community_size(c) > 0) super_of_community[c] = supervertices++;
  }

  std::vector<VertexId> vertex_to_super(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    vertex_to_super[v] = super_of_community[part.community_of(v)];
  }

  std::map<std::pair<VertexId, VertexId>, double> weights;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (nb.id < v) continue;  // visit each undirected edge (and self-loop) once
      VertexId a = vertex_to_super[v];
      VertexId b = vertex_to_super[nb.id];
      if (a > b) std::swap(a, b);
      weights[{a, b}] += nb.weight;
    }
  }

  std::vector<UndirectedEdge> edges;
  edges.reserve(weights.size());
  for (const auto& [key, w] : weights) edges.push_back({key.first, key.second, w});
  return {DynamicGraph::from_weighted_edges(supervertices, edges), std::move(vertex_to_super)};
}

MultilevelResult run_multilevel(const DynamicGraph& graph, const Partition& initial,
                                const EvalSet& first_level_eval_set, const EngineConfig& config) {
  MultilevelResult result;
  if (graph.vertex_count() == 0 || !(graph.total_weight() > 0.0)) {
    result.partition = initial;
    return result;
  }

  Partition level_part = initial;
  LevelStats stats = local_move_phase(graph, level_part, first_level_eval_set, config);
  double q = modularity(graph, level_part);
  stats.modularity_after = q;
  double level_gain = q - modularity(graph, initial);
  result.trace.levels.push_back(std::move(stats));

  // level-0 labels stay in the initial label space; remember them for the
  // final projection
  const std::vector<CommunityId> level0_labels = level_part.labels();
  std::vector<VertexId> vertex_to_super;  // original vertex -> current supervertex
  DynamicGraph coarse;
  Partition coarse_part;
  bool coarsened = false;

  while (level_gain >= config.tau &&
         static_cast<int>(result.trace.levels.size()) < config.max_levels) {
    if (!coarsened) {
      auto [cg, mapping] = coarsen(graph, level_part);
      coarse = std::move(cg);
      vertex_to_super = std::move(mapping);
      coarsened = true;
    } else {
      auto [cg, mapping] = coarsen(coarse, coarse_part);
      coarse = std::move(cg);
      for (VertexId& s : vertex_to_super) s = mapping[s];
    }
    coarse_part = Partition::singletons(coarse);
    LevelStats level = local_move_phase(coarse, coarse_part, kEvalAll, config);
    const double q_new = modularity(coarse, coarse_part);
    level.modularity_after = q_new;
    level_gain = q_new - q;
    q = q_new;
    result.trace.levels.push_back(std::move(level));
  }

  std::vector<CommunityId> final_labels(graph.vertex_count());
  if (!coarsened) {
    final_labels = level0_labels;
  } else {
    // final coarse community of each original vertex; merged groups adopt the
    // smallest level-0 label among their members
    constexpr CommunityId kUnset = static_cast<CommunityId>(-1);
    std::vector<CommunityId> group_label(coarse.vertex_count(), kUnset);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      const CommunityId group = coarse_part.community_of(vertex_to_super[v]);
      if (group_label[group] == kUnset || level0_labels[v] < group_label[group]) {
        group_label[group] = level0_labels[v];
      }
    }
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      final_labels[v] = group_label[coarse_part.community_of(vertex_to_super[v])];
    }
  }
  result.partition = Partition::from_labels(graph, final_labels);
  return result;
}

}  // namespace dyncomm
