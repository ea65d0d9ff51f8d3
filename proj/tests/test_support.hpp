#pragma once

// Test-only oracles, kept independent of the library's incremental
// bookkeeping: everything here recomputes from scratch.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dyncomm/graph.hpp"
#include "dyncomm/partition.hpp"

namespace oracle {

using dyncomm::CommunityId;
using dyncomm::DynamicGraph;
using dyncomm::UndirectedEdge;
using dyncomm::VertexId;

// Direct transcription of the modularity definition from an edge scan:
// Q = (1/2m)(sum_i e_{i->C(i)} - (1/2m) sum_C a_C^2), self-loops twice in
// the intra term and once in m.
inline double modularity(const DynamicGraph& g, const std::vector<CommunityId>& labels) {
  const double m = g.total_weight();
  double intra = 0.0;
  std::map<CommunityId, double> a;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    a[labels[v]] += g.weighted_degree(v);
    for (const auto& nb : g.neighbors(v)) {
      if (nb.id == v) {
        intra += 2.0 * nb.weight;
      } else if (labels[nb.id] == labels[v]) {
        intra += nb.weight;
      }
    }
  }
  double sq = 0.0;
  for (const auto& [c, ac] : a) sq += ac * ac;
  return (intra - sq / (2.0 * m)) / (2.0 * m);
}

// Gain by full recomputation: Q(after moving i into target) - Q(before).
inline double move_gain(const DynamicGraph& g, const std::vector<CommunityId>& labels, VertexId i,
                        CommunityId target) {
  if (labels[i] == target) return 0.0;
  std::vector<CommunityId> moved = labels;
  moved[i] = target;
  return modularity(g, moved) - modularity(g, labels);
}

// Enumerates all set partitions of n items (restricted growth strings) and
// returns the labels achieving maximum oracle modularity.
inline std::pair<double, std::vector<CommunityId>> best_partition(const DynamicGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<CommunityId> labels(n, 0), best_labels(n, 0);
  double best_q = modularity(g, labels);
  // restricted growth: labels[0] = 0; labels[i] <= 1 + max(labels[0..i-1])
  while (true) {
    // advance to the next restricted growth string
    std::size_t pos = n;
    while (pos-- > 1) {
      CommunityId limit = 0;
      for (std::size_t j = 0; j < pos; ++j) limit = std::max(limit, labels[j]);
      if (labels[pos] <= limit) {
        ++labels[pos];
        for (std::size_t j = pos + 1; j < n; ++j) labels[j] = 0;
        break;
      }
      if (pos == 1) return {best_q, best_labels};
    }
    if (n <= 1) return {best_q, best_labels};
    const double q = modularity(g, labels);
    if (q > best_q) {
      best_q = q;
      best_labels = labels;
    }
  }
}

// Deterministic xorshift-based generator for test inputs; avoids any
// implementation-defined std distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 2654435769u + 1) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Random connected-ish graph with at least one edge; weights drawn from the
// given set (unit when the set is empty keeps gains on a rational lattice).
inline DynamicGraph random_graph(Rng& rng, std::size_t n, double edge_prob,
                                 const std::vector<double>& weights = {}) {
  std::vector<UndirectedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.uniform() < edge_prob) {
        double w = weights.empty() ? 1.0 : weights[rng.below(weights.size())];
        edges.push_back({u, v, w});
      }
    }
  }
  if (edges.empty() && n >= 2) edges.push_back({0, 1, 1.0});
  return DynamicGraph::from_weighted_edges(n, edges);
}

inline std::vector<CommunityId> random_labels(Rng& rng, std::size_t n, std::size_t max_communities) {
  std::vector<CommunityId> labels(n);
  for (auto& c : labels) c = static_cast<CommunityId>(rng.below(max_communities));
  // make the label space dense enough to be a valid partition over 0..max
  return labels;
}

}  // namespace oracle
