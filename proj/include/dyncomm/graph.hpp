#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dyncomm {

using VertexId = std::uint32_t;

struct Neighbor {
  VertexId id;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// One ordered (source, sink) entry of a batch. Each undirected new edge
/// {i, j} contributes two entries, (i, j) and (j, i), with equal weight.
struct OrderedPair {
  VertexId source;
  VertexId sink;
  double weight;
};

struct UndirectedEdge {
  VertexId u;
  VertexId v;
  double weight = 1.0;
};

/// The new-edge set of one time step, kept sorted by (source, sink) so the
/// per-source groups (the sources S and the sink lists T(i)) fall out of a
/// linear scan.
class DeltaBatch {
 public:
  DeltaBatch() = default;

  /// Builds the two ordered entries per undirected edge. Rejects self-loops,
  /// duplicate edges within the batch, and non-positive weights.
  static DeltaBatch from_edges(const std::vector<UndirectedEdge>& edges);

  const std::vector<OrderedPair>& ordered_pairs() const { return pairs_; }

  /// Number of undirected edges in the batch.
  std::size_t edge_count() const { return pairs_.size() / 2; }

  bool empty() const { return pairs_.empty(); }

  /// Distinct sources in ascending order.
  std::vector<VertexId> sources() const;

  /// Sink entries for one source, ascending by sink id.
  std::span<const OrderedPair> sinks_of(VertexId source) const;

  /// Largest vertex id referenced, or -1 cast to VertexId when empty.
  VertexId max_vertex() const;

 private:
  std::vector<OrderedPair> pairs_;  // sorted by (source, sink)
};

/// One unit of graph growth: fresh vertices first, then the new edges.
struct StepInput {
  std::size_t new_vertex_count = 0;
  DeltaBatch batch;
};

/// Growing weighted undirected graph. Internal ids are dense 0..n-1;
/// adjacency lists are kept in ascending neighbor order so iteration is
/// deterministic. Self-loops never come in through apply_batch; they are
/// produced internally by coarsening and count twice toward the weighted
/// degree but once toward the total weight m.
class DynamicGraph {
 public:
  DynamicGraph() = default;
  explicit DynamicGraph(std::size_t vertex_count) : adjacency_(vertex_count), weighted_degree_(vertex_count, 0.0) {}

  /// Builds a graph from scratch; the only entry point that accepts
  /// self-loops (used by coarsening).
  static DynamicGraph from_weighted_edges(std::size_t vertex_count, const std::vector<UndirectedEdge>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// m: sum of distinct edge weights, self-loops counted once.
  double total_weight() const { return total_weight_; }

  /// d_w(v): incident weight, self-loops counted twice.
  double weighted_degree(VertexId v) const;

  /// Neighbors of v with weights, ascending by id. A self-loop appears once.
  std::span<const Neighbor> neighbors(VertexId v) const;

  bool has_edge(VertexId u, VertexId v) const;

  /// Grows the graph by new_vertex_count fresh vertices and the batch edges.
  /// Throws InputError on out-of-range vertices, non-positive weights, or an
  /// edge already present (a batch is E_t \ E_{t-1} by definition).
  void apply_batch(const DeltaBatch& batch, std::size_t new_vertex_count);

 private:
  void add_half_edge(VertexId from, VertexId to, double weight);

  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> weighted_degree_;
  double total_weight_ = 0.0;
  std::size_t edge_count_ = 0;
};

}  // namespace dyncomm
