#include "dyncomm/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dyncomm/errors.hpp"

namespace dyncomm {

namespace {

bool pair_order(const OrderedPair& a, const OrderedPair& b) {
  return a.source != b.source ? a.source < b.source : a.sink < b.sink;
}

}  // namespace

DeltaBatch DeltaBatch::from_edges(const std::vector<UndirectedEdge>& edges) {
  DeltaBatch batch;
  batch.pairs_.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    if (e.u == e.v) {
      throw InputError("batch edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is a self-loop");
    }
    if (!(e.weight > 0.0)) {
      throw InputError("batch edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has non-positive weight");
    }
    batch.pairs_.push_back({e.u, e.v, e.weight});
    batch.pairs_.push_back({e.v, e.u, e.weight});
  }
  std::sort(batch.pairs_.begin(), batch.pairs_.end(), pair_order);
  for (std::size_t i = 1; i < batch.pairs_.size(); ++i) {
    if (batch.pairs_[i].source == batch.pairs_[i - 1].source && batch.pairs_[i].sink == batch.pairs_[i - 1].sink) {
      throw InputError("duplicate edge " + std::to_string(batch.pairs_[i].source) + "-" +
                       std::to_string(batch.pairs_[i].sink) + " in batch");
    }
  }
  return batch;
}

std::vector<VertexId> DeltaBatch::sources() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i == 0 || pairs_[i].source != pairs_[i - 1].source) out.push_back(pairs_[i].source);
  }
  return out;
}

std::span<const OrderedPair> DeltaBatch::sinks_of(VertexId source) const {
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), source,
                             [](const OrderedPair& p, VertexId s) { return p.source < s; });
  auto hi = std::upper_bound(pairs_.begin(), pairs_.end(), source,
                             [](VertexId s, const OrderedPair& p) { return s < p.source; });
  return {&*lo, static_cast<std::size_t>(hi - lo)};
}

VertexId DeltaBatch::max_vertex() const {
  VertexId m = std::numeric_limits<VertexId>::max();
  if (pairs_.empty()) return m;
  m = 0;
  for (const auto& p : pairs_) m = std::max({m, p.source, p.sink});
  return m;
}

DynamicGraph DynamicGraph::from_weighted_edges(std::size_t vertex_count, const std::vector<UndirectedEdge>& edges) {
  DynamicGraph g(vertex_count);
  for (const auto& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) throw InputError("edge endpoint out of range");
    if (!(e.weight > 0.0)) throw InputError("edge weight must be positive");
    if (e.u == e.v) {
      g.adjacency_[e.u].push_back({e.u, e.weight});
      g.weighted_degree_[e.u] += 2.0 * e.weight;
    } else {
      g.adjacency_[e.u].push_back({e.v, e.weight});
      g.adjacency_[e.v].push_back({e.u, e.weight});
      g.weighted_degree_[e.u] += e.weight;
      g.weighted_degree_[e.v] += e.weight;
    }
    g.total_weight_ += e.weight;
    ++g.edge_count_;
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
  return g;
}

double DynamicGraph::weighted_degree(VertexId v) const {
  if (v >= vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  return weighted_degree_[v];
}

std::span<const Neighbor> DynamicGraph::neighbors(VertexId v) const {
  if (v >= vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& n, VertexId id) { return n.id < id; });
  return it != list.end() && it->id == v;
}

void DynamicGraph::add_half_edge(VertexId from, VertexId to, double weight) {
  auto& list = adjacency_[from];
  auto it = std::lower_bound(list.begin(), list.end(), to,
                             [](const Neighbor& n, VertexId id) { return n.id < id; });
  list.insert(it, {to, weight});
  weighted_degree_[from] += weight;
}

void DynamicGraph::apply_batch(const DeltaBatch& batch, std::size_t new_vertex_count) {
  const std::size_t n = vertex_count() + new_vertex_count;
  if (!batch.empty() && batch.max_vertex() >= n) {
    throw InputError("batch references vertex " + std::to_string(batch.max_vertex()) + " but graph has " +
                     std::to_string(n) + " vertices");
  }
  for (const auto& p : batch.ordered_pairs()) {
    if (p.source < vertex_count() && has_edge(p.source, p.sink)) {
      throw InputError("edge " + std::to_string(p.source) + "-" + std::to_string(p.sink) +
                       " already present in graph");
    }
  }
  adjacency_.resize(n);
  weighted_degree_.resize(n, 0.0);
  for (const auto& p : batch.ordered_pairs()) {
    add_half_edge(p.source, p.sink, p.weight);
    if (p.source < p.sink) {  // count each undirected edge once
      total_weight_ += p.weight;
      ++edge_count_;
    }
  }
}

}  // namespace dyncomm
