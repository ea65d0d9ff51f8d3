#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dyncomm/graph.hpp"

namespace dyncomm {

using CommunityId = std::uint32_t;

/// For a fixed vertex i: the edge weight from i into every community
/// adjacent to i, plus i's own community (possibly with weight 0).
/// Self-loop weight is excluded from the entries; it travels with i and
/// cancels out of every gain.
class GainTable {
 public:
  struct Entry {
    CommunityId community;
    double weight;  // e_{i -> community}
  };

  GainTable(CommunityId home, std::vector<Entry> entries) : home_(home), entries_(std::move(entries)) {}

  CommunityId home() const { return home_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// e_{i -> c}; 0 when i has no edge into c.
  double weight_to(CommunityId c) const;

 private:
  CommunityId home_;
  std::vector<Entry> entries_;  // ascending by community id
};

/// Vertex -> community assignment plus the per-community aggregates
/// (total weighted degree a_C and member count) that make single moves and
/// gain queries O(1).
class Partition {
 public:
  Partition() = default;

  static Partition singletons(const DynamicGraph& graph);

  /// Builds assignment + aggregates from explicit labels (one per vertex).
  /// The label space is 0..max_label; gaps are allowed and show up as empty
  /// communities until compact().
  static Partition from_labels(const DynamicGraph& graph, std::span<const CommunityId> labels);

  std::size_t vertex_count() const { return assignment_.size(); }

  /// Size of the label space (live and empty labels).
  std::size_t community_count() const { return total_degree_.size(); }

  CommunityId community_of(VertexId v) const { return assignment_[v]; }
  const std::vector<CommunityId>& labels() const { return assignment_; }

  /// a_C: sum of weighted degrees over members.
  double community_degree(CommunityId c) const { return total_degree_[c]; }
  std::size_t community_size(CommunityId c) const { return member_count_[c]; }

  /// Reassigns v to target, updating aggregates on both sides. target may be
  /// one past the current label space, which opens a fresh community.
  void move(const DynamicGraph& graph, VertexId v, CommunityId target);

  /// Renumbers live communities densely by first occurrence (vertex scan
  /// order). Returns the old-label -> new-label map (empty labels map to
  /// themselves dropped; their slots are not represented).
  std::vector<CommunityId> compact();

 private:
  std::vector<CommunityId> assignment_;
  std::vector<double> total_degree_;
  std::vector<std::size_t> member_count_;
};

/// Q of Eq-style modularity: (1/2m)(sum_i e_{i->C(i)} - (1/2m) sum_C a_C^2),
/// with self-loop weight counted twice in the intra term. Throws on an
/// edgeless graph (m = 0), where modularity is undefined.
double modularity(const DynamicGraph& graph, const Partition& part);

/// Materializes e_{i->C} for every community adjacent to i plus C(i).
GainTable gain_table(const DynamicGraph& graph, const Partition& part, VertexId i);

/// Modularity delta for moving i from C(i) to target, exact against Eq-1
/// recomputation:
///   dQ = (e_{i->B} - e_{i->A\{i}}) / m + d_w(i) (a_{A\{i}} - a_B) / (2 m^2)
/// Staying put (target == C(i)) is defined as 0.
double gain(const DynamicGraph& graph, const Partition& part, VertexId i, CommunityId target, const GainTable& gains);

}  // namespace dyncomm
