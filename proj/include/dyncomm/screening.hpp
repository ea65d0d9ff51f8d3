#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyncomm/graph.hpp"
#include "dyncomm/partition.hpp"

namespace dyncomm {

/// Why a vertex was placed in the re-evaluation set. A member can carry
/// several reasons (bitwise or).
enum ScreenReason : std::uint8_t {
  kReasonSource = 1,               // the triggering source i
  kReasonChosenSink = 2,           // the selected sink j*
  kReasonNeighborOfSource = 4,     // member of Gamma(i)
  kReasonSinkCommunityMember = 8,  // member of C(j*)
};

/// The re-evaluation subset R_t selected from a batch.
class ScreenSet {
 public:
  explicit ScreenSet(std::size_t vertex_count) : reasons_(vertex_count, 0) {}

  void add(VertexId v, ScreenReason reason);

  bool contains(VertexId v) const { return reasons_[v] != 0; }
  std::uint8_t reasons(VertexId v) const { return reasons_[v]; }
  std::size_t size() const { return size_; }
  std::size_t vertex_count() const { return reasons_.size(); }

  /// Members in ascending id order.
  std::vector<VertexId> members() const;

  /// One "vertex reason[,reason...]" line per member, for diagnostics.
  std::string provenance_dump() const;

 private:
  std::vector<std::uint8_t> reasons_;
  std::size_t size_ = 0;
};

/// Selects the vertices to re-evaluate at this step. For every source i of
/// the batch (ascending): pick the sink j* whose previous community
/// maximizes the gain of moving i there (ties: smaller community label,
/// then smaller sink id). If that gain beats the reverse move (>=) and is
/// strictly positive, add {i, j*}, all of Gamma(i) in graph, and every
/// member of j*'s previous community. Never mutates prev_part.
///
/// graph must already contain the batch edges; prev_part must label every
/// vertex of graph (new vertices carry fresh singleton labels).
ScreenSet screen(const DynamicGraph& graph, const Partition& prev_part, const DeltaBatch& batch);

}  // namespace dyncomm
