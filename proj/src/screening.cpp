#include "dyncomm/screening.hpp"

#include <algorithm>
#include <string>

#include "dyncomm/errors.hpp"

namespace dyncomm {

void ScreenSet::add(VertexId v, ScreenReason reason) {
  if (reasons_[v] == 0) ++size_;
  reasons_[v] |= reason;
}

std::vector<VertexId> ScreenSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (VertexId v = 0; v < reasons_.size(); ++v) {
    if (reasons_[v] != 0) out.push_back(v);
  }
  return out;
}

std::string ScreenSet::provenance_dump() const {
  static constexpr struct {
    ScreenReason bit;
    const char* name;
  } kTags[] = {
      {kReasonSource, "source"},
      {kReasonChosenSink, "chosen-sink"},
      {kReasonNeighborOfSource, "neighbor-of-source"},
      {kReasonSinkCommunityMember, "sink-community-member"},
  };
  std::string out;
  for (VertexId v = 0; v < reasons_.size(); ++v) {
    if (reasons_[v] == 0) continue;
    out += std::to_string(v);
    out += ' ';
    bool first = true;
    for (const auto& tag : kTags) {
      if (reasons_[v] & tag.bit) {
        if (!first) out += ',';
        out += tag.name;
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

ScreenSet screen(const DynamicGraph& graph, const Partition& prev_part, const DeltaBatch& batch) {
  const std::size_t n = graph.vertex_count();
  if (!batch.empty() && batch.max_vertex() >= n) {
    throw InputError("batch references vertex " + std::to_string(batch.max_vertex()) +
                     " absent from the graph");
  }

  // member lists per previous community, for the C(j*) inclusions
  std::vector<std::vector<VertexId>> members(prev_part.community_count());
  for (VertexId v = 0; v < n; ++v) members[prev_part.community_of(v)].push_back(v);

  ScreenSet selected(n);
  for (VertexId i : batch.sources()) {
    const GainTable gains_i = gain_table(graph, prev_part, i);

    // distinct sink communities; multiple sinks in one community share the
    // same gain, so evaluate per community and keep the smallest sink as
    // its representative (sinks come sorted ascending)
    constexpr VertexId kNone = static_cast<VertexId>(-1);
    VertexId best_sink = kNone;
    CommunityId best_community = 0;
    double best_gain = 0.0;
    for (const OrderedPair& entry : batch.sinks_of(i)) {
      const CommunityId c = prev_part.community_of(entry.sink);
      if (best_sink != kNone && c == best_community) continue;
      const double g = gain(graph, prev_part, i, c, gains_i);
      if (best_sink == kNone || g > best_gain || (g == best_gain && c < best_community)) {
        best_sink = entry.sink;
        best_community = c;
        best_gain = g;
      }
    }
    if (best_sink == kNone || !(best_gain > 0.0)) continue;

    const double reverse_gain =
        gain(graph, prev_part, best_sink, prev_part.community_of(i), gain_table(graph, prev_part, best_sink));
    if (!(best_gain >= reverse_gain)) continue;  // defer to j* as source

    selected.add(i, kReasonSource);
    selected.add(best_sink, kReasonChosenSink);
    for (const Neighbor& nb : graph.neighbors(i)) {
      if (nb.id != i) selected.add(nb.id, kReasonNeighborOfSource);
    }
    for (VertexId v : members[best_community]) selected.add(v, kReasonSinkCommunityMember);
  }
  return selected;
}

}  // namespace dyncomm
