#include "dyncomm/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dyncomm/errors.hpp"

namespace dyncomm {

double GainTable::weight_to(CommunityId c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, CommunityId id) { return e.community < id; });
  return (it != entries_.end() && it->community == c) ? it->weight : 0.0;
}

Partition Partition::singletons(const DynamicGraph& graph) {
  Partition p;
  const std::size_t n = graph.vertex_count();
  p.assignment_.resize(n);
  p.total_degree_.resize(n);
  p.member_count_.assign(n, 1);
  for (VertexId v = 0; v < n; ++v) {
    p.assignment_[v] = v;
    p.total_degree_[v] = graph.weighted_degree(v);
  }
  return p;
}

Partition Partition::from_labels(const DynamicGraph& graph, std::span<const CommunityId> labels) {
  if (labels.size() != graph.vertex_count()) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  Partition p;
  p.assignment_.assign(labels.begin(), labels.end());
  CommunityId max_label = 0;
  for (CommunityId c : labels) max_label = std::max(max_label, c);
  const std::size_t spaces = labels.empty() ? 0 : static_cast<std::size_t>(max_label) + 1;
  p.total_degree_.assign(spaces, 0.0);
  p.member_count_.assign(spaces, 0);
  for (VertexId v = 0; v < labels.size(); ++v) {
    p.total_degree_[labels[v]] += graph.weighted_degree(v);
    p.member_count_[labels[v]] += 1;
  }
  return p;
}

void Partition::move(const DynamicGraph& graph, VertexId v, CommunityId target) {
  if (target > community_count()) {
    throw std::out_of_range("move target " + std::to_string(target) + " beyond label space");
  }
  if (target == community_count()) {
    total_degree_.push_back(0.0);
    member_count_.push_back(0);
  }
  const CommunityId from = assignment_[v];
  if (from == target) return;
  const double d = graph.weighted_degree(v);
  total_degree_[from] -= d;
  member_count_[from] -= 1;
  total_degree_[target] += d;
  member_count_[target] += 1;
  assignment_[v] = target;
}

std::vector<CommunityId> Partition::compact() {
  constexpr CommunityId kUnseen = static_cast<CommunityId>(-1);
  std::vector<CommunityId> remap(community_count(), kUnseen);
  CommunityId next = 0;
  for (CommunityId& label : assignment_) {
    if (remap[label] == kUnseen) remap[label] = next++;
    label = remap[label];
  }
  std::vector<double> degree(next, 0.0);
  std::vector<std::size_t> count(next, 0);
  for (CommunityId old = 0; old < remap.size(); ++old) {
    if (remap[old] != kUnseen) {
      degree[remap[old]] = total_degree_[old];
      count[remap[old]] = member_count_[old];
    }
  }
  total_degree_ = std::move(degree);
  member_count_ = std::move(count);
  return remap;
}

double modularity(const DynamicGraph& graph, const Partition& part) {
  const double m = graph.total_weight();
  if (!(m > 0.0)) throw std::domain_error("modularity undefined: graph has no edge weight");
  double intra = 0.0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const CommunityId c = part.community_of(v);
    for (const Neighbor& nb : graph.neighbors(v)) {
      if (nb.id == v) {
        intra += 2.0 * nb.weight;
      } else if (part.community_of(nb.id) == c) {
        intra += nb.weight;  // visited from both endpoints: counts twice in total
      }
    }
  }
  double degree_sq = 0.0;
  for (CommunityId c = 0; c < part.community_count(); ++c) {
    const double a = part.community_degree(c);
    degree_sq += a * a;
  }
  return (intra - degree_sq / (2.0 * m)) / (2.0 * m);
}

GainTable gain_table(const DynamicGraph& graph, const Partition& part, VertexId i) {
  std::vector<GainTable::Entry> entries;
  for (const Neighbor& nb : graph.neighbors(i)) {
    if (nb.id == i) continue;  // self-loop weight moves with i
    const CommunityId c = part.community_of(nb.id);
    auto it = std::lower_bound(entries.begin(), entries.end(), c,
                               [](const GainTable::Entry& e, CommunityId id) { return e.community < id; });
    if (it != entries.end() && it->community == c) {
      it->weight += nb.weight;
    } else {
      entries.insert(it, {c, nb.weight});
    }
  }
  const CommunityId home = part.community_of(i);
  auto it = std::lower_bound(entries.begin(), entries.end(), home,
                             [](const GainTable::Entry& e, CommunityId id) { return e.community < id; });
  if (it == entries.end() || it->community != home) entries.insert(it, {home, 0.0});
  return GainTable(home, std::move(entries));
}

double gain(const DynamicGraph& graph, const Partition& part, VertexId i, CommunityId target,
            const GainTable& gains) {
  if (target >= part.community_count()) {
    throw std::out_of_range("unknown community " + std::to_string(target));
  }
  const CommunityId home = part.community_of(i);
  if (target == home) return 0.0;
  const double m = graph.total_weight();
  const double d = graph.weighted_degree(i);
  const double e_target = gains.weight_to(target);
  const double e_home = gains.weight_to(home);
  const double a_home_less = part.community_degree(home) - d;
  const double a_target = part.community_degree(target);
  return (e_target - e_home) / m + d * (a_home_less - a_target) / (2.0 * m * m);
}

}  // namespace dyncomm
