#include "dyncomm/graph.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "dyncomm/errors.hpp"
#include "test_support.hpp"

using namespace dyncomm;

TEST_CASE("single-edge batch populates weights and degrees") {
  DynamicGraph g(2);
  g.apply_batch(DeltaBatch::from_edges({{0, 1, 1.0}}), 0);
  CHECK(g.total_weight() == doctest::Approx(1.0));
  CHECK(g.edge_count() == 1);
  CHECK(g.weighted_degree(0) == doctest::Approx(1.0));
  CHECK(g.weighted_degree(1) == doctest::Approx(1.0));
}

TEST_CASE("re-adding an existing edge is rejected") {
  DynamicGraph g(2);
  g.apply_batch(DeltaBatch::from_edges({{0, 1, 1.0}}), 0);
  CHECK_THROWS_AS(g.apply_batch(DeltaBatch::from_edges({{0, 1, 1.0}}), 0), InputError);
}

TEST_CASE("path graph built by successive batches") {
  DynamicGraph g;
  g.apply_batch(DeltaBatch::from_edges({{0, 1, 1.0}}), 2);
  g.apply_batch(DeltaBatch::from_edges({{1, 2, 1.0}}), 1);
  CHECK(g.total_weight() == doctest::Approx(2.0));
  CHECK(g.weighted_degree(0) == doctest::Approx(1.0));
  CHECK(g.weighted_degree(1) == doctest::Approx(2.0));
  CHECK(g.weighted_degree(2) == doctest::Approx(1.0));
}

TEST_CASE("batch validation errors") {
  CHECK_THROWS_AS(DeltaBatch::from_edges({{0, 0, 1.0}}), InputError);       // self-loop
  CHECK_THROWS_AS(DeltaBatch::from_edges({{0, 1, 0.0}}), InputError);      // non-positive weight
  CHECK_THROWS_AS(DeltaBatch::from_edges({{0, 1, 1.0}, {1, 0, 2.0}}), InputError);  // duplicate in batch

  DynamicGraph g(2);
  CHECK_THROWS_AS(g.apply_batch(DeltaBatch::from_edges({{0, 5, 1.0}}), 0), InputError);  // out of range
}

TEST_CASE("neighbors are reported in ascending order") {
  DynamicGraph g(3);
  g.apply_batch(DeltaBatch::from_edges({{1, 2, 1.0}, {0, 1, 1.0}}), 0);
  auto nbs = g.neighbors(1);
  REQUIRE(nbs.size() == 2);
  CHECK(nbs[0].id == 0);
  CHECK(nbs[1].id == 2);
  CHECK(g.neighbors(0).size() == 1);
}

TEST_CASE("isolated vertex has no neighbors") {
  DynamicGraph g(3);
  g.apply_batch(DeltaBatch::from_edges({{0, 1, 1.0}}), 0);
  CHECK(g.neighbors(2).empty());
  CHECK(g.weighted_degree(2) == 0.0);
}

TEST_CASE("self-loop from coarsening reported once, degree counts it twice") {
  DynamicGraph g = DynamicGraph::from_weighted_edges(2, {{0, 0, 2.0}, {0, 1, 1.0}});
  auto nbs = g.neighbors(0);
  REQUIRE(nbs.size() == 2);
  CHECK(nbs[0].id == 0);
  CHECK(nbs[0].weight == doctest::Approx(2.0));
  CHECK(g.weighted_degree(0) == doctest::Approx(5.0));  // 2*2 + 1
  CHECK(g.total_weight() == doctest::Approx(3.0));
}

TEST_CASE("degree sum equals twice the total weight after any batch sequence") {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    DynamicGraph g;
    std::vector<std::pair<VertexId, VertexId>> used;
    std::size_t n = 0;
    for (int step = 0; step < 4; ++step) {
      std::size_t grow = 2 + rng.below(5);
      std::vector<UndirectedEdge> edges;
      for (VertexId u = 0; u < n + grow; ++u) {
        for (VertexId v = u + 1; v < n + grow; ++v) {
          bool exists = std::find(used.begin(), used.end(), std::make_pair(u, v)) != used.end();
          if (!exists && rng.uniform() < 0.2) {
            edges.push_back({u, v, 0.25 + rng.uniform()});
            used.emplace_back(u, v);
          }
        }
      }
      g.apply_batch(DeltaBatch::from_edges(edges), grow);
      n += grow;
      double degree_sum = 0.0;
      for (VertexId v = 0; v < g.vertex_count(); ++v) degree_sum += g.weighted_degree(v);
      CHECK(degree_sum == doctest::Approx(2.0 * g.total_weight()).epsilon(1e-9));
    }
  }
}

TEST_CASE("apply_batch is order-independent within a batch") {
  std::vector<UndirectedEdge> edges = {{0, 1, 1.0}, {2, 3, 0.5}, {1, 2, 2.0}, {0, 3, 1.5}};
  std::vector<UndirectedEdge> shuffled = {{0, 3, 1.5}, {1, 2, 2.0}, {0, 1, 1.0}, {2, 3, 0.5}};
  DynamicGraph a(4), b(4);
  a.apply_batch(DeltaBatch::from_edges(edges), 0);
  b.apply_batch(DeltaBatch::from_edges(shuffled), 0);
  for (VertexId v = 0; v < 4; ++v) {
    auto na = a.neighbors(v);
    auto nb = b.neighbors(v);
    REQUIRE(na.size() == nb.size());
    for (std::size_t i = 0; i < na.size(); ++i) {
      CHECK(na[i].id == nb[i].id);
      CHECK(na[i].weight == nb[i].weight);
    }
  }
}

TEST_CASE("delta batch exposes sorted sources and per-source sinks") {
  auto batch = DeltaBatch::from_edges({{3, 1, 1.0}, {0, 3, 1.0}});
  auto sources = batch.sources();
  CHECK(sources == std::vector<VertexId>{0, 1, 3});
  auto sinks3 = batch.sinks_of(3);
  REQUIRE(sinks3.size() == 2);
  CHECK(sinks3[0].sink == 0);
  CHECK(sinks3[1].sink == 1);
  CHECK(batch.sinks_of(2).empty());
  CHECK(batch.edge_count() == 2);
}
