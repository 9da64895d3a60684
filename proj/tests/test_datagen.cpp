#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "spectre/datagen.hpp"
#include "support/oracles.hpp"

using namespace spectre;
namespace st = spectre::testing;

namespace {

std::set<std::pair<NodeId, NodeId>> edge_set(const Graph& g) {
  std::set<std::pair<NodeId, NodeId>> s;
  g.for_each_edge([&](NodeId i, NodeId j) { s.emplace(i, j); });
  return s;
}

}  // namespace

TEST_CASE("subsample_edges endpoints of the dropout range") {
  Rng gen(51);
  const Graph g = st::random_connected_graph(30, 40, gen);

  Rng r0(1);
  CHECK(edge_set(subsample_edges(g, 0.0, r0)) == edge_set(g));
  Rng r1(1);
  CHECK(subsample_edges(g, 1.0, r1).edge_count() == 0);
  Rng rbad(1);
  CHECK_THROWS_AS(subsample_edges(g, -0.1, rbad), InvalidParam);
  CHECK_THROWS_AS(subsample_edges(g, 1.1, rbad), InvalidParam);
}

TEST_CASE("subsample_edges retention concentrates at (1-s)|E|") {
  Rng gen(52);
  const Graph g = preferential_attachment(40, 100, gen);  // exactly 100 edges
  REQUIRE(g.edge_count() == 100);

  double total = 0;
  Rng rng(7);
  const int trials = 1000;
  for (int t = 0; t < trials; ++t)
    total += double(subsample_edges(g, 0.3, rng).edge_count());
  const double mean = total / trials;
  CHECK(std::fabs(mean - 70.0) <= 4.5);  // 3 sigma of one Binomial(100, 0.7)
}

TEST_CASE("common_core") {
  SUBCASE("connected inputs are a fixed point") {
    Rng gen(53);
    const Graph g = st::random_connected_graph(20, 15, gen);
    const auto core = common_core(g, g);
    CHECK(core.nodes.size() == 20);
    CHECK(edge_set(core.g1) == edge_set(g));
    CHECK(edge_set(core.g2) == edge_set(g));
  }

  SUBCASE("one disconnected side reduces to its LCC in one pass") {
    // t1: path over all five nodes; t2: {0,1,2} triangle plus isolated 3,4
    const Graph t1 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const Graph t2 = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}});
    const auto core = common_core(t1, t2);
    CHECK(core.nodes == std::vector<NodeId>{0, 1, 2});
    CHECK(core.g1.edge_count() == 2);
    CHECK(core.g2.edge_count() == 3);
    CHECK(core.g1.connected());
    CHECK(core.g2.connected());
  }

  SUBCASE("mismatched universes are rejected") {
    const Graph a = Graph::from_edges(3, {{0, 1}});
    const Graph b = Graph::from_edges(4, {{0, 1}});
    CHECK_THROWS_AS(common_core(a, b), InvalidParam);
  }

  SUBCASE("stress: outputs always connected on a shared node set") {
    Rng gen(54);
    int multi_pass = 0;
    for (int t = 0; t < 200; ++t) {
      const Graph g = st::random_connected_graph(25, 12, gen);
      Rng rng(100 + t);
      const Graph t1 = subsample_edges(g, 0.25, rng);
      const Graph t2 = subsample_edges(g, 0.25, rng);
      CommonCore core;
      try {
        core = common_core(t1, t2);
      } catch (const Error&) {
        continue;  // empty intersection is a legal failure
      }
      CHECK(core.g1.node_count() == core.g2.node_count());
      CHECK(core.g1.node_count() == core.nodes.size());
      CHECK(st::bfs_connected(core.g1.node_count(), st::edges_of(core.g1)));
      CHECK(st::bfs_connected(core.g2.node_count(), st::edges_of(core.g2)));
      CHECK(std::is_sorted(core.nodes.begin(), core.nodes.end()));
      if (core.nodes.size() < t1.node_count()) ++multi_pass;
    }
    CHECK(multi_pass > 0);  // the iterative branch must actually exercise
  }
}

TEST_CASE("make_correlated_pair at s = 0 is an exact relabeling") {
  Rng gen(55);
  const Graph g = st::random_connected_graph(25, 30, gen);
  const auto pair = make_correlated_pair(g, 0.0, 9, "src");

  CHECK(pair.realized_similarity == 1.0);
  CHECK(pair.g1.node_count() == g.node_count());
  CHECK(pair.g1.edge_count() == g.edge_count());
  CHECK(pair.g2.edge_count() == g.edge_count());
  CHECK(pair.ground_truth.size() == g.node_count());
  CHECK(pair.source_name == "src");

  // aligning g2 back through the ground truth reproduces g1 exactly
  std::vector<NodeId> inverse(pair.g2.node_count());
  for (const auto& [i, j] : pair.ground_truth.pairs()) inverse[j] = i;
  CHECK(edge_set(relabel(pair.g2, inverse)) == edge_set(pair.g1));
}

TEST_CASE("realized similarity matches a post-shuffle recomputation") {
  Rng gen(56);
  const Graph g = st::random_connected_graph(40, 80, gen);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto pair = make_correlated_pair(g, 0.15, seed);
    const auto recomputed = edge_similarity(pair.g1, pair.g2, pair.ground_truth);
    REQUIRE(recomputed.has_value());
    CHECK(*recomputed == pair.realized_similarity);  // bitwise: same counts
  }
}

TEST_CASE("generation is deterministic in the seed") {
  Rng gen(57);
  const Graph g = st::random_connected_graph(30, 45, gen);
  const auto a = make_correlated_pair(g, 0.2, 1234);
  const auto b = make_correlated_pair(g, 0.2, 1234);
  CHECK(edge_set(a.g1) == edge_set(b.g1));
  CHECK(edge_set(a.g2) == edge_set(b.g2));
  CHECK(a.core_to_source == b.core_to_source);
  CHECK(std::equal(a.ground_truth.pairs().begin(), a.ground_truth.pairs().end(),
                   b.ground_truth.pairs().begin(), b.ground_truth.pairs().end()));
  CHECK(a.realized_similarity == b.realized_similarity);

  const auto c = make_correlated_pair(g, 0.2, 1235);
  CHECK((edge_set(a.g2) != edge_set(c.g2) || a.realized_similarity != c.realized_similarity));
}

TEST_CASE("connectivity and bijectivity of generated pairs") {
  Rng gen(58);
  for (int t = 0; t < 60; ++t) {
    const Graph g = st::random_connected_graph(20 + NodeId(gen.below(20)), 35, gen);
    const auto pair = make_correlated_pair(g, 0.1 + 0.2 * (t % 3), t);

    CHECK(st::bfs_connected(pair.g1.node_count(), st::edges_of(pair.g1)));
    CHECK(st::bfs_connected(pair.g2.node_count(), st::edges_of(pair.g2)));
    CHECK(pair.g1.node_count() == pair.g2.node_count());
    CHECK(pair.ground_truth.size() == pair.g1.node_count());
    std::set<NodeId> rhs;
    for (const auto& [i, j] : pair.ground_truth.pairs()) {
      CHECK(rhs.insert(j).second);
      CHECK(j < pair.g2.node_count());
    }
    pair.g1.check_invariants();
    pair.g2.check_invariants();
  }
}

TEST_CASE("mean similarity tracks 1 - s and decreases with s") {
  Rng gen(59);
  Graph g;
  // dense source so the core survives even at the larger dropouts
  g = preferential_attachment(150, 1200, gen);

  double prev_mean = 2.0;
  for (const double s : {0.0, 0.1, 0.25, 0.4}) {
    double total = 0;
    const int trials = 25;
    for (int t = 0; t < trials; ++t)
      total += make_correlated_pair(g, s, 7000 + t).realized_similarity;
    const double mean = total / trials;
    CHECK(mean < prev_mean);
    prev_mean = mean;
    if (s == 0.1) CHECK(std::fabs(mean - 0.9) < 0.03);
  }
}

TEST_CASE("generation failure after bounded retries raises a clean error") {
  const Graph p2 = Graph::from_edges(2, {{0, 1}});
  // At dropout 0.99 on a single edge nearly every draw loses the edge and the
  // core collapses to one edgeless node; seed 0 exhausts all 20 attempts.
  CHECK_THROWS_AS(make_correlated_pair(p2, 0.99, 0), Error);
  CHECK_THROWS_AS(make_correlated_pair(p2, 1.0, 0), InvalidParam);
  const Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(make_correlated_pair(split, 0.1, 0), InvalidParam);
}

TEST_CASE("preferential_attachment hits its size targets") {
  for (const auto& [n, m] : std::vector<std::pair<NodeId, std::size_t>>{
           {112, 425}, {332, 2126}, {50, 60}}) {
    Rng rng(60);
    const Graph g = preferential_attachment(n, m, rng);
    CHECK(g.node_count() == n);
    CHECK(g.edge_count() == m);
    CHECK(g.connected());
    g.check_invariants();
  }
  Rng rng(61);
  CHECK_THROWS_AS(preferential_attachment(2, 5, rng), InvalidParam);
  CHECK_THROWS_AS(preferential_attachment(10, 5, rng), InvalidParam);
  CHECK_THROWS_AS(preferential_attachment(10, 100, rng), InvalidParam);
}
