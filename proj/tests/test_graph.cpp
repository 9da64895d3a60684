#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "spectre/graph.hpp"
#include "spectre/graph_io.hpp"
#include "support/oracles.hpp"

using namespace spectre;
namespace st = spectre::testing;

namespace {

Graph triangle() { return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("parse_edge_list basics") {
  SUBCASE("two edges") {
    auto p = parse_edge_list("1 2\n2 3");
    CHECK(p.graph.node_count() == 3);
    CHECK(p.graph.edge_count() == 2);
    CHECK(p.dropped_self_loops == 0);
  }
  SUBCASE("duplicates collapse") {
    auto p = parse_edge_list("a b\nb a\na b");
    CHECK(p.graph.node_count() == 2);
    CHECK(p.graph.edge_count() == 1);
  }
  SUBCASE("self-loops dropped with count") {
    auto p = parse_edge_list("1 1\n1 2");
    CHECK(p.graph.node_count() == 2);
    CHECK(p.graph.edge_count() == 1);
    CHECK(p.dropped_self_loops == 1);
  }
  SUBCASE("comments and blank lines") {
    auto p = parse_edge_list("# header\n\n% pajek style\n  \nx y\n");
    CHECK(p.graph.node_count() == 2);
    CHECK(p.graph.edge_count() == 1);
  }
  SUBCASE("malformed line reports its number") {
    try {
      parse_edge_list("1 2\n1 2 3\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("tabs as separators") {
    auto p = parse_edge_list("a\tb\r\nb\tc\r\n");
    CHECK(p.graph.node_count() == 3);
    CHECK(p.graph.edge_count() == 2);
  }
}

TEST_CASE("neighbors") {
  const Graph tri = triangle();
  auto n1 = tri.neighbors(1);
  CHECK(std::vector<NodeId>(n1.begin(), n1.end()) == std::vector<NodeId>{0, 2});

  const Graph with_isolated = Graph::from_edges(3, {{0, 1}});
  CHECK(with_isolated.neighbors(2).empty());

  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto mid = path.neighbors(1);
  CHECK(std::vector<NodeId>(mid.begin(), mid.end()) == std::vector<NodeId>{0, 2});

  CHECK_THROWS_AS(tri.neighbors(3), InvalidParam);
}

TEST_CASE("pair_neighbors") {
  const Graph tri = triangle();

  SUBCASE("triangle product") {
    std::set<std::pair<NodeId, NodeId>> got;
    for (auto p : pair_neighbors(tri, tri, 0, 0)) got.insert(p);
    const std::set<std::pair<NodeId, NodeId>> want{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    CHECK(got == want);
  }

  SUBCASE("isolated node yields empty") {
    const Graph iso = Graph::from_edges(3, {{0, 1}});
    CHECK(pair_neighbors(iso, tri, 2, 0).begin() == pair_neighbors(iso, tri, 2, 0).end());
  }

  SUBCASE("count equals degree product on random graphs") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
      const Graph a = st::random_graph(8, 0.4, rng);
      const Graph b = st::random_graph(9, 0.4, rng);
      for (NodeId i = 0; i < a.node_count(); ++i) {
        for (NodeId j = 0; j < b.node_count(); ++j) {
          std::size_t count = 0;
          for (auto p : pair_neighbors(a, b, i, j)) {
            (void)p;
            ++count;
          }
          CHECK(count == std::size_t(a.degree(i)) * b.degree(j));
        }
      }
    }
  }

  SUBCASE("never yields the origin pair") {
    Rng rng(7);
    const Graph a = st::random_graph(10, 0.5, rng);
    for (NodeId i = 0; i < a.node_count(); ++i)
      for (auto [u, v] : pair_neighbors(a, a, i, i)) CHECK(!(u == i && v == i));
  }
}

TEST_CASE("largest_connected_component") {
  SUBCASE("connected graph keeps all nodes") {
    const auto lcc = largest_connected_component(triangle());
    CHECK(lcc == std::vector<NodeId>{0, 1, 2});
  }
  SUBCASE("bigger component wins") {
    const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(largest_connected_component(g) == std::vector<NodeId>{0, 1, 2});
  }
  SUBCASE("tie broken toward the smallest node id") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(largest_connected_component(g) == std::vector<NodeId>{0, 1});
  }
  SUBCASE("empty graph") {
    CHECK(largest_connected_component(Graph{}).empty());
  }
}

TEST_CASE("induced_subgraph") {
  const Graph tri = triangle();

  SUBCASE("full node set copies the graph") {
    const std::vector<NodeId> all{0, 1, 2};
    auto sub = induced_subgraph(tri, all);
    CHECK(sub.graph.edge_count() == 3);
    CHECK(sub.to_parent == all);
    sub.graph.check_invariants();
  }
  SUBCASE("pair of triangle nodes keeps one edge") {
    const std::vector<NodeId> two{1, 2};
    auto sub = induced_subgraph(tri, two);
    CHECK(sub.graph.node_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.has_edge(0, 1));
  }
  SUBCASE("empty set") {
    auto sub = induced_subgraph(tri, std::vector<NodeId>{});
    CHECK(sub.graph.node_count() == 0);
    CHECK(sub.graph.edge_count() == 0);
  }
  SUBCASE("node outside graph") {
    const std::vector<NodeId> bad{0, 5};
    CHECK_THROWS_AS(induced_subgraph(tri, bad), InvalidParam);
  }
  SUBCASE("LCC then induce is idempotent on connected graphs") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
      const Graph g = st::random_connected_graph(12, 6, rng);
      auto lcc = largest_connected_component(g);
      CHECK(lcc.size() == g.node_count());
      auto sub = induced_subgraph(g, lcc);
      CHECK(sub.graph.edge_count() == g.edge_count());
      CHECK(largest_connected_component(sub.graph).size() == g.node_count());
    }
  }
}

TEST_CASE("structural invariants hold for constructed graphs") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Graph g = st::random_graph(15, 0.3, rng);
    g.check_invariants();
    std::size_t degree_sum = 0;
    for (NodeId i = 0; i < g.node_count(); ++i) degree_sum += g.degree(i);
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("parse -> serialize -> parse round-trips") {
  Rng rng(5);
  for (int t = 0; t < 25; ++t) {
    const Graph g = st::random_graph(10, 0.35, rng);
    NodeLabelMap labels;
    for (NodeId i = 0; i < g.node_count(); ++i)
      labels.add_or_get("v" + std::to_string(i * 7));

    std::ostringstream text;
    write_edge_list(text, g, labels);
    auto back = parse_edge_list(text.str());

    CHECK(back.graph.edge_count() == g.edge_count());
    g.for_each_edge([&](NodeId i, NodeId j) {
      const auto a = back.labels.id_of(labels.label_of(i));
      const auto b = back.labels.id_of(labels.label_of(j));
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      CHECK(back.graph.has_edge(*a, *b));
    });
  }
}

TEST_CASE("relabel validates permutations") {
  const Graph tri = triangle();
  const std::vector<NodeId> good{2, 0, 1};
  const Graph moved = relabel(tri, good);
  CHECK(moved.edge_count() == 3);

  const std::vector<NodeId> dup{0, 0, 1};
  CHECK_THROWS_AS(relabel(tri, dup), InvalidParam);
  const std::vector<NodeId> small{0, 1};
  CHECK_THROWS_AS(relabel(tri, small), InvalidParam);
}

TEST_CASE("node set files") {
  std::istringstream in("# ids\nalpha\nbeta\n\ngamma\n");
  const auto labels = parse_node_set(in);
  CHECK(labels == std::vector<std::string>{"alpha", "beta", "gamma"});

  std::istringstream bad("one two\n");
  CHECK_THROWS_AS(parse_node_set(bad), ParseError);
}
