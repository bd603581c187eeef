#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "wc/enumerate.hpp"
#include "wc/graph.hpp"

using namespace wc;
namespace ts = wc::testsupport;

TEST_CASE("from_edges builds the stated edge set") {
  Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK(!p3.has_edge(0, 2));

  Graph c5 = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  CHECK(c5 == cycle_graph(5));

  // duplicates collapse
  Graph e = Graph::from_edges(2, {{1, 2}, {2, 1}});
  CHECK(e.edge_count() == 1);
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{2, 2}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(17, {}), Error);
  try {
    Graph::from_edges(3, {{2, 2}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopEdge);
  }
}

TEST_CASE("graph6 basics") {
  Graph empty5 = parse_graph6("D??");
  CHECK(empty5.vertex_count() == 5);
  CHECK(empty5.edge_count() == 0);

  Graph c5 = cycle_graph(5);
  CHECK(parse_graph6(to_graph6(c5)) == c5);

  // decoded against an independent graph6 reader
  Graph g = parse_graph6("DQc");
  std::vector<std::pair<int, int>> expected = {{0, 2}, {0, 4}, {1, 3}, {3, 4}};
  CHECK(g.edges() == expected);

  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("D?"), Error);    // truncated body
  CHECK_THROWS_AS(parse_graph6("D???"), Error);  // overlong body
  CHECK_THROWS_AS(parse_graph6("Zzz"), Error);   // 28 > 16 vertices
}

TEST_CASE("graph6 round trip over every connected class with n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) CHECK(parse_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 round trip on random graphs up to 16 vertices") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 16);
    Graph g = ts::random_graph(n, 0.4, rng);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)).edge_count() == 0);
  Graph c5 = cycle_graph(5);
  CHECK(complement(complement(c5)) == c5);
  // C5 is self-complementary
  CHECK(canonical_code(complement(c5)) == canonical_code(c5));
}

TEST_CASE("induced subgraph") {
  Graph c5 = cycle_graph(5);
  Graph p = induced_subgraph(c5, {0, 1, 2});
  CHECK(p.vertex_count() == 3);
  CHECK(p.edge_count() == 2);
  CHECK(canonical_code(p) == canonical_code(path_graph(3)));

  std::vector<int> all{0, 1, 2, 3, 4};
  CHECK(induced_subgraph(c5, all) == c5);

  Graph k3 = induced_subgraph(complete_graph(5), {1, 3, 4});
  CHECK(k3 == complete_graph(3));

  CHECK_THROWS_AS(induced_subgraph(c5, {}), Error);
  CHECK_THROWS_AS(induced_subgraph(c5, {7}), Error);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(cycle_graph(5)));
  CHECK(!is_connected(Graph::from_edges0(2, {})));
  CHECK(is_connected(complete_graph(1)));
  CHECK(!is_connected(Graph::from_edges(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("clique number") {
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(complete_graph(4)) == 4);
  CHECK(clique_number(ts::chordal_not_wc_a()) == 3);
  CHECK(clique_number(ts::chordal_not_wc_b()) == 3);
  CHECK(clique_number(path_graph(2)) == 2);
  CHECK(clique_number(Graph::from_edges0(3, {})) == 1);
}

TEST_CASE("relabel") {
  Graph p3 = path_graph(3);
  CHECK(relabel(p3, Labeling::identity(3)) == p3);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = ts::random_graph(5, 0.5, rng);
    Labeling lab = ts::random_labeling(5, rng);
    CHECK(relabel(relabel(g, lab), lab.inverse()) == g);
  }

  // swapping the ends of a path of three vertices fixes the edge set
  Labeling swap13;
  swap13.label_of = {2, 1, 0};
  CHECK(relabel(p3, swap13) == p3);

  Labeling wrong;
  wrong.label_of = {0, 1};
  CHECK_THROWS_AS(relabel(p3, wrong), Error);
}

TEST_CASE("canonical code equals the exhaustive reference") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_connected(n))
      CHECK(canonical_code(g).bits == ts::canonical_bits_naive(g));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = ts::random_graph(6, 0.5, rng);
    CHECK(canonical_code(g).bits == ts::canonical_bits_naive(g));
  }
}

TEST_CASE("canonical code is a complete isomorphism invariant on examples") {
  Graph c4a = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  Graph c4b = Graph::from_edges(4, {{1, 3}, {3, 2}, {2, 4}, {4, 1}});
  CHECK(canonical_code(c4a) == canonical_code(c4b));
  CHECK(canonical_code(cycle_graph(5)) != canonical_code(path_graph(5)));
  CHECK_THROWS_AS(canonical_code(cycle_graph(10)), Error);
}

TEST_CASE("all relabelings of the 6-vertex example share one code") {
  Graph g = ts::example_wc6();
  CanonicalCode expected = canonical_code(g);
  Labeling lab = Labeling::identity(6);
  do {
    CHECK(canonical_code(relabel(g, lab)) == expected);
  } while (std::next_permutation(lab.label_of.begin(), lab.label_of.end()));
}

TEST_CASE("canonical invariance under random relabelings, n = 7") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = ts::random_graph(7, 0.45, rng);
    CanonicalCode code = canonical_code(g);
    for (int k = 0; k < 10; ++k)
      CHECK(canonical_code(relabel(g, ts::random_labeling(7, rng))) == code);
  }
}

TEST_CASE("clique number is labeling invariant") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = ts::random_graph(6, 0.5, rng);
    int w = clique_number(g);
    CHECK(clique_number(relabel(g, ts::random_labeling(6, rng))) == w);
  }
}

TEST_CASE("graph_from_code rebuilds the canonical representative") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = ts::random_graph(6, 0.5, rng);
    CanonicalCode code = canonical_code(g);
    Graph rep = graph_from_code(code);
    CHECK(canonical_code(rep) == code);
    CHECK(rep.edge_count() == g.edge_count());
  }
}

TEST_CASE("edge list text form") {
  Graph g = parse_edge_list("1-2,2-3,3-4,4-5,5-1");
  CHECK(g == cycle_graph(5));
  CHECK(parse_edge_list(to_edge_list(g), g.vertex_count()) == g);
  Graph forced = parse_edge_list("1-2", 4);
  CHECK(forced.vertex_count() == 4);
  CHECK_THROWS_AS(parse_edge_list("nope"), Error);
}

TEST_CASE("named constructions") {
  CHECK(claw_graph().edge_count() == 3);
  CHECK(claw_graph().degree(0) == 3);
  Graph bc = bigclaw_graph();
  CHECK(bc.vertex_count() == 7);
  CHECK(bc.edge_count() == 6);
  CHECK(bc.degree(0) == 3);
}

TEST_CASE("graph6 round trip over the 7-vertex classes") {
  for (const Graph& g : enumerate_connected(7)) CHECK(parse_graph6(to_graph6(g)) == g);
}
