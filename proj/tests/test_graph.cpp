#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cei/errors.hpp"
#include "cei/graph.hpp"
#include "oracles.hpp"

using namespace cei;

namespace {

Graph k_n(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

const Graph kTwoK2 = Graph::from_labels(4, {{1, 2}, {3, 4}});
const Graph kP4 = Graph::from_labels(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph kC4 = Graph::from_labels(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
const Graph kPaw = Graph::from_labels(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});

}  // namespace

TEST_CASE("vertex set lexicographic order") {
  CHECK(lex_less(VertexSet::from_labels({1, 2}), VertexSet::from_labels({1, 3})));
  CHECK(lex_less(VertexSet::from_labels({1, 2}), VertexSet::from_labels({1, 2, 3})));
  CHECK_FALSE(lex_less(VertexSet::from_labels({1, 2, 3}), VertexSet::from_labels({1, 2})));
  CHECK(lex_less(VertexSet::from_labels({1, 4}), VertexSet::from_labels({2, 3})));
  CHECK(lex_less(VertexSet::from_labels({1, 2, 4}), VertexSet::from_labels({1, 3})));
  CHECK_FALSE(lex_less(VertexSet::from_labels({2}), VertexSet::from_labels({2})));
  CHECK(lex_less(VertexSet{}, VertexSet::from_labels({5})));
  CHECK(to_string(VertexSet::from_labels({3, 1})) == "{1,3}");
}

TEST_CASE("parse_graph edge list") {
  const Graph g = parse_graph("4\n1 2\n3 4", GraphFormat::EdgeList);
  CHECK(g == kTwoK2);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 2);

  SUBCASE("blank lines and CRLF are tolerated") {
    CHECK(parse_edge_list("4\r\n\n1 2\r\n3 4\r\n") == kTwoK2);
  }
  SUBCASE("loop is a validation error") {
    try {
      parse_edge_list("4\n1 1");
      FAIL("expected a loop error");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationError::Kind::Loop);
      CHECK(e.vertex() == 1);
    }
  }
  SUBCASE("duplicate edge") {
    CHECK_THROWS_AS(parse_edge_list("4\n1 2\n2 1"), ValidationError);
  }
  SUBCASE("out of range label") {
    CHECK_THROWS_AS(parse_edge_list("4\n1 5"), ValidationError);
  }
  SUBCASE("garbage reports its byte offset") {
    try {
      parse_edge_list("4\n1 2\n3 x4");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 8);
    }
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("4\n1 2 3"), ParseError);
  }
  CHECK(parse_edge_list(to_edge_list(kPaw)) == kPaw);
}

TEST_CASE("graph6 against the reference encoder") {
  CHECK(oracle::graph6_encode(4, {{1, 2}, {3, 4}}) == "C`");
  const Graph g = parse_graph("C`", GraphFormat::Graph6);
  CHECK(g == kTwoK2);
  CHECK(to_graph6(g) == "C`");
  CHECK(parse_graph6(">>graph6<<C`\n") == kTwoK2);

  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);      // body too short
  CHECK_THROWS_AS(parse_graph6("C``"), ParseError);    // body too long
  CHECK_THROWS_AS(parse_graph6("D?@"), ParseError);    // nonzero padding bit
  CHECK_THROWS_AS(parse_graph6("~?@d"), ParseError);   // n > 62 form

  // Random graphs up to the order cap: emit matches the reference encoder and
  // parse inverts emit.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const Graph h = oracle::random_graph(rng, n, 0.3);
    std::vector<std::pair<int, int>> labelled;
    for (const Edge& e : h.edges()) labelled.push_back({e.u + 1, e.v + 1});
    const std::string text = to_graph6(h);
    REQUIRE(text == oracle::graph6_encode(n, labelled));
    REQUIRE(parse_graph6(text) == h);
  }
}

TEST_CASE("validate_standing_assumptions") {
  CHECK_NOTHROW(validate_standing_assumptions(k_n(4)));
  try {
    validate_standing_assumptions(Graph::from_labels(3, {{1, 2}, {2, 3}, {1, 3}}));
    FAIL("expected AmbientTooSmall");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::AmbientTooSmall);
  }
  try {
    validate_standing_assumptions(Graph::from_labels(4, {{1, 2}, {2, 3}}));
    FAIL("expected IsolatedVertex");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationError::Kind::IsolatedVertex);
    CHECK(e.vertex() == 4);
  }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(kTwoK2) ==
        std::vector{VertexSet::from_labels({1, 2}), VertexSet::from_labels({3, 4})});
  CHECK(connected_components(kP4) == std::vector{VertexSet::from_labels({1, 2, 3, 4})});
  const Graph p3k2 = Graph::from_labels(5, {{1, 2}, {2, 3}, {4, 5}});
  CHECK(connected_components(p3k2) ==
        std::vector{VertexSet::from_labels({1, 2, 3}), VertexSet::from_labels({4, 5})});
}

TEST_CASE("is_chordal") {
  CHECK_FALSE(is_chordal(kC4));
  CHECK(is_chordal(kP4));
  CHECK(is_chordal(kTwoK2));
  CHECK(is_chordal(k_n(4)));
  CHECK(is_chordal(kPaw));
  CHECK_FALSE(is_chordal(Graph::from_labels(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})));
}

TEST_CASE("is_chordal agrees with the induced-cycle oracle for n <= 7") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = Graph::from_edge_mask(n, mask);
      REQUIRE(is_chordal(g) == !oracle::has_long_induced_cycle(g));
    }
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const Graph g = oracle::random_graph(rng, 7, 0.2 + 0.6 * (trial % 5) / 5.0);
    REQUIRE(is_chordal(g) == !oracle::has_long_induced_cycle(g));
  }
}

TEST_CASE("triangles") {
  CHECK(triangles(k_n(4)) == std::vector{VertexSet::from_labels({1, 2, 3}),
                                         VertexSet::from_labels({1, 2, 4}),
                                         VertexSet::from_labels({1, 3, 4}),
                                         VertexSet::from_labels({2, 3, 4})});
  CHECK(triangles(kC4).empty());
  CHECK(triangles(kPaw) == std::vector{VertexSet::from_labels({1, 2, 3})});
}

TEST_CASE("complement") {
  CHECK(complement(k_n(4)).edge_count() == 0);
  CHECK(complement(kTwoK2) == Graph::from_labels(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  CHECK(complement(complement(kP4)) == kP4);
}

TEST_CASE("structural predicates") {
  CHECK(is_forest(kP4));
  CHECK(is_tree(kP4));
  CHECK(is_forest(kTwoK2));
  CHECK_FALSE(is_tree(kTwoK2));
  CHECK(is_disjoint_union_of_edges(kTwoK2));
  CHECK_FALSE(is_disjoint_union_of_edges(kP4));
  CHECK(is_triangle_free(kC4));
  CHECK_FALSE(is_triangle_free(kPaw));
  CHECK(is_complete(k_n(5)));
  CHECK(has_cycle(kC4));
  CHECK_FALSE(is_connected(kTwoK2));
}

TEST_CASE("graph invariants over random graphs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.35);
    REQUIRE(complement(complement(g)) == g);
    REQUIRE(static_cast<int>(triangles(g).size()) == oracle::count_triangles(g));
    REQUIRE(is_forest(g) ==
            (g.edge_count() == n - static_cast<int>(connected_components(g).size())));
    REQUIRE(parse_graph6(to_graph6(g)) == g);
    if (n <= 11) REQUIRE(Graph::from_edge_mask(n, g.edge_mask()) == g);
  }
}

TEST_CASE("line graph") {
  const Graph line = line_graph(kP4);
  CHECK(line == Graph::from_labels(3, {{1, 2}, {2, 3}}));
  CHECK(line_graph(kTwoK2).edge_count() == 0);
}
