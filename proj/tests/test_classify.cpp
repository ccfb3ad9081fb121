#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cei/classify.hpp"
#include "cei/serialize.hpp"
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
const Graph kP3K2 = Graph::from_labels(5, {{1, 2}, {2, 3}, {4, 5}});

const ClaimResult& claim(const ConsistencyResult& r, const std::string& name) {
  const auto it = std::find_if(r.claims.begin(), r.claims.end(),
                               [&](const ClaimResult& c) { return c.claim == name; });
  REQUIRE(it != r.claims.end());
  return *it;
}

}  // namespace

TEST_CASE("mode names") {
  CHECK(to_string(Mode::Corrected) == "corrected");
  CHECK(to_string(Mode::PaperLiteral) == "paper-literal");
  CHECK(parse_mode("paper-literal") == Mode::PaperLiteral);
  CHECK_THROWS_AS(parse_mode("literal"), std::invalid_argument);
}

TEST_CASE("describe") {
  const GraphDescriptors d = describe(kP3K2);
  CHECK(d.n == 5);
  CHECK(d.edge_count == 3);
  CHECK(d.component_count == 2);
  CHECK(d.forest);
  CHECK_FALSE(d.tree);
  CHECK_FALSE(d.connected);
  CHECK_FALSE(d.disjoint_union_of_edges);
  CHECK(describe(kC4).has_cycle);
  CHECK_FALSE(describe(kC4).chordal);
}

TEST_CASE("classify_graph") {
  const Predictions p4 = classify_graph(kP4, Mode::Corrected).predicted;
  CHECK(p4.cohen_macaulay);
  CHECK(p4.level);
  CHECK(p4.linear_resolution);
  CHECK_FALSE(p4.gorenstein);
  CHECK(p4.pd == 1);
  CHECK(p4.reg == 2);

  const Predictions p3k2 = classify_graph(kP3K2, Mode::Corrected).predicted;
  CHECK(p3k2.cohen_macaulay);
  CHECK_FALSE(p3k2.level);
  CHECK_FALSE(p3k2.pure_resolution);
  CHECK(p3k2.pd == 1);
  CHECK(p3k2.reg == 4);

  const Predictions c4 = classify_graph(kC4, Mode::Corrected).predicted;
  CHECK_FALSE(c4.cohen_macaulay);
  CHECK(c4.linear_resolution);
  CHECK(c4.pure_resolution);
  CHECK(c4.unmixed);
  CHECK_FALSE(c4.sequentially_cm);
  CHECK(c4.pd == 2);
  CHECK(c4.reg == 2);

  // disconnected with a cycle: triangle plus an edge
  const Graph k3k2 = Graph::from_labels(5, {{1, 2}, {1, 3}, {2, 3}, {4, 5}});
  const Predictions tk = classify_graph(k3k2, Mode::Corrected).predicted;
  CHECK(tk.pd == 2);
  CHECK(tk.reg == 4);

  for (int n = 4; n <= 7; ++n) {
    const Predictions corrected = classify_graph(k_n(n), Mode::Corrected).predicted;
    const Predictions literal = classify_graph(k_n(n), Mode::PaperLiteral).predicted;
    CHECK(corrected.pd == 2);
    CHECK(literal.pd == 1);
    CHECK(corrected.reg == n - 2);
    CHECK(literal.reg == n - 2);
  }
  CHECK_THROWS(classify_graph(Graph::from_labels(4, {{1, 2}}), Mode::Corrected));
}

TEST_CASE("verify_graph examples") {
  const ConsistencyResult two = verify_graph(kTwoK2, FieldSpec::gf(2));
  CHECK(two.all_match());
  CHECK(two.graph6 == "C`");
  // the Koszul comparison is reported only when requested
  REQUIRE(two.claims.size() + 1 == claim_names().size());
  for (std::size_t k = 0; k < two.claims.size(); ++k) CHECK(two.claims[k].claim == claim_names()[k]);
  CHECK(claim_names().back() == "koszul_oracle");

  CHECK(verify_graph(k_n(4), FieldSpec::gf(2), Mode::Corrected).all_match());
  const ConsistencyResult literal = verify_graph(k_n(4), FieldSpec::gf(2), Mode::PaperLiteral);
  CHECK_FALSE(literal.all_match());
  for (const ClaimResult& c : literal.claims) {
    CAPTURE(c.claim);
    CHECK(c.match == (c.claim != "pd_reg_classification"));
  }
  const ClaimResult& pdreg = claim(literal, "pd_reg_classification");
  CHECK(pdreg.predicted == "(1,2)");
  CHECK(pdreg.computed == "(2,2)");

  const ConsistencyResult paw = verify_graph(kPaw, FieldSpec::rationals());
  CHECK(paw.all_match());
  CHECK(claim(paw, "unmixed").computed == "false");
}

TEST_CASE("analyze_graph") {
  const GraphAnalysis a = analyze_graph(kP4, FieldSpec::gf(2), {Mode::Corrected, true});
  REQUIRE(a.koszul.has_value());
  CHECK(*a.koszul == a.betti);
  REQUIRE(a.order.has_value());
  CHECK(a.properties.linear_resolution);
  CHECK(claim(a.consistency, "koszul_oracle").match);
  CHECK(a.consistency.claims.size() == claim_names().size());
  const GraphAnalysis b = analyze_graph(kTwoK2, FieldSpec::gf(2));
  CHECK_FALSE(b.order.has_value());
  CHECK_FALSE(b.koszul.has_value());
}

TEST_CASE("sweep over n = 4") {
  SweepOptions options;
  options.n_min = 4;
  options.n_max = 4;
  const SweepReport corrected = sweep(options);
  CHECK(corrected.graph_count == 41);
  CHECK(corrected.mismatches.empty());
  for (const auto& [name, tally] : corrected.tallies.at("GF(2)")) {
    CAPTURE(name);
    CHECK(tally.pass == 41);
    CHECK(tally.fail == 0);
  }

  options.mode = Mode::PaperLiteral;
  const SweepReport literal = sweep(options);
  REQUIRE(literal.mismatches.size() == 1);
  CHECK(literal.mismatches[0].graph6 == "C~");
  CHECK(literal.mismatches[0].claim == "pd_reg_classification");
  CHECK(literal.mismatches[0].computed == "(2,2)");

  SweepOptions bad;
  bad.n_min = 3;
  bad.n_max = 4;
  CHECK_THROWS_AS(sweep(bad), std::invalid_argument);
  bad.n_min = 5;
  CHECK_THROWS_AS(sweep(bad), std::invalid_argument);
  bad.n_min = 4;
  bad.n_max = 8;
  CHECK_THROWS_AS(sweep(bad), std::invalid_argument);
}

TEST_CASE("graph counts match inclusion-exclusion") {
  for (int n = 1; n <= 7; ++n) {
    long count = 0;
    for_each_graph(n, [&](const Graph& g) {
      for (int v = 0; v < n; ++v) REQUIRE(g.degree(v) > 0);
      ++count;
    });
    CHECK(count == oracle::count_graphs_without_isolated(n));
  }
}

TEST_CASE("sweep output does not depend on the worker count") {
  SweepOptions options;
  options.n_min = 4;
  options.n_max = 5;
  options.mode = Mode::PaperLiteral;
  options.cross_field = true;
  const SweepReport one = sweep(options);
  options.workers = 8;
  const SweepReport eight = sweep(options);
  CHECK(to_json(one, false).dump() == to_json(eight, false).dump());
  CHECK(one.graph_count == 41 + 768);
  CHECK(one.fields == std::vector<std::string>{"GF(2)", "GF(3)", "QQ"});
  CHECK(one.field_disagreements.empty());
  // K4 and K5, once per field
  CHECK(one.mismatches.size() == 6);
}

TEST_CASE("gorenstein_census") {
  CHECK(gorenstein_census(4) == std::vector<std::string>{"CK", "CQ", "C`"});
  CHECK(gorenstein_census(5).empty());
  CHECK(gorenstein_census(5, FieldSpec::rationals()).empty());
}
