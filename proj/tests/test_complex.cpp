#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cei/classify.hpp"
#include "cei/complex.hpp"
#include "cei/errors.hpp"
#include "oracles.hpp"

using namespace cei;

namespace {

VertexSet vs(std::initializer_list<int> labels) { return VertexSet::from_labels(labels); }

std::vector<VertexSet> facets_of(const SimplicialComplex& c) {
  return {c.facets().begin(), c.facets().end()};
}

Graph k_n(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

const Graph kTwoK2 = Graph::from_labels(4, {{1, 2}, {3, 4}});
const Graph kP4 = Graph::from_labels(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph kP3K2 = Graph::from_labels(5, {{1, 2}, {2, 3}, {4, 5}});
const Graph kStar = Graph::from_labels(4, {{1, 2}, {1, 3}, {1, 4}});

}  // namespace

TEST_CASE("SimplicialComplex basics") {
  const SimplicialComplex c(4, {vs({1, 2}), vs({1}), vs({2, 3}), vs({1, 2})});
  CHECK(facets_of(c) == std::vector{vs({1, 2}), vs({2, 3})});
  CHECK(c.vertices() == vs({1, 2, 3}));
  CHECK(c.dimension() == 1);
  CHECK(c.has_face(vs({3})));
  CHECK(c.has_face(VertexSet{}));
  CHECK_FALSE(c.has_face(vs({1, 3})));
  CHECK(c.is_facet(vs({2, 3})));
  CHECK_FALSE(c.is_facet(vs({2})));
  CHECK(c.faces().size() == 6);

  const auto v = SimplicialComplex::void_complex(3);
  const auto e = SimplicialComplex::irrelevant(3);
  CHECK(v.is_void());
  CHECK(v.faces().empty());
  CHECK(v.dimension() == -2);
  CHECK_FALSE(e.is_void());
  CHECK(e.faces() == std::vector{VertexSet{}});
  CHECK(e.dimension() == -1);
  CHECK(v != e);
}

TEST_CASE("gamma_complex") {
  CHECK(facets_of(gamma_complex(kTwoK2)) ==
        std::vector{vs({1, 3}), vs({1, 4}), vs({2, 3}), vs({2, 4})});
  CHECK(facets_of(gamma_complex(k_n(4))) == std::vector{vs({1}), vs({2}), vs({3}), vs({4})});
  CHECK(facets_of(gamma_complex(kP4)) == std::vector{vs({1, 3}), vs({2, 3}), vs({2, 4})});
  CHECK_THROWS_AS(gamma_complex(Graph::from_labels(4, {{1, 2}})), ValidationError);
}

TEST_CASE("stanley_reisner_ideal") {
  CHECK(stanley_reisner_ideal(gamma_complex(kTwoK2)) == complementary_edge_ideal(kTwoK2));
  CHECK(stanley_reisner_ideal(gamma_complex(kP4)) == complementary_edge_ideal(kP4));
  CHECK(stanley_reisner_ideal(SimplicialComplex::simplex(VertexSet::full(4), 4)).is_zero());
  const SqfIdeal unit = stanley_reisner_ideal(SimplicialComplex::void_complex(3));
  CHECK(unit.size() == 1);
  CHECK(unit.generators()[0] == SqfMonomial{});
}

TEST_CASE("gamma complex round trip and facet count on all graphs n <= 6") {
  for (int n = 4; n <= 6; ++n) {
    for_each_graph(n, [](const Graph& g) {
      const SimplicialComplex gamma = gamma_complex(g);
      const SqfIdeal ideal = complementary_edge_ideal(g);
      REQUIRE(stanley_reisner_ideal(gamma) == ideal);
      REQUIRE(stanley_reisner_complex(ideal) == gamma);
      const std::size_t expected = nonedges(g).size() + triangles(g).size();
      REQUIRE(gamma.facets().size() == expected);
      if (is_triangle_free(g)) REQUIRE(gamma.facets().size() == nonedges(g).size());
    });
  }
}

TEST_CASE("facet_complex") {
  CHECK(facets_of(facet_complex(kTwoK2)) == std::vector{vs({1, 2}), vs({3, 4})});
  CHECK(facets_of(facet_complex(kP3K2)) == std::vector{vs({1, 2, 3}), vs({1, 4, 5}), vs({3, 4, 5})});
  const SimplicialComplex k4 = facet_complex(k_n(4));
  CHECK(k4.facets().size() == 6);
  for (VertexSet f : k4.facets()) CHECK(f.size() == 2);
}

TEST_CASE("induced_subcomplex") {
  const SimplicialComplex gamma = gamma_complex(kTwoK2);
  const SimplicialComplex restricted = induced_subcomplex(gamma, vs({2, 3, 4}));
  CHECK(facets_of(restricted) == std::vector{vs({2, 3}), vs({2, 4})});
  // restricting a nonvoid complex to ∅ leaves the empty face
  CHECK(induced_subcomplex(gamma, VertexSet{}) == SimplicialComplex::irrelevant(4));
  CHECK(induced_subcomplex(gamma, gamma.vertices()) == gamma);
  CHECK(induced_subcomplex(SimplicialComplex::void_complex(4), vs({1})).is_void());
}

TEST_CASE("induced_subcollection") {
  const SimplicialComplex lambda = facet_complex(kP3K2);
  CHECK(facets_of(induced_subcollection(lambda, vs({1, 3, 4, 5}))) ==
        std::vector{vs({1, 4, 5}), vs({3, 4, 5})});
  const SimplicialComplex two = facet_complex(kTwoK2);
  CHECK(facets_of(induced_subcollection(two, vs({1, 2}))) == std::vector{vs({1, 2})});
  CHECK(induced_subcollection(two, vs({1, 3})).is_void());
}

TEST_CASE("is_cone") {
  const SimplicialComplex gamma = gamma_complex(kTwoK2);
  CHECK(is_cone(induced_subcomplex(gamma, vs({2, 3, 4}))) == 1);  // 0-based vertex 2
  CHECK_FALSE(is_cone(gamma).has_value());
  CHECK(is_cone(SimplicialComplex::simplex(vs({1, 2, 3}), 4)) == 0);
  CHECK_FALSE(is_cone(SimplicialComplex::void_complex(4)).has_value());
  CHECK_FALSE(is_cone(SimplicialComplex::irrelevant(4)).has_value());
}

TEST_CASE("is_well_ordered_facet_cover") {
  const SimplicialComplex sub = induced_subcollection(facet_complex(kP3K2), vs({1, 3, 4, 5}));
  CHECK(is_well_ordered_facet_cover(sub, std::vector{vs({1, 4, 5}), vs({3, 4, 5})}));

  const SimplicialComplex two = facet_complex(kTwoK2);
  CHECK_FALSE(is_well_ordered_facet_cover(two, std::vector{vs({1, 2})}));
  CHECK(is_well_ordered_facet_cover(two, std::vector{vs({1, 2}), vs({3, 4})}));

  // Λ of the star has facets {3,4},{2,4},{2,3}
  const SimplicialComplex star = facet_complex(kStar);
  CHECK(facets_of(star) == std::vector{vs({2, 3}), vs({2, 4}), vs({3, 4})});
  CHECK_FALSE(is_well_ordered_facet_cover(star, std::vector{vs({2, 3}), vs({2, 4}), vs({3, 4})}));
  // H = {3,4}: F_1 = {2,3} ⊆ H ∪ F_2
  CHECK(is_well_ordered_facet_cover(star, std::vector{vs({2, 3}), vs({2, 4})}));
  CHECK_THROWS_AS(is_well_ordered_facet_cover(star, std::vector{vs({1, 2}), vs({3, 4})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_well_ordered_facet_cover(star, std::vector{vs({2, 3}), vs({2, 3})}),
                  std::invalid_argument);
}

TEST_CASE("well-ordering condition can fail") {
  // path 1-2-3-4-5 of edges; ({1,2},{4,5}) misses 3
  const SimplicialComplex path(5, {vs({1, 2}), vs({2, 3}), vs({3, 4}), vs({4, 5})});
  CHECK_FALSE(is_well_ordered_facet_cover(path, std::vector{vs({1, 2}), vs({4, 5})}));
  // H = {2,3}: F_2 = {3,4} ⊆ H ∪ {4,5}
  CHECK(is_well_ordered_facet_cover(path, std::vector{vs({1, 2}), vs({3, 4}), vs({4, 5})}));
  // H = {3,4}: F_1 = {1,2} ⊄ {3,4} ∪ {2,3} ∪ {4,5}, F_2 = {2,3} ⊄ H ∪ {4,5}
  CHECK_FALSE(
      is_well_ordered_facet_cover(path, std::vector{vs({1, 2}), vs({2, 3}), vs({4, 5})}));
  // order ({2,3},{1,2},{4,5}): F_1 = {2,3} ⊆ {3,4} ∪ {1,2} ∪ {4,5}
  CHECK(is_well_ordered_facet_cover(path, std::vector{vs({2, 3}), vs({1, 2}), vs({4, 5})}));
}

TEST_CASE("find_well_ordered_cover") {
  const SimplicialComplex sub = induced_subcollection(facet_complex(kP3K2), vs({1, 3, 4, 5}));
  CHECK(find_well_ordered_cover(sub, 2) == std::vector{vs({1, 4, 5}), vs({3, 4, 5})});
  CHECK(find_well_ordered_cover(facet_complex(kTwoK2), 2) == std::vector{vs({1, 2}), vs({3, 4})});
  CHECK_FALSE(find_well_ordered_cover(facet_complex(kTwoK2), 1).has_value());
  const SimplicialComplex one = SimplicialComplex::simplex(vs({1, 2, 3}), 4);
  CHECK(find_well_ordered_cover(one, 1) == std::vector{vs({1, 2, 3})});
  const SimplicialComplex path(5, {vs({1, 2}), vs({2, 3}), vs({3, 4}), vs({4, 5})});
  CHECK(find_well_ordered_cover(path, 3) == std::vector{vs({1, 2}), vs({3, 4}), vs({4, 5})});
  CHECK(find_well_ordered_cover(SimplicialComplex::void_complex(3), 2) == std::nullopt);
}

TEST_CASE("found covers satisfy the checker") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    std::vector<VertexSet> facets;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < count; ++k) {
      const std::uint64_t m = rng() & ((std::uint64_t{1} << n) - 1);
      if (m != 0) facets.push_back(VertexSet(m));
    }
    if (facets.empty()) continue;
    const SimplicialComplex c(n, facets);
    const int k_max = static_cast<int>(c.facets().size());
    const auto found = find_well_ordered_cover(c, k_max);
    if (found) REQUIRE(is_well_ordered_facet_cover(c, *found));
  }
}
