#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "domw/errors.hpp"
#include "domw/graph.hpp"
#include "domw/instances.hpp"
#include "domw/oracles.hpp"
#include "test_support.hpp"

using namespace domw;

namespace {

// Split triangle ids: a_1..a_3 = 0..2, b_1..b_3 = 3..5.
constexpr Vertex a1 = 0, a2 = 1, a3 = 2, b1 = 3, b2 = 4, b3 = 5;

WeightedGraph random_graph(std::uint64_t seed) {
  switch (seed % 3) {
    case 0: return intersection_graph(gen_interval(seed, 1 + seed % 9, 12, 5));
    case 1: return line_graph(gen_tree(seed, 1 + seed % 9, 5));
    default: return to_graph(gen_subtrees(seed, 3 + seed % 6, 1 + seed % 9, 5));
  }
}

}  // namespace

TEST_CASE("graph construction validates input") {
  const std::vector<Edge> loop{{0, 0}};
  const std::vector<Edge> dangling{{0, 2}};
  const std::vector<Edge> parallel{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(WeightedGraph({1, 1}, loop), InvalidInput);
  CHECK_THROWS_AS(WeightedGraph({1, 1}, dangling), UnknownVertex);
  CHECK_THROWS_AS(WeightedGraph({1, 0}, {}), InvalidInput);
  const WeightedGraph g({1, 2}, parallel);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.weight(1) == 2);
}

TEST_CASE("host tree rejects cycles and wrong edge counts") {
  CHECK_THROWS_AS(HostTree(3, {{0, 1}, {1, 2}, {2, 0}}), InvalidInput);
  CHECK_THROWS_AS(HostTree(3, {{0, 1}}), InvalidInput);
  CHECK_NOTHROW(HostTree(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("intersection graph of subtrees") {
  const HostTree path(2, {{0, 1}});
  const std::vector<Weight> w{1, 1};
  const std::vector<VertexSet> disjoint{{0}, {1}};
  const std::vector<VertexSet> sharing{{0, 1}, {1}};
  CHECK(build_intersection_graph(path, disjoint, w).edge_count() == 0);
  CHECK(build_intersection_graph(path, sharing, w).edge_count() == 1);
  CHECK(to_graph(example_forked_star()).size() == 15);

  const std::vector<VertexSet> empty{{}};
  const std::vector<VertexSet> gap{{0, 2}};
  const HostTree path3(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(build_intersection_graph(path3, empty, std::vector<Weight>{1}), EmptySubtree);
  CHECK_THROWS_AS(build_intersection_graph(path3, gap, std::vector<Weight>{1}),
                  DisconnectedSubtree);
}

TEST_CASE("closed neighborhoods on the split triangle") {
  const auto g = example_split_triangle().graph;
  const WeightedGraph isolated({3}, {});
  CHECK(closed_neighborhood(isolated, 0) == VertexSet{0});
  CHECK(closed_neighborhood(g, b1) == VertexSet{a1, a2, b1});
  CHECK(closed_neighborhood(g, a1) == VertexSet{a1, a2, a3, b1, b3});
}

TEST_CASE("distance") {
  const auto g = example_split_triangle().graph;
  CHECK(distance(g, b2, b2) == 0);
  CHECK(distance(g, a1, b2) == 2);
  const WeightedGraph two({1, 1}, {});
  CHECK_FALSE(distance(two, 0, 1).has_value());
}

TEST_CASE("dispersed sets") {
  const auto g = example_split_triangle().graph;
  const VertexSet empty;
  const VertexSet single{b2};
  const VertexSet close{a1, b2};
  CHECK(is_dispersed(g, empty));
  CHECK(is_dispersed(g, single));
  CHECK_FALSE(is_dispersed(g, close));

  const auto forked = to_graph(example_forked_star());
  const VertexSet light{0, 1, 2};
  CHECK(is_dispersed(forked, light));
}

TEST_CASE("set sums and domination") {
  const auto iv3 = intersection_graph(example_three_intervals());
  const DominationFunction f({0, 3, 2});
  const VertexSet first_two{0, 1};
  CHECK(set_sum(f, VertexSet{}) == 0);
  CHECK(set_sum(f, first_two) == 3);
  CHECK(set_sum(DominationFunction({1, 1, 1, 1}), VertexSet{0, 1, 2, 3}) == 4);

  const auto g = example_split_triangle().graph;
  CHECK(is_w_dominating(g, DominationFunction(std::vector<Weight>(g.weights().begin(),
                                                                  g.weights().end()))));
  CHECK_FALSE(is_w_dominating(g, DominationFunction(6)));
  CHECK(is_w_dominating(g, DominationFunction({2, 2, 2, 0, 0, 0})));
  CHECK_THROWS_AS(DominationFunction({1, -1}), InvalidInput);
}

TEST_CASE("certificate verification") {
  const WeightedGraph single({7}, {});
  CHECK(verify_certificate(single, {DominationFunction(std::vector<Weight>{7}), {0}, 7}));

  const auto g = example_split_triangle().graph;
  const auto bad = verify_certificate(g, {DominationFunction({2, 2, 2, 0, 0, 0}), {a1}, 6});
  CHECK_FALSE(bad);
  CHECK(bad.defect == CertificateDefect::ValueMismatch);

  const auto iv3 = intersection_graph(example_three_intervals());
  CHECK(verify_certificate(iv3, {DominationFunction({0, 3, 2}), {0, 2}, 5}));
  CHECK(verify_certificate(iv3, {DominationFunction({0, 3, 1}), {0, 2}, 4}).defect ==
        CertificateDefect::NotDominating);
  CHECK(verify_certificate(iv3, {DominationFunction({0, 3, 2}), {0, 1}, 5}).defect ==
        CertificateDefect::NotDispersed);
  CHECK(verify_certificate(iv3, {DominationFunction({0, 3}), {0}, 3}).defect ==
        CertificateDefect::Malformed);
}

TEST_CASE("property: adjacency is symmetric and irreflexive") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph(seed);
    for (Vertex v = 0; v < g.size(); ++v) {
      for (Vertex u : g.neighbors(v)) {
        CHECK(u != v);
        CHECK(g.adjacent(u, v));
      }
    }
  }
}

TEST_CASE("property: distance and dispersion agree with all-pairs shortest paths") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph(seed);
    const auto d = testing::floyd_warshall(g, g.size() + 1);
    for (Vertex u = 0; u < g.size(); ++u) {
      for (Vertex v = 0; v < g.size(); ++v) {
        const auto got = distance(g, u, v);
        CHECK(got.value_or(g.size() + 1) == d[u][v]);
        const VertexSet pair = make_vertex_set({u, v});
        // Dispersed pairs have disjoint closed neighborhoods.
        CHECK(is_dispersed(g, pair) == (u == v || d[u][v] >= 3));
      }
    }
  }
}

TEST_CASE("property: weak duality between dominating functions and dispersed sets") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_graph(seed);
    if (g.size() > 8) continue;
    CHECK(testing::enumerated_rho(g) <= testing::enumerated_gamma(g));
  }
}

TEST_CASE("brace construction lists values") {
  CHECK(DominationFunction({7}).domain_size() == 1);
  CHECK(DominationFunction({7})[0] == 7);
  CHECK(DominationFunction(std::size_t{3}).domain_size() == 3);
}
