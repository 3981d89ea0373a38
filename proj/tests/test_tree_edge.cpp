#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "domw/errors.hpp"
#include "domw/instances.hpp"
#include "domw/oracles.hpp"
#include "domw/tree_edge.hpp"
#include "test_support.hpp"

using namespace domw;

namespace {

TreeEdgeInstance path(std::vector<std::optional<Weight>> weights) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < weights.size(); ++v) edges.emplace_back(v, v + 1);
  return {HostTree(weights.size() + 1, edges), std::move(weights)};
}

// r - a - b as 0 - 1 - 2; line-graph ids 0 = (r,a), 1 = (a,b).
const TreeEdgeInstance path2 = path({2, 5});
const TreeEdgeInstance stick = path({4, 1});

RootedEdgeTree rooted(const TreeEdgeInstance& inst) {
  auto parts = reduce_to_full_tree(inst);
  REQUIRE(parts.size() == 1);
  return parts.front();
}

}  // namespace

TEST_CASE("reduction to the edge set F") {
  const auto full = reduce_to_full_tree(path({1, 1, 1}));
  REQUIRE(full.size() == 1);
  CHECK(full[0].edge_count() == 3);

  const auto cut = reduce_to_full_tree(path({1, std::nullopt}));
  REQUIRE(cut.size() == 1);
  CHECK(cut[0].edge_count() == 1);

  // Center 0, rays 0-1-2, 0-3-4, 0-5-6; only the outer edges are in F.
  const TreeEdgeInstance rays{HostTree(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}),
                              {std::nullopt, 1, std::nullopt, 1, std::nullopt, 1}};
  const auto parts = reduce_to_full_tree(rays);
  CHECK(parts.size() == 3);
  for (const auto& p : parts) CHECK(p.edge_count() == 1);

  CHECK_THROWS_AS(reduce_to_full_tree(path({std::nullopt})), EmptyEdgeSet);
}

TEST_CASE("rooting") {
  const RootedEdgeTree edge({{3, 7, 0, 1}}, 7);
  CHECK(choose_root(edge) == 3);

  const auto t = rooted(path({1, 1}));
  CHECK(t.root() == 0);
  CHECK(t.depth(0) == 0);
  CHECK(t.depth(1) == 1);
  CHECK(t.height(0) == 1);
  CHECK(t.height(1) == 0);
  CHECK(t.neighborhood(0) == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(t.in_edge(0).has_value());
  CHECK(t.in_edge(2) == 1);
}

TEST_CASE("bottom-up function") {
  CHECK(bottom_up_f(rooted(path({3}))) == DominationFunction({0}));
  CHECK(bottom_up_f(rooted(path2)) == DominationFunction({5, 0}));
  CHECK(bottom_up_f(rooted(stick)) == DominationFunction({1, 0}));
}

TEST_CASE("root adjustment") {
  const auto p = rooted(path2);
  const auto pa = root_adjust(p, bottom_up_f(p));
  CHECK(pa.deficit == -3);
  CHECK(pa.g == DominationFunction({5, 0}));
  CHECK_FALSE(pa.adjusted_edge.has_value());

  const auto s = rooted(stick);
  const auto sa = root_adjust(s, bottom_up_f(s));
  CHECK(sa.deficit == 3);
  CHECK(sa.g == DominationFunction({4, 0}));
  CHECK(sa.adjusted_edge == 0);

  const auto e = rooted(path({6}));
  const auto ea = root_adjust(e, bottom_up_f(e));
  CHECK(ea.deficit == 6);
  CHECK(ea.g == DominationFunction(std::vector<Weight>{6}));
}

TEST_CASE("layered extraction") {
  const auto s = rooted(stick);
  const auto sa = root_adjust(s, bottom_up_f(s));
  const auto sx = extract_dispersed_tree(s, sa.g, sa.deficit, sa.adjusted_edge);
  CHECK(sx.dispersed == std::vector<std::size_t>{0});
  REQUIRE(sx.layers.deleted.size() == 1);
  CHECK(sx.layers.deleted[0] == std::vector<std::size_t>{0, 1});

  const auto p = rooted(path2);
  const auto pa = root_adjust(p, bottom_up_f(p));
  CHECK(extract_dispersed_tree(p, pa.g, pa.deficit, pa.adjusted_edge).dispersed ==
        std::vector<std::size_t>{1});

  const auto e = rooted(path({6}));
  const auto ea = root_adjust(e, bottom_up_f(e));
  CHECK(extract_dispersed_tree(e, ea.g, ea.deficit, ea.adjusted_edge).dispersed ==
        std::vector<std::size_t>{0});
}

TEST_CASE("solve_tree fixtures") {
  CHECK(solve_tree(path({6})).value == 6);
  const auto c = solve_tree(path2);
  CHECK(c.value == 5);
  CHECK(c.dispersed == VertexSet{1});

  const auto star = example_nontu_star();
  const auto g = line_graph(star);
  const auto s = solve_tree(star);
  CHECK(s.value == brute_gamma(g).value);
  CHECK(s.value == brute_rho(g).value);
  CHECK(verify_certificate(g, s));
}

TEST_CASE("property: layers account for g and partition the edges") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = gen_tree(seed, 1 + seed % 9, 5);
    for (const auto& t : reduce_to_full_tree(inst)) {
      const auto adj = root_adjust(t, bottom_up_f(t));
      const auto ex = extract_dispersed_tree(t, adj.g, adj.deficit, adj.adjusted_edge);
      std::vector<int> seen(t.edge_count(), 0);
      Weight chosen_weight = 0;
      for (std::size_t k = 0; k < ex.layers.deleted.size(); ++k) {
        Weight gk = 0;
        Weight wk = 0;
        for (std::size_t e : ex.layers.deleted[k]) {
          ++seen[e];
          gk += adj.g[e];
        }
        for (std::size_t e : ex.layers.chosen[k]) wk += t.edges()[e].weight;
        CHECK(gk == wk);
        chosen_weight += wk;
      }
      for (int count : seen) CHECK(count == 1);
      CHECK(chosen_weight == adj.g.total());
    }
  }
}

TEST_CASE("property: value is independent of the root and matches the oracles") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = gen_tree(seed, 1 + seed % 9, 5);
    const auto g = line_graph(inst);
    const auto gamma = testing::enumerated_gamma(g);
    CHECK(gamma == testing::enumerated_rho(g));
    for (Vertex r = 0; r < inst.tree.size(); ++r) {
      const auto c = solve_tree(inst, r);
      CHECK(c.value == gamma);
      CHECK(verify_certificate(g, c));
    }
  }
}
