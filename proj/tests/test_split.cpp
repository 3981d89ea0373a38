#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "domw/errors.hpp"
#include "domw/instances.hpp"
#include "domw/oracles.hpp"
#include "domw/split.hpp"
#include "test_support.hpp"

using namespace domw;

TEST_CASE("split validation") {
  CHECK_NOTHROW(validate_split(WeightedGraph({1}, {}), {0}, {}));

  const auto ex = example_split_triangle();
  CHECK_NOTHROW(validate_split(ex.graph, ex.clique, ex.independent));

  const std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
  const WeightedGraph k3({1, 1, 1}, triangle);
  CHECK_THROWS_AS(validate_split(k3, {}, {0, 1, 2}), NotIndependent);
  CHECK_THROWS_AS(validate_split(WeightedGraph({1, 1}, {}), {0, 1}, {}), NotAClique);
  CHECK_THROWS_AS(validate_split(k3, {0, 1}, {1, 2}), NotAPartition);
  CHECK_THROWS_AS(validate_split(k3, {0, 1}, {}), NotAPartition);
}

TEST_CASE("cheapest cover of the independent side") {
  const auto none = validate_split(WeightedGraph({3, 2}, std::vector<Edge>{{0, 1}}), {0, 1}, {});
  CHECK(min_cover_B(none) == DominationFunction(2));

  const auto ex = example_split_triangle();
  CHECK(min_cover_B(ex).total() == 6);

  // A = {a}, B = {b1 w3, b2 w5}.
  const std::vector<Edge> star_edges{{0, 1}, {0, 2}};
  const auto star = validate_split(WeightedGraph({1, 3, 5}, star_edges), {0}, {1, 2});
  CHECK(min_cover_B(star) == DominationFunction({5, 0, 0}));

  const auto lonely = validate_split(WeightedGraph({1, 1}, {}), {0}, {1});
  CHECK_THROWS_AS(min_cover_B(lonely), IsolatedBVertex);
}

TEST_CASE("solve_split fixtures") {
  const auto ex = example_split_triangle();
  const auto r = solve_split(ex);
  CHECK(r.value == 6);
  CHECK(r.witness_independent == ex.independent);
  CHECK(r.witness_cost == 6);
  CHECK(is_w_dominating(ex.graph, r.dominating));

  const std::vector<Edge> ab{{0, 1}};
  const auto heavy = validate_split(WeightedGraph({7, 3}, ab), {0}, {1});
  CHECK(min_cover_B(heavy) == DominationFunction({3, 0}));
  const auto h = solve_split(heavy);
  CHECK(h.value == 7);
  CHECK(h.dominating == DominationFunction({7, 0}));
  CHECK(h.witness_independent == VertexSet{0});

  CHECK(solve_split(validate_split(WeightedGraph({1}, {}), {0}, {})).value == 1);
}

TEST_CASE("property: value is gamma_w and the witness is tight") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n_a = 1 + seed % 5;
    const auto inst = gen_split(seed, n_a, (seed / 5) % (9 - n_a), 20 + seed % 81, 5);
    const auto r = solve_split(inst);
    CHECK(r.value == testing::enumerated_gamma(inst.graph));
    CHECK(r.value == brute_gamma_i(inst.graph).value);
    CHECK(is_w_dominating(inst.graph, r.dominating));
    CHECK(r.dominating.total() == r.value);
    CHECK(is_independent(inst.graph, r.witness_independent));
    CHECK(min_cost_to_dominate(inst.graph, r.witness_independent).value == r.value);
  }
}
