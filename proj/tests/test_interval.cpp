#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "domw/errors.hpp"
#include "domw/instances.hpp"
#include "domw/interval.hpp"
#include "domw/oracles.hpp"
#include "test_support.hpp"

using namespace domw;

namespace {

// IV3: v1 = [1,2] w3, v2 = [2,4] w1, v3 = [5,6] w2 as ids 0, 1, 2.
const IntervalFamily iv3 = example_three_intervals();

IntervalFamily single(Weight w) { return IntervalFamily({{0, 1, w}}); }

IntervalFamily sweep_family(std::uint64_t seed) { return gen_interval(seed, 1 + seed % 8, 12, 5); }

bool strictly_contained(const IntervalFamily& fam, Vertex v) {
  for (Vertex u = 0; u < fam.size(); ++u) {
    const bool inside = fam[u].left <= fam[v].left && fam[v].right <= fam[u].right;
    const bool equal = fam[u].left == fam[v].left && fam[u].right == fam[v].right;
    if (u != v && inside && !equal) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("family validation") {
  CHECK_THROWS_AS(IntervalFamily({{3, 2, 1}}), InvalidInput);
  CHECK_THROWS_AS(IntervalFamily({{1, 2, 0}}), InvalidInput);
}

TEST_CASE("closed intervals sharing an endpoint intersect") {
  const auto g = intersection_graph(iv3);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("right-endpoint enumeration") {
  CHECK(order_by_right_endpoint(single(1)) == std::vector<Vertex>{0});
  CHECK(order_by_right_endpoint(iv3) == std::vector<Vertex>{0, 1, 2});
  CHECK(order_by_right_endpoint(IntervalFamily({{1, 3, 1}, {1, 3, 1}})) ==
        std::vector<Vertex>{0, 1});
  // Equal right endpoints: the containing interval comes last.
  CHECK(order_by_right_endpoint(IntervalFamily({{1, 5, 1}, {2, 5, 1}, {1, 2, 1}})) ==
        std::vector<Vertex>{2, 1, 0});
}

TEST_CASE("forward greedy") {
  const auto empty = forward_greedy(IntervalFamily());
  CHECK(empty.function.domain_size() == 0);
  CHECK(empty.trace.steps.empty());

  const auto r = forward_greedy(iv3);
  CHECK(r.function == DominationFunction({0, 3, 2}));
  CHECK(r.function.total() == 5);
  CHECK(r.trace.replay(3) == r.function);

  CHECK(forward_greedy(single(4)).function == DominationFunction(std::vector<Weight>{4}));
}

TEST_CASE("backward greedy") {
  CHECK(backward_greedy(IntervalFamily()).function.domain_size() == 0);
  CHECK(backward_greedy(iv3).function == DominationFunction({3, 0, 2}));
  CHECK(backward_greedy(single(4)).function == DominationFunction(std::vector<Weight>{4}));
}

TEST_CASE("dispersed extraction") {
  const auto empty = IntervalFamily();
  const auto none = extract_dispersed(empty, DominationFunction(0), DominationFunction(0), {});
  CHECK(none.dispersed.empty());

  const auto f = forward_greedy(iv3).function;
  const auto g = backward_greedy(iv3);
  const auto ex = extract_dispersed(iv3, f, g.function, g.trace);
  CHECK(ex.dispersed == VertexSet{0, 2});
  const auto& dec = ex.decomposition;
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0] == std::vector<Vertex>{0, 1});
  CHECK(dec.blocks[1] == std::vector<Vertex>{2});
  CHECK(dec.carrying == std::vector<std::size_t>{0, 1});
  CHECK(dec.zero.empty());

  const IntervalFamily disjoint({{1, 1, 2}, {3, 4, 7}, {6, 6, 1}});
  const auto c = solve_interval(disjoint);
  CHECK(c.dispersed == VertexSet{0, 1, 2});
  CHECK(c.value == 10);
}

TEST_CASE("extraction rejects functions that are not greedy optima") {
  const auto g = backward_greedy(iv3);
  CHECK_THROWS_AS(extract_dispersed(iv3, DominationFunction({3, 1, 2}), g.function, g.trace),
                  TheoremViolation);
}

TEST_CASE("solve_interval fixtures") {
  CHECK(solve_interval(single(9)).value == 9);
  CHECK(solve_interval(iv3).value == 5);
  // [1,3] meets every interval, so one unit suffices and the unit intervals
  // are pairwise at distance 2.
  const auto ntu_fam = example_nontu_intervals();
  const auto ntu = solve_interval(ntu_fam);
  CHECK(ntu.value == 1);
  CHECK(ntu.dispersed.size() == 1);
  CHECK(ntu.value == brute_gamma(intersection_graph(ntu_fam)).value);
  CHECK(ntu.value == brute_rho(intersection_graph(ntu_fam)).value);
}

TEST_CASE("property: block identity f[A] = f[N(z)] for every carrying block") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto fam = sweep_family(seed);
    const auto graph = intersection_graph(fam);
    const auto f = forward_greedy(fam).function;
    const auto g = backward_greedy(fam);
    const auto ex = extract_dispersed(fam, f, g.function, g.trace);
    const auto& dec = ex.decomposition;
    for (std::size_t i = 0; i < dec.carrying.size(); ++i) {
      const auto& block = dec.blocks[dec.carrying[i]];
      const Vertex z = dec.representatives[i];
      CHECK(set_sum(f, block) == set_sum(f, closed_neighborhood(graph, z)));
      CHECK(set_sum(f, block) == graph.weight(z));
    }
    for (std::size_t k : dec.zero) {
      CHECK(set_sum(f, dec.blocks[k]) == 0);
      CHECK(set_sum(g.function, dec.blocks[k]) == 0);
    }
  }
}

TEST_CASE("property: greedy mass sits on containment-maximal intervals") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto fam = sweep_family(seed);
    const auto f = forward_greedy(fam).function;
    const auto g = backward_greedy(fam).function;
    CHECK(f.total() == g.total());
    for (Vertex v = 0; v < fam.size(); ++v) {
      if (!strictly_contained(fam, v)) continue;
      CHECK(f[v] == 0);
      CHECK(g[v] == 0);
    }
  }
}

TEST_CASE("property: prefix and suffix minimality against every dominating function") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto fam = gen_interval(seed, 1 + seed % 5, 6, 3);
    const auto graph = intersection_graph(fam);
    const auto f = forward_greedy(fam).function;
    const auto g = backward_greedy(fam).function;
    const auto forward = order_by_right_endpoint(fam);
    const auto backward = order_by_left_endpoint_descending(fam);
    testing::for_each_dominating(graph, 3, [&](const DominationFunction& h) {
      CHECK(testing::prefix_dominated(f, h, forward));
      CHECK(testing::prefix_dominated(g, h, backward));
    });
  }
}

TEST_CASE("property: solver value equals both oracles") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto fam = sweep_family(seed);
    const auto graph = intersection_graph(fam);
    const auto c = solve_interval(fam);
    CHECK(verify_certificate(graph, c));
    CHECK(c.value == testing::enumerated_gamma(graph));
    CHECK(c.value == testing::enumerated_rho(graph));
  }
}
