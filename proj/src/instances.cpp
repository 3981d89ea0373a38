#include "domw/instances.hpp"

#include <algorithm>

#include "domw/errors.hpp"

namespace domw {

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Interval: return "interval";
    case InstanceKind::TreeEdges: return "tree-edges";
    case InstanceKind::Split: return "split";
    case InstanceKind::SubtreeIntersection: return "subtree-intersection";
    case InstanceKind::Explicit: return "explicit";
  }
  return "unknown";
}

WeightedGraph to_graph(const SubtreeInstance& inst) {
  std::vector<VertexSet> sets;
  sets.reserve(inst.subtrees.size());
  for (const auto& s : inst.subtrees) sets.push_back(make_vertex_set(s));
  return build_intersection_graph(inst.host, sets, inst.weights);
}

WeightedGraph to_graph(const InstanceFile& inst) {
  struct Visitor {
    WeightedGraph operator()(const IntervalFamily& x) const { return intersection_graph(x); }
    WeightedGraph operator()(const TreeEdgeInstance& x) const { return line_graph(x); }
    WeightedGraph operator()(const SplitInstance& x) const { return x.graph; }
    WeightedGraph operator()(const SubtreeInstance& x) const { return to_graph(x); }
    WeightedGraph operator()(const WeightedGraph& x) const { return x; }
  };
  return std::visit(Visitor{}, inst.payload);
}

SubtreeInstance example_forked_star() {
  // v = 0; a_i^j = 1 + 4(i-1) + (j-1) for rays i = 1..3 and j = 1..4.
  auto a = [](int i, int j) -> Vertex { return static_cast<Vertex>(1 + 4 * (i - 1) + (j - 1)); };
  std::vector<Edge> edges;
  for (int i = 1; i <= 3; ++i) {
    edges.emplace_back(0, a(i, 1));
    edges.emplace_back(a(i, 1), a(i, 2));
    edges.emplace_back(a(i, 2), a(i, 3));
    edges.emplace_back(a(i, 2), a(i, 4));
  }
  SubtreeInstance out{HostTree(13, std::move(edges)), {}, {}};
  auto add = [&](std::vector<Vertex> s, Weight w) {
    out.subtrees.push_back(std::move(s));
    out.weights.push_back(w);
  };
  for (int i = 1; i <= 3; ++i) add({a(i, 3), a(i, 2), a(i, 4)}, 1);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 3; j <= 4; ++j) add({a(i, 1), a(i, 2), a(i, j)}, 2);
  }
  for (int i = 1; i <= 3; ++i) add({0, a(i, 1), a(i, 2)}, 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) add({a(i, 1), 0, a(j, 1)}, 4);
  }
  return out;
}

SplitInstance example_split_triangle() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (Vertex i = 0; i < 3; ++i) {
    edges.emplace_back(3 + i, i);
    edges.emplace_back(3 + i, (i + 1) % 3);
  }
  return validate_split(WeightedGraph({5, 5, 5, 4, 4, 4}, edges), {0, 1, 2}, {3, 4, 5});
}

IntervalFamily example_nontu_intervals() {
  return IntervalFamily({{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {1, 3, 1}});
}

TreeEdgeInstance example_nontu_star() {
  HostTree tree(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  return {std::move(tree), std::vector<std::optional<Weight>>(6, Weight{1})};
}

IntervalFamily example_three_intervals() {
  return IntervalFamily({{1, 2, 3}, {2, 4, 1}, {5, 6, 2}});
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ParameterOutOfRange(what);
}

std::vector<Edge> random_recursive_tree(Lcg64& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(rng.uniform(0, static_cast<std::int64_t>(v) - 1)), v);
  }
  return edges;
}

}  // namespace

IntervalFamily gen_interval(std::uint64_t seed, std::size_t n, std::int64_t max_coord,
                            Weight max_w) {
  require(n >= 1, "n must be positive");
  require(max_coord >= 1, "max_coord must be positive");
  require(max_w >= 1, "max_w must be positive");
  Lcg64 rng(seed);
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = rng.uniform(1, max_coord);
    const auto b = rng.uniform(1, max_coord);
    const auto w = rng.uniform(1, max_w);
    intervals.push_back({std::min(a, b), std::max(a, b), w});
  }
  return IntervalFamily(std::move(intervals));
}

TreeEdgeInstance gen_tree(std::uint64_t seed, std::size_t n_edges, Weight max_w) {
  require(n_edges >= 1, "n_edges must be positive");
  require(max_w >= 1, "max_w must be positive");
  Lcg64 rng(seed);
  auto edges = random_recursive_tree(rng, n_edges + 1);
  std::vector<std::optional<Weight>> weights;
  bool any = false;
  std::vector<Weight> drawn;
  for (std::size_t i = 0; i < n_edges; ++i) {
    const bool in_f = rng.uniform(0, 4) != 0;
    const Weight w = rng.uniform(1, max_w);
    drawn.push_back(w);
    weights.push_back(in_f ? std::optional<Weight>(w) : std::nullopt);
    any = any || in_f;
  }
  if (!any) weights[0] = drawn[0];
  return {HostTree(n_edges + 1, std::move(edges)), std::move(weights)};
}

SplitInstance gen_split(std::uint64_t seed, std::size_t n_a, std::size_t n_b,
                        int edge_prob_percent, Weight max_w) {
  require(n_a >= 1, "n_a must be positive");
  require(edge_prob_percent >= 0 && edge_prob_percent <= 100,
          "edge_prob_percent must lie in 0..100");
  require(n_b == 0 || edge_prob_percent > 0,
          "edge_prob_percent = 0 leaves independent vertices isolated");
  require(max_w >= 1, "max_w must be positive");
  Lcg64 rng(seed);
  std::vector<Weight> weights;
  for (std::size_t v = 0; v < n_a + n_b; ++v) weights.push_back(rng.uniform(1, max_w));
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n_a; ++x) {
    for (Vertex y = x + 1; y < n_a; ++y) edges.emplace_back(x, y);
  }
  for (Vertex b = n_a; b < n_a + n_b; ++b) {
    std::vector<Vertex> row;
    while (row.empty()) {
      for (Vertex a = 0; a < n_a; ++a) {
        if (rng.uniform(0, 99) < edge_prob_percent) row.push_back(a);
      }
    }
    for (Vertex a : row) edges.emplace_back(a, b);
  }
  VertexSet clique(n_a), independent(n_b);
  for (std::size_t i = 0; i < n_a; ++i) clique[i] = i;
  for (std::size_t i = 0; i < n_b; ++i) independent[i] = n_a + i;
  return validate_split(WeightedGraph(std::move(weights), edges), std::move(clique),
                        std::move(independent));
}

SubtreeInstance gen_subtrees(std::uint64_t seed, std::size_t n_tree, std::size_t n_subtrees,
                             Weight max_w) {
  require(n_tree >= 1, "n_tree must be positive");
  require(n_subtrees >= 1, "n_subtrees must be positive");
  require(max_w >= 1, "max_w must be positive");
  Lcg64 rng(seed);
  SubtreeInstance out{HostTree(n_tree, random_recursive_tree(rng, n_tree)), {}, {}};
  const auto last = static_cast<std::int64_t>(n_tree) - 1;
  for (std::size_t s = 0; s < n_subtrees; ++s) {
    const auto target = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n_tree)));
    std::vector<char> inside(n_tree, 0);
    std::vector<Vertex> members{static_cast<Vertex>(rng.uniform(0, last))};
    inside[members.front()] = 1;
    while (members.size() < target) {
      std::vector<Vertex> frontier;
      for (Vertex x : members) {
        for (Vertex y : out.host.neighbors(x)) {
          if (!inside[y]) frontier.push_back(y);
        }
      }
      frontier = make_vertex_set(std::move(frontier));
      const Vertex next = frontier[static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(frontier.size()) - 1))];
      inside[next] = 1;
      members.push_back(next);
    }
    std::sort(members.begin(), members.end());
    out.subtrees.push_back(std::move(members));
    out.weights.push_back(rng.uniform(1, max_w));
  }
  return out;
}

}  // namespace domw
