#ifndef DOMW_INSTANCES_HPP
#define DOMW_INSTANCES_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "domw/graph.hpp"
#include "domw/interval.hpp"
#include "domw/split.hpp"
#include "domw/tree_edge.hpp"

namespace domw {

/// Weighted subtrees of a host tree; the induced graph is their intersection graph.
struct SubtreeInstance {
  HostTree host;
  std::vector<std::vector<Vertex>> subtrees;
  std::vector<Weight> weights;

  bool operator==(const SubtreeInstance&) const = default;
};

enum class InstanceKind { Interval, TreeEdges, Split, SubtreeIntersection, Explicit };

const char* to_string(InstanceKind kind);

/// Variant alternatives are in InstanceKind order.
using InstancePayload =
    std::variant<IntervalFamily, TreeEdgeInstance, SplitInstance, SubtreeInstance, WeightedGraph>;

struct InstanceFile {
  InstancePayload payload;

  InstanceKind kind() const { return static_cast<InstanceKind>(payload.index()); }
  bool operator==(const InstanceFile&) const = default;
};

/// Graph whose vertex ids every solver result and certificate uses. For
/// tree-edges instances that is the line graph of F.
WeightedGraph to_graph(const InstanceFile& inst);
WeightedGraph to_graph(const SubtreeInstance& inst);

// Fixed instances.

/// Three-ray star with forked rays (13 host vertices) and its 15 weighted
/// subtrees. gamma_w = 5 while gamma^i_w = 4, so chordality alone does not
/// give the weighted equality.
SubtreeInstance example_forked_star();

/// Triangle a0 a1 a2 (weight 5) plus b_i (weight 4) adjacent to a_i and
/// a_{i+1 mod 3}; vertex ids a0..a2 = 0..2, b0..b2 = 3..5. rho_w = 5 < 6 = gamma_w.
SplitInstance example_split_triangle();

/// [1,1], [2,2], [3,3] and [1,3], unit weights. Neighborhood matrix has
/// determinant of absolute value 2.
IntervalFamily example_nontu_intervals();

/// Star with three rays of length two, every edge weighted 1. Host vertex 0
/// is the center; ray i is 0 - (2i+1) - (2i+2).
TreeEdgeInstance example_nontu_star();

/// [1,2] w3, [2,4] w1, [5,6] w2.
IntervalFamily example_three_intervals();

// Seeded generators.

/// 64-bit linear congruential generator:
///   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
/// starting from state = seed; each draw advances once and returns the high
/// 32 bits. uniform(lo, hi) = lo + draw % (hi - lo + 1).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// n intervals; per interval draws a, b in [1, max_coord] and w in [1, max_w]
/// and keeps [min(a,b), max(a,b)].
IntervalFamily gen_interval(std::uint64_t seed, std::size_t n, std::int64_t max_coord,
                            Weight max_w);

/// Random recursive tree on n_edges + 1 vertices: vertex v >= 1 hangs below
/// uniform(0, v-1). Each edge then draws in_F (uniform(0,4) != 0) and a weight
/// in [1, max_w]. If no edge made it into F the first edge is added.
TreeEdgeInstance gen_tree(std::uint64_t seed, std::size_t n_edges, Weight max_w);

/// Clique 0..n_a-1, independent side n_a..n_a+n_b-1, weights drawn in that
/// order. Each independent vertex joins each clique vertex with probability
/// edge_prob_percent / 100, redrawing its row until it has a neighbor.
SplitInstance gen_split(std::uint64_t seed, std::size_t n_a, std::size_t n_b,
                        int edge_prob_percent, Weight max_w);

/// Random recursive host tree on n_tree vertices, then n_subtrees subtrees
/// grown from a uniform start vertex by repeatedly adding a uniform frontier
/// vertex until a uniform target size in [1, n_tree] is reached.
SubtreeInstance gen_subtrees(std::uint64_t seed, std::size_t n_tree, std::size_t n_subtrees,
                             Weight max_w);

}  // namespace domw

#endif  // DOMW_INSTANCES_HPP
