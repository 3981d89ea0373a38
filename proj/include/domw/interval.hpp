#ifndef DOMW_INTERVAL_HPP
#define DOMW_INTERVAL_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "domw/graph.hpp"

namespace domw {

/// Closed integer interval [left, right] carrying a vertex weight.
struct Interval {
  std::int64_t left = 0;
  std::int64_t right = 0;
  Weight weight = 1;

  bool operator==(const Interval&) const = default;
};

inline bool intersects(const Interval& a, const Interval& b) {
  return std::max(a.left, b.left) <= std::min(a.right, b.right);
}

/// Interval i is vertex i of the induced intersection graph.
class IntervalFamily {
 public:
  IntervalFamily() = default;
  /// Throws InvalidInput if some left > right or weight < 1.
  explicit IntervalFamily(std::vector<Interval> intervals);

  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](Vertex v) const { return intervals_.at(v); }
  std::span<const Interval> intervals() const { return intervals_; }

  /// The family under x -> -x; reverses every left/right comparison.
  IntervalFamily mirrored() const;

  bool operator==(const IntervalFamily&) const = default;

 private:
  std::vector<Interval> intervals_;
};

WeightedGraph intersection_graph(const IntervalFamily& fam);

/// One greedy increment: `amount` units placed on `target` to satisfy the
/// residual demand of `source`.
struct GreedyStep {
  Vertex source = 0;
  Vertex target = 0;
  Weight amount = 0;

  bool operator==(const GreedyStep&) const = default;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;

  DominationFunction replay(std::size_t n) const;
};

struct GreedyResult {
  DominationFunction function;
  GreedyTrace trace;
};

/// Consecutive runs A_1..A_p of the right-endpoint enumeration. Blocks in
/// `carrying` hold a representative of the dispersed set with
/// f[A_j] = g[A_j] = w(rep); blocks in `zero` have f[A_k] = g[A_k] = 0.
struct DispersedDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::size_t> carrying;
  std::vector<std::size_t> zero;
  /// representatives[i] belongs to blocks[carrying[i]].
  std::vector<Vertex> representatives;
};

struct DispersedExtraction {
  VertexSet dispersed;
  DispersedDecomposition decomposition;
};

/// Right endpoint ascending, then left endpoint descending, then id ascending,
/// so the greedy target of every source is the last of its neighbors.
std::vector<Vertex> order_by_right_endpoint(const IntervalFamily& fam);
/// The right-endpoint order of the mirrored family: left endpoint descending,
/// then right endpoint ascending, then id ascending.
std::vector<Vertex> order_by_left_endpoint_descending(const IntervalFamily& fam);

/// Left-to-right greedy. Repeatedly takes the unsatisfied interval with the
/// smallest right endpoint and charges its whole residual demand to the
/// neighbor reaching furthest right (ties: smaller left endpoint, then larger id).
GreedyResult forward_greedy(const IntervalFamily& fam);

/// The same sweep run right to left, i.e. forward_greedy on the mirrored family.
GreedyResult backward_greedy(const IntervalFamily& fam);

/// Builds a dispersed set of weight |f| from the forward function f and the
/// backward function g (with its trace). Throws TheoremViolation if a step of
/// the construction has no valid witness or a block fails its accounting.
DispersedExtraction extract_dispersed(const IntervalFamily& fam, const DominationFunction& f,
                                      const DominationFunction& g,
                                      const GreedyTrace& backward_trace);

/// Optimal w-dominating function and a dispersed set of equal weight.
Certificate solve_interval(const IntervalFamily& fam);

}  // namespace domw

#endif  // DOMW_INTERVAL_HPP
