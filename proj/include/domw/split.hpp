#ifndef DOMW_SPLIT_HPP
#define DOMW_SPLIT_HPP

#include "domw/graph.hpp"

namespace domw {

/// A graph whose vertices split into a clique (`clique`) and an independent
/// set (`independent`). Construct through validate_split.
struct SplitInstance {
  WeightedGraph graph;
  VertexSet clique;
  VertexSet independent;

  bool operator==(const SplitInstance&) const = default;
};

/// Throws NotAPartition, NotAClique(u, v) or NotIndependent(u, v).
SplitInstance validate_split(WeightedGraph graph, VertexSet clique, VertexSet independent);

struct SplitResult {
  /// gamma_w, which equals the independent domination number here.
  Weight value = 0;
  DominationFunction dominating;
  /// Independent set whose cheapest domination costs `value`.
  VertexSet witness_independent;
  Weight witness_cost = 0;
};

/// Cheapest function supported on the clique side that w-dominates the
/// independent side. Exact branch and bound. With an empty clique side the
/// independent vertices dominate themselves. Throws IsolatedBVertex when the
/// clique side is nonempty and some independent vertex has no neighbor.
DominationFunction min_cover_B(const SplitInstance& inst);

/// Extends the cover of the independent side to all vertices: if it is
/// smaller than the heaviest clique vertex, the deficit is placed on that
/// vertex (ties: smallest id) and the singleton becomes the witness.
SplitResult solve_split(const SplitInstance& inst);

}  // namespace domw

#endif  // DOMW_SPLIT_HPP
