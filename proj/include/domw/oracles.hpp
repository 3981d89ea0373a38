#ifndef DOMW_ORACLES_HPP
#define DOMW_ORACLES_HPP

// Exhaustive and exact reference computations used to validate the solvers.
// Nothing here depends on the solver code paths.

#include <span>
#include <vector>

#include "domw/graph.hpp"
#include "domw/linalg.hpp"

namespace domw {

struct OracleLimits {
  /// Largest vertex count the exhaustive oracles accept.
  std::size_t max_vertices = 10;
};

struct DominationOptimum {
  Weight value = 0;
  DominationFunction dominating;
};

struct DispersionOptimum {
  Weight value = 0;
  VertexSet dispersed;
};

struct IndependentDominationOptimum {
  Weight value = 0;
  VertexSet witness;
  DominationFunction dominating;  // cheapest function dominating the witness
};

/// Exact rational optima of the fractional packing program (P) and its dual
/// covering program (D), each solved separately.
struct FractionalSolution {
  Rational gamma_star;
  Rational rho_star;
  std::vector<Rational> primal;  // g of (P): g[N(v)] <= 1
  std::vector<Rational> dual;    // f of (D): f[N(v)] >= w(v)
};

/// Cheapest integral function w-dominating `demanded`. Branch and bound;
/// throws InstanceTooLarge above the cap.
DominationOptimum min_cost_to_dominate(const WeightedGraph& g, std::span<const Vertex> demanded,
                                       OracleLimits limits = {});

/// gamma_w.
DominationOptimum brute_gamma(const WeightedGraph& g, OracleLimits limits = {});

/// rho_w: heaviest set of vertices pairwise at distance >= 3.
DispersionOptimum brute_rho(const WeightedGraph& g, OracleLimits limits = {});

/// Every maximal independent set, each sorted, in lexicographic order.
std::vector<VertexSet> maximal_independent_sets(const WeightedGraph& g, OracleLimits limits = {});

/// gamma^i_w: the most expensive independent set to dominate. Only maximal
/// independent sets are tried since the cost is monotone in the demanded set.
/// Ties go to the lexicographically smallest witness.
IndependentDominationOptimum brute_gamma_i(const WeightedGraph& g, OracleLimits limits = {});

/// Throws LPInternalError if the two optima differ or a returned point is
/// infeasible.
FractionalSolution solve_fractional(const WeightedGraph& g, OracleLimits limits = {});

/// Square 0/1 matrix of (P) under a vertex enumeration: entry (i, j) is 1
/// iff order[j] lies in N(order[i]).
struct NeighborhoodMatrix {
  std::vector<Vertex> order;
  MatrixX<int> entries;
};

/// Throws BadPermutation unless `order` is a permutation of the vertices.
NeighborhoodMatrix neighborhood_matrix(const WeightedGraph& g, std::span<const Vertex> order);
NeighborhoodMatrix neighborhood_matrix(const WeightedGraph& g);

BigInt det(const NeighborhoodMatrix& m);
BigInt det(const MatrixX<int>& m);

/// Every row's ones form one contiguous run.
bool has_consecutive_ones(const MatrixX<int>& m);
inline bool has_consecutive_ones(const NeighborhoodMatrix& m) {
  return has_consecutive_ones(m.entries);
}

}  // namespace domw

#endif  // DOMW_ORACLES_HPP
