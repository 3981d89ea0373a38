#include "domw/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include "domw/errors.hpp"

namespace domw {

namespace {

void enforce_cap(const WeightedGraph& g, const OracleLimits& limits) {
  if (g.size() > limits.max_vertices) throw InstanceTooLarge(g.size(), limits.max_vertices);
}

// Branch and bound for min |f| subject to f[N(u)] >= w(u) for demanded u.
//
// Variables are the vertices of N(demanded) in descending degree, then id.
// A variable never needs a value above the largest remaining deficit among
// the demands it touches: with f(v) equal to that deficit every such demand
// is already met, so larger values only add cost. In particular values never
// exceed max w.
class DominationSearch {
 public:
  DominationSearch(const WeightedGraph& g, std::span<const Vertex> demanded) : g_(g) {
    demanded_ = make_vertex_set({demanded.begin(), demanded.end()});
    std::vector<char> useful(g.size(), 0);
    for (Vertex u : demanded_) {
      useful[u] = 1;
      for (Vertex x : g.neighbors(u)) useful[x] = 1;
    }
    for (Vertex v = 0; v < g.size(); ++v) {
      if (useful[v]) vars_.push_back(v);
    }
    std::stable_sort(vars_.begin(), vars_.end(), [&](Vertex a, Vertex b) {
      return g.neighbors(a).size() > g.neighbors(b).size();
    });
    std::vector<std::size_t> position(g.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) position[vars_[i]] = i;

    touches_.assign(vars_.size(), {});
    slots_.assign(demanded_.size(), {});
    for (std::size_t d = 0; d < demanded_.size(); ++d) {
      for (Vertex x : closed_neighborhood(g, demanded_[d])) {
        slots_[d].push_back(position[x]);
        touches_[position[x]].push_back(d);
      }
      deficit_.push_back(g.weight(demanded_[d]));
    }
    claimed_.assign(vars_.size(), 0);
  }

  DominationOptimum run() {
    best_ = DominationFunction(g_.size());
    for (Vertex u : demanded_) best_.set(u, g_.weight(u));
    best_total_ = best_.total();
    current_ = DominationFunction(g_.size());
    search(0, 0);
    return {best_total_, best_};
  }

 private:
  // Sum of deficits over unmet demands whose unassigned variables are
  // pairwise disjoint: each unit placed later serves at most one of them.
  // Returns nullopt when some unmet demand has no unassigned variable left.
  std::optional<Weight> packing_bound(std::size_t depth) {
    std::vector<std::size_t> unmet;
    for (std::size_t d = 0; d < deficit_.size(); ++d) {
      if (deficit_[d] > 0) unmet.push_back(d);
    }
    std::stable_sort(unmet.begin(), unmet.end(),
                     [&](std::size_t a, std::size_t b) { return deficit_[a] > deficit_[b]; });
    ++stamp_;
    Weight bound = 0;
    for (auto d : unmet) {
      bool open = false, disjoint = true;
      for (auto p : slots_[d]) {
        if (p < depth) continue;
        open = true;
        if (claimed_[p] == stamp_) disjoint = false;
      }
      if (!open) return std::nullopt;
      if (!disjoint) continue;
      for (auto p : slots_[d]) {
        if (p >= depth) claimed_[p] = stamp_;
      }
      bound += deficit_[d];
    }
    return bound;
  }

  void search(std::size_t depth, Weight cost) {
    const auto bound = packing_bound(depth);
    if (!bound || cost + *bound >= best_total_) return;
    if (*bound == 0) {
      best_ = current_;
      best_total_ = cost;
      return;
    }
    const Vertex v = vars_[depth];
    Weight top = 0;
    for (auto d : touches_[depth]) top = std::max(top, deficit_[d]);
    for (Weight value = top; value >= 0; --value) {
      for (auto d : touches_[depth]) deficit_[d] -= value;
      current_.set(v, value);
      search(depth + 1, cost + value);
      current_.set(v, 0);
      for (auto d : touches_[depth]) deficit_[d] += value;
    }
  }

  const WeightedGraph& g_;
  VertexSet demanded_;
  std::vector<Vertex> vars_;
  std::vector<std::vector<std::size_t>> touches_;
  std::vector<std::vector<std::size_t>> slots_;
  std::vector<Weight> deficit_;
  std::vector<std::uint64_t> claimed_;
  std::uint64_t stamp_ = 0;
  DominationFunction current_;
  DominationFunction best_;
  Weight best_total_ = std::numeric_limits<Weight>::max();
};

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

void require_mask_width(const WeightedGraph& g) {
  if (g.size() > 64) throw InstanceTooLarge(g.size(), 64);
}

VertexSet to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

class DispersedSearch {
 public:
  explicit DispersedSearch(const WeightedGraph& g) : g_(g), conflict_(g.size(), 0) {
    // Conflicts: distinct vertices within distance 2.
    for (Vertex v = 0; v < g.size(); ++v) {
      for (Vertex u : g.neighbors(v)) {
        conflict_[v] |= bit(u);
        for (Vertex x : g.neighbors(u)) conflict_[v] |= bit(x);
      }
      conflict_[v] &= ~bit(v);
    }
    suffix_.assign(g.size() + 1, 0);
    for (Vertex v = g.size(); v-- > 0;) suffix_[v] = suffix_[v + 1] + g.weight(v);
  }

  DispersionOptimum run() {
    search(0, 0, 0);
    return {best_, to_set(best_set_)};
  }

 private:
  void search(Vertex v, Mask chosen, Weight weight) {
    if (weight > best_) {
      best_ = weight;
      best_set_ = chosen;
    }
    if (v == g_.size() || weight + suffix_[v] <= best_) return;
    if (!(conflict_[v] & chosen)) search(v + 1, chosen | bit(v), weight + g_.weight(v));
    search(v + 1, chosen, weight);
  }

  const WeightedGraph& g_;
  std::vector<Mask> conflict_;
  std::vector<Weight> suffix_;
  Weight best_ = 0;
  Mask best_set_ = 0;
};

void bron_kerbosch(const std::vector<Mask>& compatible, Mask r, Mask p, Mask x,
                   std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  Mask pivot_set = p | x;
  Vertex pivot = static_cast<Vertex>(std::countr_zero(pivot_set));
  int best = -1;
  for (Mask m = pivot_set; m; m &= m - 1) {
    auto u = static_cast<Vertex>(std::countr_zero(m));
    int c = std::popcount(p & compatible[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (Mask m = p & ~compatible[pivot]; m; m &= m - 1) {
    auto v = static_cast<Vertex>(std::countr_zero(m));
    bron_kerbosch(compatible, r | bit(v), p & compatible[v], x & compatible[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

DominationOptimum min_cost_to_dominate(const WeightedGraph& g, std::span<const Vertex> demanded,
                                       OracleLimits limits) {
  enforce_cap(g, limits);
  for (Vertex v : demanded) {
    if (!g.contains(v)) throw UnknownVertex(v);
  }
  return DominationSearch(g, demanded).run();
}

DominationOptimum brute_gamma(const WeightedGraph& g, OracleLimits limits) {
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), Vertex{0});
  return min_cost_to_dominate(g, all, limits);
}

DispersionOptimum brute_rho(const WeightedGraph& g, OracleLimits limits) {
  enforce_cap(g, limits);
  require_mask_width(g);
  return DispersedSearch(g).run();
}

std::vector<VertexSet> maximal_independent_sets(const WeightedGraph& g, OracleLimits limits) {
  enforce_cap(g, limits);
  require_mask_width(g);
  const Mask all = g.size() == 64 ? ~Mask{0} : bit(g.size()) - 1;
  std::vector<Mask> compatible(g.size(), all);
  for (Vertex v = 0; v < g.size(); ++v) {
    compatible[v] &= ~bit(v);
    for (Vertex u : g.neighbors(v)) compatible[v] &= ~bit(u);
  }
  std::vector<Mask> found;
  bron_kerbosch(compatible, 0, all, 0, found);
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

IndependentDominationOptimum brute_gamma_i(const WeightedGraph& g, OracleLimits limits) {
  IndependentDominationOptimum best;
  bool first = true;
  for (const auto& independent : maximal_independent_sets(g, limits)) {
    auto cost = min_cost_to_dominate(g, independent, limits);
    if (first || cost.value > best.value) {
      best = {cost.value, independent, std::move(cost.dominating)};
      first = false;
    }
  }
  if (first) best.dominating = DominationFunction(g.size());
  return best;
}

FractionalSolution solve_fractional(const WeightedGraph& g, OracleLimits limits) {
  enforce_cap(g, limits);
  const auto n = static_cast<Eigen::Index>(g.size());
  const MatrixX<Rational> m = neighborhood_matrix(g).entries.cast<Rational>();
  VectorX<Rational> w(n);
  for (Eigen::Index v = 0; v < n; ++v) w(v) = Rational(g.weight(static_cast<Vertex>(v)));

  // (P): max w.g  s.t.  M g <= 1.
  const auto packing = maximize<Rational>(m, VectorX<Rational>::Ones(n), w);
  // (D): min 1.f  s.t.  M f >= w, as max -1.f s.t. -M f <= -w.
  const auto covering =
      maximize<Rational>(-m, -w, VectorX<Rational>::Constant(n, Rational(-1)));
  if (packing.status != LpStatus::Optimal || covering.status != LpStatus::Optimal) {
    throw LPInternalError("fractional program did not reach an optimum");
  }

  FractionalSolution out;
  out.rho_star = packing.value;
  out.gamma_star = -covering.value;
  out.primal.assign(packing.x.begin(), packing.x.end());
  out.dual.assign(covering.x.begin(), covering.x.end());

  for (Eigen::Index v = 0; v < n; ++v) {
    const Rational load = m.row(v).dot(packing.x);
    const Rational cover = m.row(v).dot(covering.x);
    if (packing.x(v) < 0 || load > 1 || covering.x(v) < 0 || cover < w(v)) {
      throw LPInternalError("fractional solution is infeasible at vertex " + std::to_string(v));
    }
  }
  if (out.gamma_star != out.rho_star) {
    throw LPInternalError("duality gap: gamma* = " + out.gamma_star.str() +
                          ", rho* = " + out.rho_star.str());
  }
  return out;
}

NeighborhoodMatrix neighborhood_matrix(const WeightedGraph& g, std::span<const Vertex> order) {
  const std::size_t n = g.size();
  if (order.size() != n) throw BadPermutation();
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) throw BadPermutation();
    position[order[i]] = i;
  }
  NeighborhoodMatrix out{{order.begin(), order.end()}, MatrixX<int>::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    out.entries(row, row) = 1;
    for (Vertex u : g.neighbors(order[i])) {
      out.entries(row, static_cast<Eigen::Index>(position[u])) = 1;
    }
  }
  return out;
}

NeighborhoodMatrix neighborhood_matrix(const WeightedGraph& g) {
  std::vector<Vertex> order(g.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  return neighborhood_matrix(g, order);
}

BigInt det(const MatrixX<int>& m) { return bareiss_determinant<BigInt>(m); }

BigInt det(const NeighborhoodMatrix& m) { return det(m.entries); }

bool has_consecutive_ones(const MatrixX<int>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::Index first = -1, last = -1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        if (first < 0) first = j;
        last = j;
      }
    }
    if (first < 0) continue;
    for (Eigen::Index j = first; j <= last; ++j) {
      if (m(i, j) == 0) return false;
    }
  }
  return true;
}

}  // namespace domw
