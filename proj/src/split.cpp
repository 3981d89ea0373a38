#include "domw/split.hpp"

#include <algorithm>
#include <limits>

#include "domw/errors.hpp"

namespace domw {

SplitInstance validate_split(WeightedGraph graph, VertexSet clique, VertexSet independent) {
  clique = make_vertex_set(std::move(clique));
  independent = make_vertex_set(std::move(independent));
  std::vector<int> side(graph.size(), 0);
  for (Vertex v : clique) {
    if (!graph.contains(v)) throw UnknownVertex(v);
    side[v] += 1;
  }
  for (Vertex v : independent) {
    if (!graph.contains(v)) throw UnknownVertex(v);
    side[v] += 2;
  }
  if (std::any_of(side.begin(), side.end(), [](int s) { return s != 1 && s != 2; })) {
    throw NotAPartition();
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!graph.adjacent(clique[i], clique[j])) throw NotAClique(clique[i], clique[j]);
    }
  }
  for (Vertex b : independent) {
    for (Vertex x : graph.neighbors(b)) {
      if (side[x] == 2) throw NotIndependent(std::min(b, x), std::max(b, x));
    }
  }
  return {std::move(graph), std::move(clique), std::move(independent)};
}

namespace {

// Depth-first branch and bound over the values of the clique vertices.
class CoverSearch {
 public:
  explicit CoverSearch(const SplitInstance& inst) : g_(inst.graph) {
    std::vector<int> in_clique(g_.size(), 0);
    for (Vertex a : inst.clique) in_clique[a] = 1;
    for (Vertex b : inst.independent) {
      std::vector<Vertex> nb;
      for (Vertex x : g_.neighbors(b)) {
        if (in_clique[x]) nb.push_back(x);
      }
      if (nb.empty()) throw IsolatedBVertex(b);
      demand_.push_back(g_.weight(b));
      cover_.push_back(std::move(nb));
    }
    // Clique vertices by descending number of covered demands, then id.
    std::vector<std::size_t> degree(g_.size(), 0);
    for (const auto& nb : cover_) {
      for (Vertex a : nb) ++degree[a];
    }
    order_ = inst.clique;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return degree[x] > degree[y]; });
    std::vector<std::size_t> position(g_.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;
    touches_.assign(order_.size(), {});
    open_slots_.assign(cover_.size(), 0);
    for (std::size_t b = 0; b < cover_.size(); ++b) {
      for (Vertex a : cover_[b]) touches_[position[a]].push_back(b);
      open_slots_[b] = cover_[b].size();
    }
  }

  DominationFunction run() {
    // Incumbent: each demand charged in full to its smallest neighbor.
    best_ = DominationFunction(g_.size());
    for (std::size_t b = 0; b < cover_.size(); ++b) {
      Vertex a = cover_[b].front();
      best_.set(a, std::max(best_[a], demand_[b]));
    }
    best_total_ = best_.total();
    current_ = DominationFunction(g_.size());
    deficit_ = demand_;
    search(0, 0);
    return best_;
  }

 private:
  Weight largest_deficit() const {
    Weight m = 0;
    for (Weight d : deficit_) m = std::max(m, d);
    return m;
  }

  void search(std::size_t depth, Weight cost) {
    const Weight bound = largest_deficit();
    if (cost + bound >= best_total_) return;
    if (bound == 0) {
      best_ = current_;
      best_total_ = cost;
      return;
    }
    if (depth == order_.size()) return;
    const Vertex a = order_[depth];
    Weight top = 0;
    for (auto b : touches_[depth]) top = std::max(top, deficit_[b]);
    for (auto b : touches_[depth]) --open_slots_[b];
    for (Weight value = top; value >= 0; --value) {
      // Lower values only leave more demand uncovered.
      bool dead = false;
      for (auto b : touches_[depth]) {
        if (open_slots_[b] == 0 && deficit_[b] > value) dead = true;
      }
      if (dead) break;
      for (auto b : touches_[depth]) deficit_[b] -= value;
      current_.set(a, value);
      search(depth + 1, cost + value);
      current_.set(a, 0);
      for (auto b : touches_[depth]) deficit_[b] += value;
    }
    for (auto b : touches_[depth]) ++open_slots_[b];
  }

  const WeightedGraph& g_;
  std::vector<Weight> demand_;
  std::vector<std::vector<Vertex>> cover_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> touches_;
  std::vector<std::size_t> open_slots_;
  std::vector<Weight> deficit_;
  DominationFunction current_;
  DominationFunction best_;
  Weight best_total_ = std::numeric_limits<Weight>::max();
};

}  // namespace

DominationFunction min_cover_B(const SplitInstance& inst) {
  if (inst.clique.empty()) {
    DominationFunction g(inst.graph.size());
    for (Vertex b : inst.independent) g.set(b, inst.graph.weight(b));
    return g;
  }
  return CoverSearch(inst).run();
}

SplitResult solve_split(const SplitInstance& inst) {
  const auto& graph = inst.graph;
  auto g = min_cover_B(inst);
  const Weight cover = g.total();
  Weight heaviest = 0;
  std::optional<Vertex> top;
  for (Vertex a : inst.clique) {
    if (!top || graph.weight(a) > heaviest) {
      heaviest = graph.weight(a);
      top = a;
    }
  }

  SplitResult result;
  if (cover >= heaviest) {
    result.value = cover;
    result.dominating = std::move(g);
    result.witness_independent = inst.independent;
  } else {
    result.value = heaviest;
    g.add(*top, heaviest - cover);
    result.dominating = std::move(g);
    result.witness_independent = {*top};
  }
  result.witness_cost = result.value;
  if (!is_w_dominating(graph, result.dominating) || result.dominating.total() != result.value) {
    throw TheoremViolation("split extension does not dominate the graph");
  }
  return result;
}

}  // namespace domw
