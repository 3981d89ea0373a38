#include "domw/interval.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "domw/errors.hpp"

namespace domw {

namespace {

// Furthest right, then smaller left endpoint (the containment-maximal one),
// then larger id. The winner is last among the candidates in
// order_by_right_endpoint.
bool reaches_further_right(const IntervalFamily& fam, Vertex a, Vertex b) {
  const auto& ia = fam[a];
  const auto& ib = fam[b];
  return std::tuple(-ia.right, ia.left, b) < std::tuple(-ib.right, ib.left, a);
}

Vertex furthest_right_neighbor(const IntervalFamily& fam, const WeightedGraph& g, Vertex v) {
  Vertex best = v;
  for (Vertex u : g.neighbors(v)) {
    if (reaches_further_right(fam, u, best)) best = u;
  }
  return best;
}

Weight clipped(Weight x) { return std::max<Weight>(x, 0); }

}  // namespace

IntervalFamily::IntervalFamily(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (iv.left > iv.right) {
      throw InvalidInput("interval " + std::to_string(i) + " has left endpoint " +
                         std::to_string(iv.left) + " > right endpoint " +
                         std::to_string(iv.right));
    }
    if (iv.weight < 1) throw InvalidInput("interval " + std::to_string(i) + " has weight < 1");
  }
}

IntervalFamily IntervalFamily::mirrored() const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) out.push_back({-iv.right, -iv.left, iv.weight});
  return IntervalFamily(std::move(out));
}

WeightedGraph intersection_graph(const IntervalFamily& fam) {
  std::vector<Weight> weights;
  weights.reserve(fam.size());
  for (const auto& iv : fam.intervals()) weights.push_back(iv.weight);
  // Sweep by left endpoint; only intervals whose right end is still ahead can meet.
  std::vector<Vertex> by_left(fam.size());
  std::iota(by_left.begin(), by_left.end(), Vertex{0});
  std::sort(by_left.begin(), by_left.end(), [&](Vertex a, Vertex b) {
    return std::pair(fam[a].left, a) < std::pair(fam[b].left, b);
  });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < by_left.size(); ++i) {
    for (std::size_t j = i + 1; j < by_left.size(); ++j) {
      if (fam[by_left[j]].left > fam[by_left[i]].right) break;
      edges.emplace_back(by_left[i], by_left[j]);
    }
  }
  return WeightedGraph(std::move(weights), edges);
}

DominationFunction GreedyTrace::replay(std::size_t n) const {
  DominationFunction f(n);
  for (const auto& step : steps) f.add(step.target, step.amount);
  return f;
}

std::vector<Vertex> order_by_right_endpoint(const IntervalFamily& fam) {
  std::vector<Vertex> order(fam.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::tuple(fam[a].right, fam[b].left, a) < std::tuple(fam[b].right, fam[a].left, b);
  });
  return order;
}

std::vector<Vertex> order_by_left_endpoint_descending(const IntervalFamily& fam) {
  return order_by_right_endpoint(fam.mirrored());
}

GreedyResult forward_greedy(const IntervalFamily& fam) {
  const auto g = intersection_graph(fam);
  const std::size_t n = fam.size();
  GreedyResult result{DominationFunction(n), {}};
  auto& f = result.function;
  std::vector<Weight> residual(g.weights().begin(), g.weights().end());

  // Residuals only decrease, so the first positive one in enumeration order
  // never lies behind the scan position.
  for (Vertex v : order_by_right_endpoint(fam)) {
    if (residual[v] == 0) continue;
    const Vertex target = furthest_right_neighbor(fam, g, v);
    const Weight amount = residual[v];
    f.add(target, amount);
    result.trace.steps.push_back({v, target, amount});
    for (Vertex z : closed_neighborhood(g, target)) {
      residual[z] = clipped(residual[z] - amount);
      if (residual[z] != clipped(g.weight(z) - neighborhood_sum(g, f, z))) {
        throw TheoremViolation("greedy residual drifted at vertex " + std::to_string(z));
      }
    }
    if (residual[v] != 0) {
      throw TheoremViolation("greedy step left vertex " + std::to_string(v) + " undominated");
    }
  }
  return result;
}

GreedyResult backward_greedy(const IntervalFamily& fam) { return forward_greedy(fam.mirrored()); }

DispersedExtraction extract_dispersed(const IntervalFamily& fam, const DominationFunction& f,
                                      const DominationFunction& g,
                                      const GreedyTrace& backward_trace) {
  const auto graph = intersection_graph(fam);
  const std::size_t n = fam.size();
  if (f.domain_size() != n || g.domain_size() != n) {
    throw InvalidInput("domination functions do not match the interval family");
  }
  const auto order = order_by_right_endpoint(fam);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  const auto mirror = fam.mirrored();
  // v must be the interval the backward sweep would charge for z, and z's
  // demand must be met with equality by g.
  auto is_witness = [&](Vertex z, Vertex v) {
    return furthest_right_neighbor(mirror, graph, z) == v &&
           neighborhood_sum(graph, g, z) == graph.weight(z);
  };

  DispersedExtraction out;
  auto& dec = out.decomposition;
  std::size_t p = 0;
  while (p < n) {
    const Vertex v = order[p];
    if (g[v] == 0) {
      if (f[v] != 0) {
        throw TheoremViolation("f(" + std::to_string(v) + ") > 0 where g vanishes");
      }
      dec.zero.push_back(dec.blocks.size());
      dec.blocks.push_back({v});
      ++p;
      continue;
    }

    std::optional<Vertex> witness;
    for (const auto& step : backward_trace.steps) {
      if (step.target == v && is_witness(step.source, v) &&
          (!witness || step.source < *witness)) {
        witness = step.source;
      }
    }
    if (!witness) {
      for (Vertex z : closed_neighborhood(graph, v)) {
        if (is_witness(z, v)) {
          witness = z;
          break;
        }
      }
    }
    if (!witness) {
      throw TheoremViolation("no witness for interval " + std::to_string(v) +
                             " with positive backward value");
    }

    // Earlier members of N(z) are contained in v and already sit in zero blocks.
    std::size_t last = 0;
    for (Vertex u : closed_neighborhood(graph, *witness)) {
      last = std::max(last, position[u]);
      if (position[u] < p && (f[u] != 0 || g[u] != 0)) {
        throw TheoremViolation("neighborhood of witness " + std::to_string(*witness) +
                               " reaches into an earlier block");
      }
    }
    std::vector<Vertex> block(order.begin() + static_cast<std::ptrdiff_t>(p),
                              order.begin() + static_cast<std::ptrdiff_t>(last + 1));
    const Weight demand = graph.weight(*witness);
    if (set_sum(f, block) != demand || set_sum(g, block) != demand) {
      throw TheoremViolation("block accounting failed for witness " + std::to_string(*witness));
    }
    dec.carrying.push_back(dec.blocks.size());
    dec.representatives.push_back(*witness);
    dec.blocks.push_back(std::move(block));
    out.dispersed.push_back(*witness);
    p = last + 1;
  }

  out.dispersed = make_vertex_set(std::move(out.dispersed));
  const Weight total = weight_sum(graph, out.dispersed);
  if (total != f.total() || total != g.total()) {
    throw TheoremViolation("dispersed weight " + std::to_string(total) + " differs from |f| = " +
                           std::to_string(f.total()));
  }
  if (!is_dispersed(graph, out.dispersed)) {
    throw TheoremViolation("extracted set is not dispersed");
  }
  return out;
}

Certificate solve_interval(const IntervalFamily& fam) {
  auto forward = forward_greedy(fam);
  auto backward = backward_greedy(fam);
  if (forward.function.total() != backward.function.total()) {
    throw TheoremViolation("forward and backward greedy sizes differ: " +
                           std::to_string(forward.function.total()) + " vs " +
                           std::to_string(backward.function.total()));
  }
  auto extraction = extract_dispersed(fam, forward.function, backward.function, backward.trace);
  Certificate cert{std::move(forward.function), std::move(extraction.dispersed), 0};
  cert.value = cert.dominating.total();
  if (!verify_certificate(intersection_graph(fam), cert)) {
    throw TheoremViolation("interval certificate failed verification");
  }
  return cert;
}

}  // namespace domw
