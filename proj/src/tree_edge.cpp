#include "domw/tree_edge.hpp"

#include <algorithm>
#include <numeric>

#include "domw/errors.hpp"

namespace domw {

namespace {

Weight clipped(Weight x) { return std::max<Weight>(x, 0); }

Weight sum_over(const DominationFunction& f, std::span<const std::size_t> edges) {
  Weight s = 0;
  for (auto e : edges) s += f[e];
  return s;
}

}  // namespace

std::vector<std::size_t> weighted_edges(const TreeEdgeInstance& inst) {
  if (inst.edge_weights.size() != inst.tree.edges().size()) {
    throw InvalidInput("edge weight list does not match the host tree");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inst.edge_weights.size(); ++i) {
    if (inst.edge_weights[i]) out.push_back(i);
  }
  return out;
}

WeightedGraph line_graph(const TreeEdgeInstance& inst) {
  const auto f_edges = weighted_edges(inst);
  std::vector<Weight> weights;
  std::vector<std::vector<Vertex>> incident(inst.tree.size());
  for (std::size_t k = 0; k < f_edges.size(); ++k) {
    const auto [a, b] = inst.tree.edges()[f_edges[k]];
    weights.push_back(*inst.edge_weights[f_edges[k]]);
    incident[a].push_back(k);
    incident[b].push_back(k);
  }
  std::vector<Edge> edges;
  for (const auto& list : incident) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) edges.emplace_back(list[i], list[j]);
    }
  }
  return WeightedGraph(std::move(weights), edges);
}

RootedEdgeTree::RootedEdgeTree(std::vector<TreeEdge> edges, Vertex root)
    : edges_(std::move(edges)), root_(root) {
  if (edges_.empty()) throw EmptyEdgeSet();
  std::sort(edges_.begin(), edges_.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return a.id < b.id; });
  for (const auto& e : edges_) {
    vertices_.push_back(e.tail);
    vertices_.push_back(e.head);
  }
  vertices_ = make_vertex_set(std::move(vertices_));
  if (vertices_.size() != edges_.size() + 1) {
    throw InvalidInput("edge component is not a tree");
  }
  if (!std::binary_search(vertices_.begin(), vertices_.end(), root_)) {
    throw InvalidInput("root " + std::to_string(root_) + " is not in the component");
  }

  const std::size_t nv = vertices_.size();
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incident[local(edges_[e].tail)].push_back(e);
    incident[local(edges_[e].head)].push_back(e);
  }

  // Orient away from the root in BFS order; depths follow the visit order.
  out_.assign(nv, {});
  in_.assign(nv, std::nullopt);
  depth_.assign(edges_.size(), 0);
  height_.assign(edges_.size(), 0);
  std::vector<char> seen(nv, 0);
  std::vector<std::size_t> bfs_edges;
  std::vector<Vertex> queue{root_};
  seen[local(root_)] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Vertex u = queue[qi];
    for (auto e : incident[local(u)]) {
      auto& edge = edges_[e];
      const Vertex other = edge.tail == u ? edge.head : edge.tail;
      if (seen[local(other)]) continue;
      seen[local(other)] = 1;
      edge.tail = u;
      edge.head = other;
      out_[local(u)].push_back(e);
      in_[local(other)] = e;
      auto parent = in_[local(u)];
      depth_[e] = parent ? depth_[*parent] + 1 : 0;
      bfs_edges.push_back(e);
      queue.push_back(other);
    }
  }
  if (queue.size() != nv) throw InvalidInput("edge component is not connected");
  for (auto& list : out_) std::sort(list.begin(), list.end());
  for (auto it = bfs_edges.rbegin(); it != bfs_edges.rend(); ++it) {
    std::size_t h = 0;
    for (auto child : out_[local(edges_[*it].head)]) h = std::max(h, height_[child] + 1);
    height_[*it] = h;
  }
}

std::size_t RootedEdgeTree::local(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw UnknownVertex(v);
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::span<const std::size_t> RootedEdgeTree::out_edges(Vertex v) const { return out_[local(v)]; }

std::optional<std::size_t> RootedEdgeTree::in_edge(Vertex v) const { return in_[local(v)]; }

std::vector<std::size_t> RootedEdgeTree::neighborhood(std::size_t e) const {
  const auto& edge = edges_.at(e);
  std::vector<std::size_t> out;
  if (auto parent = in_edge(edge.tail)) out.push_back(*parent);
  for (auto x : out_edges(edge.tail)) out.push_back(x);
  for (auto x : out_edges(edge.head)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootedEdgeTree> reduce_to_full_tree(const TreeEdgeInstance& inst) {
  const auto f_edges = weighted_edges(inst);
  if (f_edges.empty()) throw EmptyEdgeSet();
  const std::size_t n = inst.tree.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto i : f_edges) {
    const auto [a, b] = inst.tree.edges()[i];
    parent[find(a)] = find(b);
  }
  // Components keyed by their smallest vertex, which is also the default root.
  std::vector<std::vector<TreeEdge>> by_root(n);
  std::vector<Vertex> min_vertex(n, n);
  for (Vertex v = 0; v < n; ++v) min_vertex[find(v)] = std::min(min_vertex[find(v)], v);
  for (std::size_t k = 0; k < f_edges.size(); ++k) {
    const auto [a, b] = inst.tree.edges()[f_edges[k]];
    by_root[min_vertex[find(a)]].push_back({a, b, k, *inst.edge_weights[f_edges[k]]});
  }
  std::vector<RootedEdgeTree> out;
  for (Vertex r = 0; r < n; ++r) {
    if (!by_root[r].empty()) out.emplace_back(std::move(by_root[r]), r);
  }
  return out;
}

Vertex choose_root(const RootedEdgeTree& t) { return t.vertices().front(); }

DominationFunction bottom_up_f(const RootedEdgeTree& t) {
  const std::size_t m = t.edge_count();
  DominationFunction f(m);
  std::vector<std::size_t> by_height(m);
  std::iota(by_height.begin(), by_height.end(), std::size_t{0});
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](std::size_t a, std::size_t b) { return t.height(a) < t.height(b); });
  for (auto e : by_height) {
    const Vertex v = t.edges()[e].head;
    const auto siblings = t.out_edges(v);
    const Weight below = sum_over(f, siblings);
    Weight need = 0;
    for (auto child : siblings) {
      const auto& c = t.edges()[child];
      need = std::max(need, clipped(c.weight - below - sum_over(f, t.out_edges(c.head))));
    }
    f.set(e, need);
  }
  return f;
}

RootAdjustment root_adjust(const RootedEdgeTree& t, const DominationFunction& f) {
  const auto top = t.out_edges(t.root());
  const Weight at_root = sum_over(f, top);
  RootAdjustment out{f, 0, std::nullopt};
  std::optional<std::size_t> best;
  Weight deficit = 0;
  for (auto e : top) {
    const auto& edge = t.edges()[e];
    const Weight d = edge.weight - at_root - sum_over(f, t.out_edges(edge.head));
    if (!best || d > deficit) {
      best = e;
      deficit = d;
    }
  }
  out.deficit = deficit;
  if (deficit > 0) {
    out.adjusted_edge = best;
    out.g.add(*best, deficit);
  }
  return out;
}

TreeExtraction extract_dispersed_tree(const RootedEdgeTree& t, const DominationFunction& g,
                                      Weight deficit, std::optional<std::size_t> adjusted_edge) {
  const std::size_t m = t.edge_count();
  if (g.domain_size() != m) throw InvalidInput("g does not match the edge tree");
  if (deficit > 0 && !adjusted_edge) {
    throw InvalidInput("positive deficit without an adjusted edge");
  }
  std::vector<char> alive(m, 1);
  std::size_t remaining = m;

  auto alive_neighborhood = [&](std::size_t e) {
    auto nb = t.neighborhood(e);
    std::erase_if(nb, [&](std::size_t x) { return !alive[x]; });
    return nb;
  };
  auto is_top = [&](std::size_t e) {
    auto parent = t.in_edge(t.edges()[e].tail);
    return !parent || !alive[*parent];
  };

  TreeExtraction out;
  bool first_layer = true;
  while (remaining > 0) {
    std::vector<std::size_t> top;
    for (std::size_t e = 0; e < m; ++e) {
      if (alive[e] && is_top(e)) top.push_back(e);
    }

    std::vector<std::size_t> chosen;
    if (first_layer && deficit > 0) {
      chosen.push_back(*adjusted_edge);
    } else {
      for (auto e : top) {
        if (g[e] == 0) continue;
        std::optional<std::size_t> pick;
        for (auto c : t.out_edges(t.edges()[e].head)) {
          if (!alive[c]) continue;
          if (sum_over(g, alive_neighborhood(c)) != t.edges()[c].weight) continue;
          if (!pick || g[c] > g[*pick]) pick = c;
        }
        if (!pick) {
          throw TheoremViolation("no tight child under edge id " + std::to_string(t.edges()[e].id));
        }
        chosen.push_back(*pick);
      }
    }
    first_layer = false;

    std::vector<std::size_t> deleted;
    Weight chosen_weight = 0;
    for (auto c : chosen) {
      chosen_weight += t.edges()[c].weight;
      for (auto x : alive_neighborhood(c)) deleted.push_back(x);
    }
    std::sort(deleted.begin(), deleted.end());
    // Overlapping neighborhoods of chosen edges would break the telescoping sum.
    if (std::adjacent_find(deleted.begin(), deleted.end()) != deleted.end()) {
      throw TheoremViolation("chosen edges share a neighbor in one layer");
    }
    for (auto e : top) {
      if (g[e] == 0) deleted.push_back(e);
    }
    deleted = make_vertex_set(std::move(deleted));
    if (deleted.empty()) throw TheoremViolation("deletion layer removed no edges");
    if (sum_over(g, deleted) != chosen_weight) {
      throw TheoremViolation("layer accounting g[E_k] != w[I_k]");
    }
    for (auto x : deleted) alive[x] = 0;
    remaining -= deleted.size();
    out.dispersed.insert(out.dispersed.end(), chosen.begin(), chosen.end());
    std::sort(chosen.begin(), chosen.end());
    out.layers.chosen.push_back(std::move(chosen));
    out.layers.deleted.push_back(std::move(deleted));
  }
  std::sort(out.dispersed.begin(), out.dispersed.end());
  return out;
}

Certificate solve_tree(const TreeEdgeInstance& inst, std::optional<Vertex> preferred_root) {
  const auto graph = line_graph(inst);
  Certificate cert{DominationFunction(graph.size()), {}, 0};
  for (auto component : reduce_to_full_tree(inst)) {
    if (preferred_root && component.root() != *preferred_root &&
        std::binary_search(component.vertices().begin(), component.vertices().end(),
                           *preferred_root)) {
      component = component.rerooted(*preferred_root);
    }
    const auto f = bottom_up_f(component);
    const auto adjustment = root_adjust(component, f);
    const auto extraction = extract_dispersed_tree(component, adjustment.g, adjustment.deficit,
                                                   adjustment.adjusted_edge);
    for (std::size_t e = 0; e < component.edge_count(); ++e) {
      cert.dominating.set(component.edges()[e].id, adjustment.g[e]);
    }
    for (auto e : extraction.dispersed) cert.dispersed.push_back(component.edges()[e].id);
  }
  cert.dispersed = make_vertex_set(std::move(cert.dispersed));
  cert.value = cert.dominating.total();
  if (auto check = verify_certificate(graph, cert); !check) {
    throw TheoremViolation(std::string("tree certificate failed verification: ") +
                           to_string(check.defect));
  }
  return cert;
}

}  // namespace domw
