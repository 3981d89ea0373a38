#include "domw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "domw/errors.hpp"

namespace domw {

namespace {

void check_vertex(const WeightedGraph& g, Vertex v) {
  if (!g.contains(v)) throw UnknownVertex(v);
}

void check_vertices(const WeightedGraph& g, std::span<const Vertex> s) {
  for (Vertex v : s) check_vertex(g, v);
}

// Marks every vertex within distance <= radius of `source`.
void mark_ball(const WeightedGraph& g, Vertex source, std::size_t radius,
               std::vector<std::size_t>& stamp, std::size_t token) {
  std::vector<Vertex> frontier{source};
  stamp[source] = token;
  for (std::size_t r = 0; r < radius; ++r) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex x : g.neighbors(u)) {
        if (stamp[x] != token) {
          stamp[x] = token;
          next.push_back(x);
        }
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

WeightedGraph::WeightedGraph(std::vector<Weight> weights, std::span<const Edge> edges)
    : weights_(std::move(weights)), adjacency_(weights_.size()) {
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    if (weights_[v] < 1) {
      throw InvalidInput("vertex " + std::to_string(v) + " has weight " +
                         std::to_string(weights_[v]) + ", weights must be >= 1");
    }
  }
  for (auto [u, v] : edges) {
    if (u >= size()) throw UnknownVertex(u);
    if (v >= size()) throw UnknownVertex(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    list = make_vertex_set(std::move(list));
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

Weight WeightedGraph::weight(Vertex v) const {
  if (v >= size()) throw UnknownVertex(v);
  return weights_[v];
}

std::span<const Vertex> WeightedGraph::neighbors(Vertex v) const {
  if (v >= size()) throw UnknownVertex(v);
  return adjacency_[v];
}

bool WeightedGraph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  if (v >= size()) throw UnknownVertex(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DominationFunction::DominationFunction(std::vector<Weight> values) : values_(std::move(values)) {
  for (Weight x : values_) {
    if (x < 0) throw InvalidInput("domination function values must be nonnegative");
  }
}

DominationFunction DominationFunction::unit(std::size_t n, Vertex v, Weight amount) {
  DominationFunction f(n);
  f.set(v, amount);
  return f;
}

void DominationFunction::set(Vertex v, Weight value) {
  if (v >= values_.size()) throw UnknownVertex(v);
  if (value < 0) throw InvalidInput("domination function values must be nonnegative");
  values_[v] = value;
}

void DominationFunction::add(Vertex v, Weight amount) { set(v, (*this)[v] + amount); }

Weight DominationFunction::total() const {
  return std::accumulate(values_.begin(), values_.end(), Weight{0});
}

VertexSet DominationFunction::support() const {
  VertexSet out;
  for (Vertex v = 0; v < values_.size(); ++v) {
    if (values_[v] != 0) out.push_back(v);
  }
  return out;
}

DominationFunction& DominationFunction::operator+=(const DominationFunction& other) {
  if (other.domain_size() != domain_size()) {
    throw InvalidInput("adding domination functions over different domains");
  }
  for (std::size_t v = 0; v < values_.size(); ++v) values_[v] += other.values_[v];
  return *this;
}

const char* to_string(CertificateDefect defect) {
  switch (defect) {
    case CertificateDefect::None: return "ok";
    case CertificateDefect::Malformed: return "Malformed";
    case CertificateDefect::NotDominating: return "NotDominating";
    case CertificateDefect::NotDispersed: return "NotDispersed";
    case CertificateDefect::ValueMismatch: return "ValueMismatch";
  }
  return "unknown";
}

HostTree::HostTree(std::size_t n, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(n) {
  if (n == 0) throw InvalidInput("host tree must have at least one vertex");
  if (edges_.size() != n - 1) {
    throw InvalidInput("host tree on " + std::to_string(n) + " vertices needs " +
                       std::to_string(n - 1) + " edges, got " +
                       std::to_string(edges_.size()));
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges_) {
    if (u >= n) throw UnknownVertex(u);
    if (v >= n) throw UnknownVertex(v);
    auto ru = find(u), rv = find(v);
    if (ru == rv) throw InvalidInput("host tree edges contain a cycle");
    parent[ru] = rv;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const Vertex> HostTree::neighbors(Vertex v) const {
  if (v >= size()) throw UnknownVertex(v);
  return adjacency_[v];
}

WeightedGraph build_intersection_graph(const HostTree& host,
                                       std::span<const VertexSet> subtrees,
                                       std::span<const Weight> weights) {
  if (subtrees.size() != weights.size()) {
    throw InvalidInput("got " + std::to_string(subtrees.size()) + " subtrees but " +
                       std::to_string(weights.size()) + " weights");
  }
  // members[x] lists the subtrees containing host vertex x.
  std::vector<std::vector<Vertex>> members(host.size());
  std::vector<char> inside(host.size(), 0);
  for (std::size_t i = 0; i < subtrees.size(); ++i) {
    const auto& s = subtrees[i];
    if (s.empty()) throw EmptySubtree(i);
    for (Vertex x : s) {
      if (x >= host.size()) throw UnknownVertex(x);
      inside[x] = 1;
    }
    std::size_t reached = 0;
    std::vector<Vertex> stack{s.front()};
    inside[s.front()] = 2;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex y : host.neighbors(x)) {
        if (inside[y] == 1) {
          inside[y] = 2;
          stack.push_back(y);
        }
      }
    }
    std::size_t distinct = 0;
    for (Vertex x : s) {
      if (inside[x] != 0) ++distinct;
      inside[x] = 0;
    }
    if (reached != distinct) throw DisconnectedSubtree(i);
    for (Vertex x : s) members[x].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& list : members) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        if (list[a] != list[b]) edges.emplace_back(list[a], list[b]);
      }
    }
  }
  return WeightedGraph(std::vector<Weight>(weights.begin(), weights.end()), edges);
}

VertexSet closed_neighborhood(const WeightedGraph& g, Vertex v) {
  auto open = g.neighbors(v);
  VertexSet out(open.begin(), open.end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::optional<std::size_t> distance(const WeightedGraph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return 0;
  std::vector<std::size_t> dist(g.size(), SIZE_MAX);
  std::queue<Vertex> queue;
  dist[u] = 0;
  queue.push(u);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] != SIZE_MAX) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push(y);
    }
  }
  return std::nullopt;
}

bool is_dispersed(const WeightedGraph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  std::vector<std::size_t> stamp(g.size(), SIZE_MAX);
  for (std::size_t i = 0; i < s.size(); ++i) {
    mark_ball(g, s[i], 2, stamp, i);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i && stamp[s[j]] == i) return false;
    }
  }
  return true;
}

bool is_independent(const WeightedGraph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

Weight set_sum(const DominationFunction& f, std::span<const Vertex> a) {
  Weight sum = 0;
  for (Vertex v : a) {
    if (v >= f.domain_size()) throw UnknownVertex(v);
    sum += f[v];
  }
  return sum;
}

Weight weight_sum(const WeightedGraph& g, std::span<const Vertex> a) {
  Weight sum = 0;
  for (Vertex v : a) sum += g.weight(v);
  return sum;
}

Weight neighborhood_sum(const WeightedGraph& g, const DominationFunction& f, Vertex v) {
  Weight sum = f[v];
  for (Vertex u : g.neighbors(v)) sum += f[u];
  return sum;
}

bool is_w_dominating(const WeightedGraph& g, const DominationFunction& f,
                     std::span<const Vertex> demanded) {
  check_vertices(g, demanded);
  if (f.domain_size() != g.size()) {
    throw InvalidInput("domination function domain does not match the graph");
  }
  return std::all_of(demanded.begin(), demanded.end(), [&](Vertex u) {
    return neighborhood_sum(g, f, u) >= g.weight(u);
  });
}

bool is_w_dominating(const WeightedGraph& g, const DominationFunction& f) {
  std::vector<Vertex> all(g.size());
  std::iota(all.begin(), all.end(), Vertex{0});
  return is_w_dominating(g, f, all);
}

CertificateCheck verify_certificate(const WeightedGraph& g, const Certificate& c) {
  if (c.dominating.domain_size() != g.size()) return {CertificateDefect::Malformed};
  for (Vertex v : c.dispersed) {
    if (!g.contains(v)) return {CertificateDefect::Malformed};
  }
  if (!std::is_sorted(c.dispersed.begin(), c.dispersed.end()) ||
      std::adjacent_find(c.dispersed.begin(), c.dispersed.end()) != c.dispersed.end()) {
    return {CertificateDefect::Malformed};
  }
  if (!is_w_dominating(g, c.dominating)) return {CertificateDefect::NotDominating};
  if (!is_dispersed(g, c.dispersed)) return {CertificateDefect::NotDispersed};
  if (c.dominating.total() != c.value || weight_sum(g, c.dispersed) != c.value) {
    return {CertificateDefect::ValueMismatch};
  }
  return {};
}

}  // namespace domw
