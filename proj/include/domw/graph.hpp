#ifndef DOMW_GRAPH_HPP
#define DOMW_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace domw {

/// Vertices are dense ids 0..n-1 assigned in input order.
using Vertex = std::size_t;
using Weight = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);

/// Simple undirected graph with a positive integer weight on every vertex.
/// Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws InvalidInput on self-loops or weights below 1 and UnknownVertex
  /// on out-of-range endpoints. Parallel edges are merged.
  WeightedGraph(std::vector<Weight> weights, std::span<const Edge> edges);

  std::size_t size() const { return weights_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  Weight weight(Vertex v) const;
  std::span<const Weight> weights() const { return weights_; }

  /// Open neighborhood, ascending ids.
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v < size(); }

  /// Each edge once, as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  std::vector<Weight> weights_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Nonnegative integer labelling of the vertices. Also used for residual
/// demands, which may be zero.
class DominationFunction {
 public:
  DominationFunction() = default;
  explicit DominationFunction(std::size_t n) : values_(n, 0) {}
  /// Throws InvalidInput on a negative entry.
  explicit DominationFunction(std::vector<Weight> values);
  /// Braces list values, so DominationFunction({7}) has one entry.
  explicit DominationFunction(std::initializer_list<Weight> values)
      : DominationFunction(std::vector<Weight>(values)) {}

  /// amount * indicator of v.
  static DominationFunction unit(std::size_t n, Vertex v, Weight amount = 1);

  std::size_t domain_size() const { return values_.size(); }
  Weight operator[](Vertex v) const { return values_.at(v); }
  void set(Vertex v, Weight value);
  void add(Vertex v, Weight amount);

  /// |f|, the sum of all values.
  Weight total() const;
  std::span<const Weight> values() const { return values_; }
  VertexSet support() const;

  DominationFunction& operator+=(const DominationFunction& other);
  bool operator==(const DominationFunction&) const = default;

 private:
  std::vector<Weight> values_;
};

/// Certificate of optimality: a w-dominating function and a dispersed set of
/// the same value. Weak duality makes equality a proof that both are optimal.
struct Certificate {
  DominationFunction dominating;
  VertexSet dispersed;
  Weight value = 0;

  bool operator==(const Certificate&) const = default;
};

enum class CertificateDefect {
  None,
  Malformed,  // function domain or set ids do not match the graph
  NotDominating,
  NotDispersed,
  ValueMismatch,
};

struct CertificateCheck {
  CertificateDefect defect = CertificateDefect::None;
  explicit operator bool() const { return defect == CertificateDefect::None; }
};

const char* to_string(CertificateDefect defect);

/// Tree on vertices 0..n-1. Throws InvalidInput unless the edges form a
/// spanning tree (connected, acyclic, n - 1 edges).
class HostTree {
 public:
  HostTree() = default;
  HostTree(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;

  bool operator==(const HostTree& other) const { return edges_ == other.edges_ && size() == other.size(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Intersection graph of a family of subtrees: one vertex per subtree, edges
/// between subtrees sharing a host vertex, weights copied by position.
WeightedGraph build_intersection_graph(const HostTree& host,
                                       std::span<const VertexSet> subtrees,
                                       std::span<const Weight> weights);

/// N(v): v together with its neighbors.
VertexSet closed_neighborhood(const WeightedGraph& g, Vertex v);

/// Shortest-path length in edges; nullopt when u and v are disconnected.
std::optional<std::size_t> distance(const WeightedGraph& g, Vertex u, Vertex v);

/// Pairwise distance >= 3 (unreachable pairs qualify).
bool is_dispersed(const WeightedGraph& g, std::span<const Vertex> s);
bool is_independent(const WeightedGraph& g, std::span<const Vertex> s);

/// f[A].
Weight set_sum(const DominationFunction& f, std::span<const Vertex> a);
/// w[A].
Weight weight_sum(const WeightedGraph& g, std::span<const Vertex> a);
/// f[N(v)].
Weight neighborhood_sum(const WeightedGraph& g, const DominationFunction& f, Vertex v);

/// f[N(u)] >= w(u) for every u in `demanded`.
bool is_w_dominating(const WeightedGraph& g, const DominationFunction& f,
                     std::span<const Vertex> demanded);
bool is_w_dominating(const WeightedGraph& g, const DominationFunction& f);

CertificateCheck verify_certificate(const WeightedGraph& g, const Certificate& c);

}  // namespace domw

#endif  // DOMW_GRAPH_HPP
