#ifndef DOMW_TREE_EDGE_HPP
#define DOMW_TREE_EDGE_HPP

#include <optional>
#include <span>
#include <vector>

#include "domw/graph.hpp"

namespace domw {

/// A host tree together with the weighted edge subset F. edge_weights runs
/// parallel to tree.edges(); nullopt marks an edge outside F.
struct TreeEdgeInstance {
  HostTree tree;
  std::vector<std::optional<Weight>> edge_weights;

  bool operator==(const TreeEdgeInstance&) const = default;
};

/// Host-edge indices of F, in host order. The k-th entry is vertex k of the
/// line graph.
std::vector<std::size_t> weighted_edges(const TreeEdgeInstance& inst);

/// Line graph of F: two F-edges are adjacent iff they share an endpoint.
WeightedGraph line_graph(const TreeEdgeInstance& inst);

/// A tree edge carrying its line-graph id; tail is the endpoint nearer the root
/// once the tree is rooted.
struct TreeEdge {
  Vertex tail = 0;
  Vertex head = 0;
  Vertex id = 0;
  Weight weight = 1;
};

/// One connected component of F, rooted and oriented away from the root.
/// Edges are indexed locally 0..m-1 in ascending line-graph id; every
/// DominationFunction over a RootedEdgeTree uses this local index.
class RootedEdgeTree {
 public:
  /// Throws InvalidInput unless the edges form a tree containing `root`.
  RootedEdgeTree(std::vector<TreeEdge> edges, Vertex root);

  Vertex root() const { return root_; }
  std::span<const TreeEdge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Host vertices of the component, ascending.
  std::span<const Vertex> vertices() const { return vertices_; }

  /// A(v): local indices of the edges leaving host vertex v.
  std::span<const std::size_t> out_edges(Vertex v) const;
  /// Local index of the edge entering v; nullopt at the root.
  std::optional<std::size_t> in_edge(Vertex v) const;

  std::size_t height(std::size_t e) const { return height_.at(e); }
  std::size_t depth(std::size_t e) const { return depth_.at(e); }

  /// Closed neighborhood of e = (v, x) in the line graph: in_edge(v) plus
  /// A(v) and A(x).
  std::vector<std::size_t> neighborhood(std::size_t e) const;

  RootedEdgeTree rerooted(Vertex new_root) const { return RootedEdgeTree(edges_, new_root); }

 private:
  std::size_t local(Vertex v) const;

  std::vector<TreeEdge> edges_;
  Vertex root_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::optional<std::size_t>> in_;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> depth_;
};

/// Removes the edges outside F and returns one rooted tree per component that
/// still has an edge. Throws EmptyEdgeSet if F is empty.
std::vector<RootedEdgeTree> reduce_to_full_tree(const TreeEdgeInstance& inst);

/// Smallest host vertex id of the component.
Vertex choose_root(const RootedEdgeTree& t);

/// Zero on height-0 edges; an edge of height k covers the deficit of its
/// worst child: f(e) = max over children e'=(v,x) of
/// (w(e') - f[A(v)] - f[A(x)])^+, evaluated in ascending height.
DominationFunction bottom_up_f(const RootedEdgeTree& t);

struct RootAdjustment {
  DominationFunction g;
  /// Largest remaining deficit among the root edges; <= 0 means f already dominates.
  Weight deficit = 0;
  std::optional<std::size_t> adjusted_edge;
};

RootAdjustment root_adjust(const RootedEdgeTree& t, const DominationFunction& f);

/// Layer k of the deletion process: chosen edges I_k and deleted edges E_k,
/// as local indices.
struct DeletionLayers {
  std::vector<std::vector<std::size_t>> chosen;
  std::vector<std::vector<std::size_t>> deleted;
};

struct TreeExtraction {
  std::vector<std::size_t> dispersed;  // local indices, ascending
  DeletionLayers layers;
};

/// Peels the tree top-down. Each layer picks, under every top edge with
/// g != 0, a tight child edge (w = g over its closed neighborhood among the
/// surviving edges), then deletes the picks with their neighbors along with
/// the zero top edges. The first layer instead picks the adjusted edge when the
/// deficit was positive. Throws TheoremViolation on an empty candidate set or
/// a layer with g[E_k] != w[I_k].
TreeExtraction extract_dispersed_tree(const RootedEdgeTree& t, const DominationFunction& g,
                                      Weight deficit, std::optional<std::size_t> adjusted_edge);

/// Certificate over line_graph(inst). Each component is rooted at
/// `preferred_root` when it contains that vertex, else at choose_root.
Certificate solve_tree(const TreeEdgeInstance& inst,
                       std::optional<Vertex> preferred_root = std::nullopt);

}  // namespace domw

#endif  // DOMW_TREE_EDGE_HPP
