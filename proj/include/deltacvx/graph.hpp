#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltacvx/vertex_set.hpp"

namespace deltacvx {

using Edge = std::pair<Vertex, Vertex>;

/// A 3-clique, vertices sorted ascending.
struct Triangle {
  Vertex a = 0, b = 0, c = 0;

  Triangle() = default;
  Triangle(Vertex x, Vertex y, Vertex z);

  std::array<Vertex, 3> vertices() const { return {a, b, c}; }
  bool contains(Vertex v) const noexcept { return v == a || v == b || v == c; }

  auto operator<=>(const Triangle&) const = default;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// The triangle list is computed on first request and shared between copies.
class Graph {
 public:
  Graph();
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Duplicate edges (in either orientation)
  /// are collapsed; self-loops and out-of-range ids throw DomainError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;
  std::span<const Vertex> neighbor_list(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbor_list(v).size(); }

  /// All edges (u < v), sorted.
  std::vector<Edge> edges() const;

  /// Every triangle exactly once, sorted lexicographically.
  const std::vector<Triangle>& triangles() const;
  /// Indices into triangles() of the triangles containing v.
  std::span<const std::size_t> triangles_at(Vertex v) const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Induced subgraph on `keep`, relabelled densely in increasing id order.
  Graph induced(const VertexSet& keep) const;

  /// Throws DomainError unless v < order().
  void check_vertex(Vertex v) const;
  /// Throws DomainError unless s has this graph's universe.
  void check_set(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  struct TriangleCache;

  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t edge_count_ = 0;
  std::shared_ptr<TriangleCache> cache_;
};

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
/// Connected component of g[allowed] containing `start` (start must be allowed).
VertexSet component_within(const Graph& g, const VertexSet& allowed, Vertex start);

/// True iff no two members of s are adjacent.
bool is_independent(const Graph& g, const VertexSet& s);

/// Maximal 2-connected subgraphs (and bridges) plus articulation points.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
};

/// Requires g connected with at least 2 vertices.
BlockDecomposition block_decomposition(const Graph& g);

/// Connected and every block induces a complete graph.
bool is_block_graph(const Graph& g);

bool is_complete(const Graph& g);

struct ChordalResult {
  bool chordal = false;
  /// Perfect elimination ordering (first entry eliminated first); empty when
  /// the graph is not chordal.
  std::vector<Vertex> elimination_order;
};

/// Maximum cardinality search followed by a PEO check.
ChordalResult is_chordal(const Graph& g);

struct ColoringOptions {
  /// Largest non-chordal order accepted by the exhaustive search.
  std::size_t cap = 16;
};

/// Proper coloring using exactly chromatic_number(g) colors; colors[v] is in
/// 0..chi-1.
std::vector<std::size_t> optimal_coloring(const Graph& g, ColoringOptions opts = {});
std::size_t chromatic_number(const Graph& g, ColoringOptions opts = {});
/// True iff g has a proper coloring with at most k colors.
bool is_k_colorable(const Graph& g, std::size_t k, ColoringOptions opts = {});
bool is_proper_coloring(const Graph& g, std::span<const std::size_t> colors);

/// Returns the extended graph and the id (== g.order()) of the new vertex.
std::pair<Graph, Vertex> add_universal_vertex(const Graph& g);

}  // namespace deltacvx
