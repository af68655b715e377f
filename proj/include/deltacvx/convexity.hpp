#pragma once

#include <cstddef>
#include <optional>

#include "deltacvx/graph.hpp"

namespace deltacvx {

/// s together with every vertex forming a triangle with two members of s.
/// A single application of the operator.
VertexSet delta_interval(const Graph& g, const VertexSet& s);

/// Fixpoint test: delta_interval(g, s) == s.
bool is_convex(const Graph& g, const VertexSet& s);

/// Neighbourhood formulation: for every w outside s, N(w) ∩ s is independent.
/// Always agrees with is_convex.
bool is_convex_by_neighborhoods(const Graph& g, const VertexSet& s);

/// A triangle with exactly two vertices in s, if any. Such a triangle exists
/// iff s is not convex.
std::optional<Triangle> convexity_witness(const Graph& g, const VertexSet& s);

struct HullResult {
  VertexSet hull;
  /// Number of interval applications that enlarged the set.
  std::size_t rounds = 0;
};

/// Least convex superset of s, by iterating delta_interval to a fixpoint.
HullResult convex_hull(const Graph& g, const VertexSet& s);

bool is_hull_set(const Graph& g, const VertexSet& s);

struct HullNumberOptions {
  std::size_t cap = 20;
};

/// A hull set of minimum size. Exhaustive over subsets by increasing size;
/// throws CapacityError when the order exceeds opts.cap.
VertexSet minimum_hull_set(const Graph& g, HullNumberOptions opts = {});
std::size_t hull_number(const Graph& g, HullNumberOptions opts = {});

/// v lies in no triangle.
bool is_extreme_vertex(const Graph& g, Vertex v);
/// V(g) - {v} is convex. Always agrees with is_extreme_vertex.
bool is_extreme_vertex_by_complement(const Graph& g, Vertex v);
VertexSet extreme_vertices(const Graph& g);

}  // namespace deltacvx
