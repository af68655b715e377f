#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltacvx/cover_partition.hpp"

namespace deltacvx {

/// G' = G plus a universal vertex, built from a k-colorability instance G.
struct ReductionOutput {
  Graph reduced;
  Vertex universal_vertex = 0;
  std::size_t k = 0;
  /// vertex_map[v] is the id of v in `reduced` (the identity embedding).
  std::vector<Vertex> vertex_map;
};

/// Requires g connected with at least 2 vertices and k >= 3.
ReductionOutput reduce_coloring(const Graph& g, std::size_t k);

/// Lifts a proper coloring of G (colors in 0..k-1) to the convex
/// (k+1)-partition (V_1..V_k, {u}) of G'. When fewer than k colors are used,
/// vertices are split off into singleton classes until k classes are
/// nonempty; throws PreconditionError if G has fewer than k vertices.
ConvexFamily lift_coloring(const ReductionOutput& red, const std::vector<std::size_t>& colors);

/// Thrown by extract_coloring when a class of the family contains an edge.
/// `walk` starts at one endpoint of the edge and ends at a vertex of G outside
/// the class; each consecutive pair forms a triangle with the universal
/// vertex, which forces the whole walk into the class if it were convex.
class IndependenceViolation : public PreconditionError {
 public:
  IndependenceViolation(const std::string& what, std::size_t set_index, Edge edge,
                        std::vector<Vertex> walk)
      : PreconditionError(what), set_index_(set_index), edge_(edge), walk_(std::move(walk)) {}

  std::size_t set_index() const noexcept { return set_index_; }
  Edge edge() const noexcept { return edge_; }
  const std::vector<Vertex>& walk() const noexcept { return walk_; }

 private:
  std::size_t set_index_;
  Edge edge_;
  std::vector<Vertex> walk_;
};

/// Recovers a proper k-coloring of G from a convex (k+1)-cover of G'.
/// Classes are first checked to be independent, then overlaps are removed
/// (each vertex stays in its first class), the class {u} is set aside and
/// the remaining k classes become the colors. Throws IndependenceViolation
/// or PreconditionError for families that are not valid convex (k+1)-covers.
std::vector<std::size_t> extract_coloring(const Graph& g, const ReductionOutput& red,
                                          const ConvexFamily& family);

}  // namespace deltacvx
