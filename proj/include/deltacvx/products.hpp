#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "deltacvx/cover_partition.hpp"

namespace deltacvx {

enum class ProductKind { Cartesian, Strong, Lexicographic };

std::string_view to_string(ProductKind kind);
/// Accepts "cartesian", "strong", "lexicographic" (or "lex").
ProductKind parse_product_kind(std::string_view name);

/// Product graph on V(G) x V(H). Vertex (g, h) has id g * |V(H)| + h.
class ProductGraph {
 public:
  ProductGraph(Graph left, Graph right, ProductKind kind);

  const Graph& left() const noexcept { return left_; }
  const Graph& right() const noexcept { return right_; }
  ProductKind kind() const noexcept { return kind_; }
  const Graph& graph() const noexcept { return graph_; }

  Vertex vertex(Vertex g, Vertex h) const;
  std::pair<Vertex, Vertex> coordinates(Vertex v) const;

  /// {V_i x V(H)} for a family on the left factor.
  ConvexFamily lift_left(const ConvexFamily& family) const;
  /// {V(G) x W_i} for a family on the right factor.
  ConvexFamily lift_right(const ConvexFamily& family) const;

 private:
  Graph left_;
  Graph right_;
  ProductKind kind_;
  Graph graph_;
};

/// Requires both factors nonempty.
ProductGraph product(const Graph& g, const Graph& h, ProductKind kind);

/// One lifted witness together with whether it validated on the product.
struct LiftedWitness {
  std::string source;
  ConvexFamily family;
  bool valid = false;
};

/// Exact cover/partition numbers of two factors and of their Cartesian
/// product, the upper-bound and equality statements derived from them, and
/// the witnesses lifted from factor covers and partitions.
struct CartesianBoundsReport {
  std::size_t phi_left = 0, phi_right = 0, phi_product = 0;
  std::size_t theta_left = 0, theta_right = 0, theta_product = 0;

  bool factor_has_extreme_vertex = false;
  bool factor_has_cut_vertex = false;
  bool factor_theta_two = false;

  bool phi_bound_holds = false;    // phi(G□H) <= min(phi(G), phi(H))
  bool theta_bound_holds = false;  // theta(G□H) <= min(theta(G), theta(H))
  /// Equality checks; nullopt when the premise does not apply.
  std::optional<bool> extreme_vertex_gives_two;
  std::optional<bool> cut_vertex_gives_two;
  std::optional<bool> theta_two_lifts;

  ConvexFamily phi_product_witness;
  ConvexFamily theta_product_witness;
  std::vector<LiftedWitness> lifted;

  bool holds() const;
};

/// Requires both factors connected with at least 2 vertices, and the product
/// order within opts.cap.
CartesianBoundsReport product_cover_bounds(const Graph& g, const Graph& h, SolverOptions opts = {});

/// Adjacent-pair hull property, chromatic number, cover and partition numbers
/// of a strong or lexicographic product.
struct ChiEqualityReport {
  ProductKind kind = ProductKind::Strong;
  bool adjacent_pairs_hull = false;
  std::optional<Edge> failing_edge;
  std::size_t chi = 0, phi = 0, theta = 0;
  std::vector<std::size_t> coloring;
  ConvexFamily phi_witness;
  ConvexFamily theta_witness;

  bool holds() const { return adjacent_pairs_hull && chi == phi && phi == theta; }
};

ChiEqualityReport product_chi_equality(const Graph& g, const Graph& h, ProductKind kind,
                                       SolverOptions opts = {});

}  // namespace deltacvx
