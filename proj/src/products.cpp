#include "deltacvx/products.hpp"

#include <algorithm>

#include "deltacvx/convexity.hpp"
#include "deltacvx/structure.hpp"

namespace deltacvx {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::Cartesian:
      return "cartesian";
    case ProductKind::Strong:
      return "strong";
    case ProductKind::Lexicographic:
      return "lexicographic";
  }
  return "?";
}

ProductKind parse_product_kind(std::string_view name) {
  if (name == "cartesian" || name == "box") return ProductKind::Cartesian;
  if (name == "strong") return ProductKind::Strong;
  if (name == "lexicographic" || name == "lex") return ProductKind::Lexicographic;
  throw DomainError("unknown product kind '" + std::string(name) + "'");
}

namespace {

bool product_adjacent(const Graph& g, const Graph& h, ProductKind kind, Vertex g1, Vertex h1,
                      Vertex g2, Vertex h2) {
  const bool eg = g1 == g2, eh = h1 == h2;
  const bool ag = !eg && g.adjacent(g1, g2);
  const bool ah = !eh && h.adjacent(h1, h2);
  switch (kind) {
    case ProductKind::Cartesian:
      return (eg && ah) || (eh && ag);
    case ProductKind::Strong:
      return (eg && ah) || (eh && ag) || (ag && ah);
    case ProductKind::Lexicographic:
      return ag || (eg && ah);
  }
  return false;
}

}  // namespace

ProductGraph::ProductGraph(Graph left, Graph right, ProductKind kind)
    : left_(std::move(left)), right_(std::move(right)), kind_(kind) {
  if (left_.order() == 0 || right_.order() == 0)
    throw PreconditionError("graph products require nonempty factors");
  const std::size_t ng = left_.order(), nh = right_.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < ng * nh; ++u) {
    for (Vertex v = u + 1; v < ng * nh; ++v) {
      auto [g1, h1] = coordinates(u);
      auto [g2, h2] = coordinates(v);
      if (product_adjacent(left_, right_, kind_, g1, h1, g2, h2)) edges.emplace_back(u, v);
    }
  }
  graph_ = Graph::from_edges(ng * nh, edges);
}

Vertex ProductGraph::vertex(Vertex g, Vertex h) const {
  left_.check_vertex(g);
  right_.check_vertex(h);
  return static_cast<Vertex>(g * right_.order() + h);
}

std::pair<Vertex, Vertex> ProductGraph::coordinates(Vertex v) const {
  const auto nh = static_cast<Vertex>(right_.order());
  if (v >= left_.order() * nh) throw DomainError("product vertex out of range");
  return {v / nh, v % nh};
}

ConvexFamily ProductGraph::lift_left(const ConvexFamily& family) const {
  ConvexFamily out;
  out.kind = family.kind;
  for (const auto& s : family.sets) {
    left_.check_set(s);
    VertexSet lifted(graph_.order());
    s.for_each([&](Vertex g) {
      for (Vertex h = 0; h < right_.order(); ++h) lifted.insert(vertex(g, h));
    });
    out.sets.push_back(std::move(lifted));
  }
  return out;
}

ConvexFamily ProductGraph::lift_right(const ConvexFamily& family) const {
  ConvexFamily out;
  out.kind = family.kind;
  for (const auto& s : family.sets) {
    right_.check_set(s);
    VertexSet lifted(graph_.order());
    s.for_each([&](Vertex h) {
      for (Vertex g = 0; g < left_.order(); ++g) lifted.insert(vertex(g, h));
    });
    out.sets.push_back(std::move(lifted));
  }
  return out;
}

ProductGraph product(const Graph& g, const Graph& h, ProductKind kind) {
  return ProductGraph(g, h, kind);
}

bool CartesianBoundsReport::holds() const {
  if (!phi_bound_holds || !theta_bound_holds) return false;
  for (const auto& verdict : {extreme_vertex_gives_two, cut_vertex_gives_two, theta_two_lifts})
    if (verdict && !*verdict) return false;
  return std::all_of(lifted.begin(), lifted.end(), [](const LiftedWitness& w) { return w.valid; });
}

namespace {

void require_factor(const Graph& g, const char* name) {
  if (g.order() < 2 || !is_connected(g))
    throw PreconditionError(std::string(name) + " factor must be connected with at least 2 vertices");
}

void check_product_capacity(const Graph& g, const Graph& h, const SolverOptions& opts) {
  if (g.order() * h.order() > opts.cap)
    throw CapacityError("product of order " + std::to_string(g.order() * h.order()) +
                        " exceeds solver cap " + std::to_string(opts.cap));
}

// {x} plus the rest, for a vertex x in no triangle.
std::optional<ConvexFamily> extreme_split(const Graph& g) {
  VertexSet ext = extreme_vertices(g);
  if (ext.empty()) return std::nullopt;
  VertexSet single(g.order(), {ext.first()});
  return ConvexFamily{{single, single.complement()}, FamilyKind::Partition};
}

// C1 + v and V - C1 for a cut vertex v and a component C1 of G - v.
std::optional<ConvexFamily> cut_vertex_split(const Graph& g) {
  const VertexSet cuts = block_decomposition(g).cut_vertices;
  if (cuts.empty()) return std::nullopt;
  const Vertex v = cuts.first();
  VertexSet without = g.vertices();
  without.erase(v);
  VertexSet c1 = component_within(g, without, without.first());
  VertexSet first = c1;
  first.insert(v);
  return ConvexFamily{{first, g.vertices() - c1}, FamilyKind::Cover};
}

}  // namespace

CartesianBoundsReport product_cover_bounds(const Graph& g, const Graph& h, SolverOptions opts) {
  require_factor(g, "left");
  require_factor(h, "right");
  check_product_capacity(g, h, opts);
  const ProductGraph gh(g, h, ProductKind::Cartesian);
  const Graph& p = gh.graph();

  CartesianBoundsReport r;
  const auto phi_g = cover_number(g, opts), phi_h = cover_number(h, opts);
  const auto theta_g = partition_number(g, opts), theta_h = partition_number(h, opts);
  auto phi_p = cover_number(p, opts);
  auto theta_p = partition_number(p, opts);
  r.phi_left = phi_g.p;
  r.phi_right = phi_h.p;
  r.theta_left = theta_g.p;
  r.theta_right = theta_h.p;
  r.phi_product = phi_p.p;
  r.theta_product = theta_p.p;
  r.phi_product_witness = std::move(phi_p.witness);
  r.theta_product_witness = std::move(theta_p.witness);

  r.phi_bound_holds = r.phi_product <= std::min(r.phi_left, r.phi_right);
  r.theta_bound_holds = r.theta_product <= std::min(r.theta_left, r.theta_right);

  auto add = [&](std::string source, ConvexFamily fam, std::size_t expected_size) {
    const bool ok = fam.size() == expected_size && validate(p, fam).ok();
    r.lifted.push_back({std::move(source), std::move(fam), ok});
  };
  auto lift = [&](bool left, const ConvexFamily& fam) {
    return left ? gh.lift_left(fam) : gh.lift_right(fam);
  };

  const bool phi_from_left = r.phi_left <= r.phi_right;
  add(std::string("cover of ") + (phi_from_left ? "left" : "right") + " factor",
      lift(phi_from_left, phi_from_left ? phi_g.witness : phi_h.witness),
      std::min(r.phi_left, r.phi_right));
  const bool theta_from_left = r.theta_left <= r.theta_right;
  add(std::string("partition of ") + (theta_from_left ? "left" : "right") + " factor",
      lift(theta_from_left, theta_from_left ? theta_g.witness : theta_h.witness),
      std::min(r.theta_left, r.theta_right));

  for (bool left : {true, false}) {
    const Graph& f = left ? g : h;
    const std::string side = left ? "left" : "right";
    if (auto split = extreme_split(f)) {
      r.factor_has_extreme_vertex = true;
      add("extreme vertex of " + side + " factor", lift(left, *split), 2);
    }
    if (auto split = cut_vertex_split(f)) {
      r.factor_has_cut_vertex = true;
      add("cut vertex of " + side + " factor", lift(left, *split), 2);
    }
    const auto& theta = left ? theta_g : theta_h;
    if (theta.p == 2) {
      r.factor_theta_two = true;
      add("2-partition of " + side + " factor", lift(left, theta.witness), 2);
    }
  }

  if (r.factor_has_extreme_vertex)
    r.extreme_vertex_gives_two = r.phi_product == 2 && r.theta_product == 2;
  if (r.factor_has_cut_vertex) r.cut_vertex_gives_two = r.phi_product == 2;
  if (r.factor_theta_two) r.theta_two_lifts = r.theta_product == 2;
  return r;
}

ChiEqualityReport product_chi_equality(const Graph& g, const Graph& h, ProductKind kind,
                                       SolverOptions opts) {
  if (kind == ProductKind::Cartesian)
    throw PreconditionError("chromatic equality applies to strong and lexicographic products");
  require_factor(g, "left");
  require_factor(h, "right");
  check_product_capacity(g, h, opts);
  const ProductGraph gh(g, h, kind);
  const Graph& p = gh.graph();

  ChiEqualityReport r;
  r.kind = kind;
  r.failing_edge = non_hull_edge(p);
  r.adjacent_pairs_hull = !r.failing_edge.has_value();
  r.coloring = optimal_coloring(p, {opts.cap});
  r.chi = r.coloring.empty() ? 0 : *std::max_element(r.coloring.begin(), r.coloring.end()) + 1;
  auto phi = cover_number(p, opts);
  auto theta = partition_number(p, opts);
  r.phi = phi.p;
  r.theta = theta.p;
  r.phi_witness = std::move(phi.witness);
  r.theta_witness = std::move(theta.witness);
  return r;
}

}  // namespace deltacvx
