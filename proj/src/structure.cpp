#include "deltacvx/structure.hpp"

#include "deltacvx/convexity.hpp"

namespace deltacvx {

namespace {

void require_connected_block_graph(const Graph& g) {
  if (g.order() < 2 || !is_connected(g) || !is_block_graph(g))
    throw PreconditionError("expected a connected block graph with at least 2 vertices");
}

}  // namespace

FamilySolution theta_block_graph(const Graph& g) {
  require_connected_block_graph(g);
  const auto blocks = block_decomposition(g).blocks;
  const VertexSet* smallest = &blocks.front();
  for (const auto& b : blocks)
    if (b.size() < smallest->size()) smallest = &b;

  ConvexFamily witness;
  witness.kind = FamilyKind::Partition;
  smallest->for_each([&](Vertex v) {
    VertexSet allowed = g.vertices() - *smallest;
    allowed.insert(v);
    witness.sets.push_back(component_within(g, allowed, v));
  });
  return {smallest->size(), std::move(witness)};
}

std::size_t phi_block_graph(const Graph& g) {
  require_connected_block_graph(g);
  return is_complete(g) ? g.order() : 2;
}

std::size_t cover_partition_chordal(const Graph& g) {
  if (g.order() < 2 || !is_connected(g))
    throw PreconditionError("expected a connected graph with at least 2 vertices");
  if (!is_chordal(g).chordal) throw PreconditionError("expected a chordal graph");
  if (!block_decomposition(g).cut_vertices.empty())
    throw PreconditionError("expected a 2-connected chordal graph");
  return chromatic_number(g);
}

std::optional<Edge> non_hull_edge(const Graph& g) {
  for (const Edge& e : g.edges())
    if (!is_hull_set(g, VertexSet(g.order(), {e.first, e.second}))) return e;
  return std::nullopt;
}

bool adjacent_pairs_are_hull_sets(const Graph& g) {
  if (g.order() < 2 || !is_connected(g))
    throw PreconditionError("expected a connected graph with at least 2 vertices");
  return !non_hull_edge(g).has_value();
}

}  // namespace deltacvx
