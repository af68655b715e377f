#include "deltacvx/reduction.hpp"

#include <algorithm>
#include <deque>

namespace deltacvx {

ReductionOutput reduce_coloring(const Graph& g, std::size_t k) {
  if (g.order() < 2 || !is_connected(g))
    throw PreconditionError("reduction requires a connected graph with at least 2 vertices");
  if (k < 3) throw PreconditionError("reduction requires k >= 3");
  auto [reduced, u] = add_universal_vertex(g);
  ReductionOutput out{std::move(reduced), u, k, {}};
  out.vertex_map.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.vertex_map[v] = v;
  return out;
}

ConvexFamily lift_coloring(const ReductionOutput& red, const std::vector<std::size_t>& colors) {
  const std::size_t n = red.vertex_map.size();
  if (colors.size() != n) throw PreconditionError("coloring size does not match the graph");
  std::vector<std::vector<Vertex>> classes(red.k);
  for (Vertex v = 0; v < n; ++v) {
    if (colors[v] >= red.k)
      throw PreconditionError("color " + std::to_string(colors[v]) + " outside 0.." +
                              std::to_string(red.k - 1));
    classes[colors[v]].push_back(red.vertex_map[v]);
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : red.reduced.neighbor_list(red.vertex_map[v]))
      if (w != red.universal_vertex && w > red.vertex_map[v] && colors[v] == colors[w])
        throw PreconditionError("coloring is not proper at edge (" + std::to_string(v) + "," +
                                std::to_string(w) + ")");

  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  // Pad to k nonempty classes by splitting off singletons.
  while (classes.size() < red.k) {
    auto big = std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.size() >= 2; });
    if (big == classes.end())
      throw PreconditionError("graph has fewer than k=" + std::to_string(red.k) +
                              " vertices; cannot form k nonempty color classes");
    Vertex moved = big->back();
    big->pop_back();
    classes.push_back({moved});
  }

  ConvexFamily fam;
  fam.kind = FamilyKind::Partition;
  const std::size_t order = red.reduced.order();
  for (const auto& c : classes) fam.sets.push_back(VertexSet::from_range(order, c));
  fam.sets.push_back(VertexSet(order, {red.universal_vertex}));
  return fam;
}

namespace {

// Shortest walk in g - u from `from` to a vertex outside `cls`.
std::vector<Vertex> walk_out_of(const Graph& reduced, Vertex u, const VertexSet& cls, Vertex from) {
  std::vector<Vertex> prev(reduced.order(), u);
  std::vector<bool> seen(reduced.order(), false);
  std::deque<Vertex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (!cls.contains(v)) {
      std::vector<Vertex> walk{v};
      while (walk.back() != from) walk.push_back(prev[walk.back()]);
      std::reverse(walk.begin(), walk.end());
      return walk;
    }
    for (Vertex w : reduced.neighbor_list(v)) {
      if (w == u || seen[w]) continue;
      seen[w] = true;
      prev[w] = v;
      queue.push_back(w);
    }
  }
  return {from};
}

}  // namespace

std::vector<std::size_t> extract_coloring(const Graph& g, const ReductionOutput& red,
                                          const ConvexFamily& family) {
  const Graph& reduced = red.reduced;
  const Vertex u = red.universal_vertex;
  if (reduced.order() != g.order() + 1 || red.vertex_map.size() != g.order())
    throw PreconditionError("reduction output does not belong to this graph");
  if (family.size() != red.k + 1)
    throw PreconditionError("expected a family of " + std::to_string(red.k + 1) + " sets, got " +
                            std::to_string(family.size()));
  for (const auto& s : family.sets)
    if (s.universe() != reduced.order())
      throw PreconditionError("family set does not live on the reduced graph");

  for (std::size_t j = 0; j < family.size(); ++j) {
    const VertexSet& cls = family.sets[j];
    for (auto [a, b] : reduced.edges()) {
      if (!cls.contains(a) || !cls.contains(b)) continue;
      const Vertex start = b == u ? a : b;
      auto walk = walk_out_of(reduced, u, cls, start);
      std::string msg = "class " + std::to_string(j) + " contains edge (" + std::to_string(a) +
                        "," + std::to_string(b) + ")";
      if (walk.size() == 1 && cls.contains(walk.front()))
        msg += " and every vertex of the graph, so it is not a proper convex set";
      else
        msg += "; with the universal vertex, the walk from " + std::to_string(walk.front()) +
               " to " + std::to_string(walk.back()) + " forces a vertex outside the class into it";
      throw IndependenceViolation(msg, j, Edge{a, b}, std::move(walk));
    }
  }

  const Verdict verdict = validate(reduced, ConvexFamily{family.sets, FamilyKind::Cover});
  if (!verdict.ok())
    throw PreconditionError("not a convex cover of the reduced graph: " +
                            verdict.violations.front().describe());

  // Independent classes: the one holding u is exactly {u}.
  std::vector<std::size_t> first_class(reduced.order(), family.size());
  for (std::size_t j = family.size(); j-- > 0;)
    family.sets[j].for_each([&](Vertex v) { first_class[v] = j; });
  const std::size_t u_class = first_class[u];

  std::vector<std::size_t> colors(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t j = first_class[red.vertex_map[v]];
    colors[v] = j < u_class ? j : j - 1;
  }
  return colors;
}

}  // namespace deltacvx
