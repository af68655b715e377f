#include "deltacvx/convexity.hpp"

#include <cassert>
#include <vector>

#include "masks.hpp"

namespace deltacvx {

VertexSet delta_interval(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  VertexSet out = s;
  for (const Triangle& t : g.triangles()) {
    const int inside = s.contains(t.a) + s.contains(t.b) + s.contains(t.c);
    if (inside != 2) continue;
    for (Vertex v : t.vertices()) out.insert(v);
  }
  return out;
}

std::optional<Triangle> convexity_witness(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  for (const Triangle& t : g.triangles())
    if (s.contains(t.a) + s.contains(t.b) + s.contains(t.c) == 2) return t;
  return std::nullopt;
}

bool is_convex_by_neighborhoods(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  const VertexSet outside = s.complement();
  bool ok = true;
  outside.for_each([&](Vertex w) {
    if (ok && !is_independent(g, g.neighbors(w) & s)) ok = false;
  });
  return ok;
}

bool is_convex(const Graph& g, const VertexSet& s) {
  const bool fixpoint = delta_interval(g, s) == s;
  assert(fixpoint == is_convex_by_neighborhoods(g, s));
  return fixpoint;
}

HullResult convex_hull(const Graph& g, const VertexSet& s) {
  HullResult out{s, 0};
  for (;;) {
    VertexSet next = delta_interval(g, out.hull);
    if (next == out.hull) return out;
    out.hull = std::move(next);
    ++out.rounds;
  }
}

bool is_hull_set(const Graph& g, const VertexSet& s) {
  return convex_hull(g, s).hull.size() == g.order();
}

VertexSet minimum_hull_set(const Graph& g, HullNumberOptions opts) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("hull number requires at least one vertex");
  if (n > opts.cap || n > 64)
    throw CapacityError("hull number search over " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(opts.cap));
  const auto adj = detail::adjacency_masks(g);
  const detail::Mask all = detail::full_mask(n);

  // Extreme vertices are never generated by the closure, so every hull set
  // contains all of them.
  const detail::Mask forced = extreme_vertices(g).to_mask();
  std::vector<Vertex> free;
  for (Vertex v = 0; v < n; ++v)
    if (!(forced & detail::bit(v))) free.push_back(v);

  const std::size_t m = free.size();
  for (std::size_t k = 0; k <= m; ++k) {
    // Gosper's hack over k-subsets of the free vertices.
    std::uint64_t comb = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m);
    while (k == 0 || comb < limit) {
      detail::Mask s = forced;
      for (std::uint64_t c = comb; c; c &= c - 1) s |= detail::bit(free[std::countr_zero(c)]);
      if (detail::mask_hull(adj, s) == all) return VertexSet::from_mask(n, s);
      if (k == 0) break;
      const std::uint64_t low = comb & (~comb + 1);
      const std::uint64_t ripple = comb + low;
      comb = (((ripple ^ comb) >> 2) / low) | ripple;
    }
  }
  return g.vertices();  // unreachable: V(g) is a hull set
}

std::size_t hull_number(const Graph& g, HullNumberOptions opts) {
  return minimum_hull_set(g, opts).size();
}

bool is_extreme_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  const bool in_no_triangle = g.triangles_at(v).empty();
  assert(in_no_triangle == is_extreme_vertex_by_complement(g, v));
  return in_no_triangle;
}

bool is_extreme_vertex_by_complement(const Graph& g, Vertex v) {
  g.check_vertex(v);
  VertexSet rest = g.vertices();
  rest.erase(v);
  return is_convex_by_neighborhoods(g, rest);
}

VertexSet extreme_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.triangles_at(v).empty()) out.insert(v);
  return out;
}

}  // namespace deltacvx
