#pragma once

// Word-sized kernels used by the exhaustive solvers (order <= 64).

#include <bit>
#include <cstdint>
#include <vector>

#include "deltacvx/graph.hpp"

namespace deltacvx::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.order() > 64) throw CapacityError("word-sized kernels support at most 64 vertices");
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).to_mask();
  return adj;
}

/// True iff some pair in `a` is adjacent.
inline bool has_edge_inside(const std::vector<Mask>& adj, Mask a) {
  for (Mask rest = a; rest; rest &= rest - 1)
    if (adj[std::countr_zero(rest)] & a) return true;
  return false;
}

inline bool mask_is_convex(const std::vector<Mask>& adj, Mask s) {
  const Mask outside = full_mask(adj.size()) & ~s;
  for (Mask rest = outside; rest; rest &= rest - 1)
    if (has_edge_inside(adj, adj[std::countr_zero(rest)] & s)) return false;
  return true;
}

inline Mask mask_hull(const std::vector<Mask>& adj, Mask s) {
  const Mask all = full_mask(adj.size());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Mask rest = all & ~s; rest; rest &= rest - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(rest));
      if (has_edge_inside(adj, adj[w] & s)) {
        s |= bit(w);
        grew = true;
      }
    }
  }
  return s;
}

}  // namespace deltacvx::detail
