#pragma once

#include <cstddef>
#include <optional>

#include "deltacvx/cover_partition.hpp"

namespace deltacvx {

/// Partition number of a connected block graph: the order of a smallest block.
/// The witness takes the first smallest block B = {v_1..v_p} and lets V_i be
/// the component of G - (B - v_i) that contains v_i.
FamilySolution theta_block_graph(const Graph& g);

/// Cover number of a connected block graph: n if complete, 2 otherwise.
std::size_t phi_block_graph(const Graph& g);

/// Cover and partition number of a 2-connected chordal graph (or K2), both
/// equal to its chromatic number. With a cut vertex the three can differ:
/// the paw has phi = theta = 2 < chi, the bowtie has phi = 2 < theta = chi.
std::size_t cover_partition_chordal(const Graph& g);

/// An edge {u, v} whose hull is not V(g), or nullopt when every adjacent pair
/// is a hull set.
std::optional<Edge> non_hull_edge(const Graph& g);

/// Every adjacent pair is a hull set. When true, the proper convex sets are
/// exactly the independent sets. Requires g connected with order >= 2.
bool adjacent_pairs_are_hull_sets(const Graph& g);

}  // namespace deltacvx
