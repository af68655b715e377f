#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltacvx/graph.hpp"

namespace deltacvx {

enum class FamilyKind { Cover, Partition };

/// Ordered collection of vertex sets claimed to be a convex cover or a convex
/// partition of a graph.
struct ConvexFamily {
  std::vector<VertexSet> sets;
  FamilyKind kind = FamilyKind::Partition;

  std::size_t size() const noexcept { return sets.size(); }
};

struct Violation {
  enum class Kind {
    WrongUniverse,    // set does not live on this graph
    NotConvex,        // `triangle` has exactly two vertices in the set
    EmptySet,         // partition class is empty
    Overlap,          // `vertices` lie in set_index and other_index
    Uncovered,        // `vertices` lie in no set
    NoPrivateVertex,  // every vertex of the set is in some other set
  };

  Kind kind;
  std::size_t set_index = 0;
  std::size_t other_index = 0;
  std::optional<Triangle> triangle;
  std::vector<Vertex> vertices;

  std::string describe() const;
};

struct Verdict {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Reports every violation of convexity and of the kind-specific structure.
Verdict validate(const Graph& g, const ConvexFamily& family);

struct TwoPartition {
  VertexSet first;
  VertexSet second;
};

/// Convex 2-partition by triangle closure, seeded with the lexicographically
/// smallest triangle. Returns nullopt iff no convex 2-partition exists.
/// Requires order >= 2.
std::optional<TwoPartition> convex_two_partition(const Graph& g);

/// Same, seeded with a caller-chosen triangle of g.
std::optional<TwoPartition> convex_two_partition(const Graph& g, const Triangle& seed);

/// Smallest set containing `seed` that no triangle meets in one or two
/// vertices.
VertexSet triangle_closure(const Graph& g, const VertexSet& seed);

struct SolverOptions {
  /// Largest order accepted by the exhaustive routines.
  std::size_t cap = 16;
};

/// Hard ceiling for subset-table routines regardless of SolverOptions::cap.
inline constexpr std::size_t kMaxExhaustiveOrder = 30;

/// Every convex subset of V(g), including the empty set and V(g), in
/// increasing bitmask order.
std::vector<VertexSet> enumerate_convex_sets(const Graph& g, SolverOptions opts = {});

struct FamilySolution {
  std::size_t p = 0;
  ConvexFamily witness;
};

/// Convex cover number: least p >= 2 admitting a convex p-cover. Requires
/// order >= 2.
FamilySolution cover_number(const Graph& g, SolverOptions opts = {});

/// Convex partition number: least p >= 2 admitting a convex p-partition.
/// Requires order >= 2.
FamilySolution partition_number(const Graph& g, SolverOptions opts = {});

/// Iterative deepening on p over combinations of convex sets. Slow; kept as
/// an independent route for cross-checking the table-based solvers.
FamilySolution cover_number_search(const Graph& g, SolverOptions opts = {});
FamilySolution partition_number_search(const Graph& g, SolverOptions opts = {});

/// A convex partition with exactly p classes, if one exists.
std::optional<ConvexFamily> find_convex_partition(const Graph& g, std::size_t p,
                                                  SolverOptions opts = {});

/// A convex cover with exactly p sets, if one exists.
std::optional<ConvexFamily> find_convex_cover(const Graph& g, std::size_t p,
                                              SolverOptions opts = {});

}  // namespace deltacvx
