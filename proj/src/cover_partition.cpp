#include "deltacvx/cover_partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "deltacvx/convexity.hpp"
#include "masks.hpp"

namespace deltacvx {

using detail::Mask;

std::string Violation::describe() const {
  auto list = [](const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s;
  };
  const std::string set = "set " + std::to_string(set_index);
  switch (kind) {
    case Kind::WrongUniverse:
      return set + " does not match the graph's vertex count";
    case Kind::NotConvex:
      return set + " is not convex: triangle (" + std::to_string(triangle->a) + "," +
             std::to_string(triangle->b) + "," + std::to_string(triangle->c) +
             ") has exactly two vertices in it";
    case Kind::EmptySet:
      return set + " is empty";
    case Kind::Overlap:
      return set + " and set " + std::to_string(other_index) + " share vertices {" +
             list(vertices) + "}";
    case Kind::Uncovered:
      return "vertices {" + list(vertices) + "} are in no set";
    case Kind::NoPrivateVertex:
      return set + " has no private vertex (contained in the union of the others)";
  }
  return set;
}

Verdict validate(const Graph& g, const ConvexFamily& family) {
  Verdict verdict;
  auto report = [&](Violation v) { verdict.violations.push_back(std::move(v)); };
  const std::size_t n = g.order();

  std::vector<bool> usable(family.sets.size(), true);
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    const VertexSet& s = family.sets[i];
    if (s.universe() != n) {
      usable[i] = false;
      report({Violation::Kind::WrongUniverse, i, 0, std::nullopt, {}});
      continue;
    }
    if (auto t = convexity_witness(g, s)) report({Violation::Kind::NotConvex, i, 0, t, {}});
  }

  VertexSet covered(n);
  for (std::size_t i = 0; i < family.sets.size(); ++i)
    if (usable[i]) covered |= family.sets[i];
  if (covered.size() != n)
    report({Violation::Kind::Uncovered, 0, 0, std::nullopt, covered.complement().to_vector()});

  if (family.kind == FamilyKind::Partition) {
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
      if (!usable[i]) continue;
      if (family.sets[i].empty()) report({Violation::Kind::EmptySet, i, 0, std::nullopt, {}});
      for (std::size_t j = i + 1; j < family.sets.size(); ++j) {
        if (!usable[j]) continue;
        VertexSet common = family.sets[i] & family.sets[j];
        if (!common.empty())
          report({Violation::Kind::Overlap, i, j, std::nullopt, common.to_vector()});
      }
    }
  } else {
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
      if (!usable[i]) continue;
      VertexSet others(n);
      for (std::size_t j = 0; j < family.sets.size(); ++j)
        if (j != i && usable[j]) others |= family.sets[j];
      if (family.sets[i].is_subset_of(others))
        report({Violation::Kind::NoPrivateVertex, i, 0, std::nullopt, {}});
    }
  }
  return verdict;
}

VertexSet triangle_closure(const Graph& g, const VertexSet& seed) {
  g.check_set(seed);
  VertexSet closed = seed;
  std::vector<Vertex> work = seed.to_vector();
  // Once v is in the set every triangle through v is absorbed whole. Its
  // other vertices are the neighbors w of v with N(v) and N(w) intersecting.
  while (!work.empty()) {
    const Vertex v = work.back();
    work.pop_back();
    const VertexSet& nv = g.neighbors(v);
    for (Vertex w : g.neighbor_list(v)) {
      if (!closed.contains(w) && nv.intersects(g.neighbors(w))) {
        closed.insert(w);
        work.push_back(w);
      }
    }
  }
  return closed;
}

namespace {

// Same as g.triangles().front(), without listing every triangle.
std::optional<Triangle> lexmin_triangle(const Graph& g) {
  constexpr std::size_t kBits = 64;
  for (Vertex a = 0; a < g.order(); ++a) {
    const auto& na = g.neighbors(a).words();
    for (Vertex b : g.neighbor_list(a)) {
      if (b < a) continue;
      const auto& nb = g.neighbors(b).words();
      const std::size_t from = (b + 1) / kBits;
      for (std::size_t i = from; i < na.size(); ++i) {
        std::uint64_t w = na[i] & nb[i];
        if (i == from) w &= ~std::uint64_t{0} << ((b + 1) % kBits);
        if (w) return Triangle(a, b, static_cast<Vertex>(i * kBits + std::countr_zero(w)));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TwoPartition> convex_two_partition(const Graph& g, const Triangle& seed) {
  if (g.order() < 2) throw PreconditionError("convex 2-partition requires at least 2 vertices");
  for (auto [u, v] : {Edge{seed.a, seed.b}, Edge{seed.a, seed.c}, Edge{seed.b, seed.c}})
    if (!g.adjacent(u, v)) throw DomainError("seed is not a triangle of the graph");
  VertexSet first = triangle_closure(g, VertexSet(g.order(), {seed.a, seed.b, seed.c}));
  if (first.size() == g.order()) return std::nullopt;
  VertexSet second = first.complement();
  return TwoPartition{std::move(first), std::move(second)};
}

std::optional<TwoPartition> convex_two_partition(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("convex 2-partition requires at least 2 vertices");
  const auto seed = lexmin_triangle(g);
  if (!seed) {
    VertexSet first(g.order(), {0});
    VertexSet second = first.complement();
    return TwoPartition{std::move(first), std::move(second)};
  }
  return convex_two_partition(g, *seed);
}

namespace {

void check_capacity(const Graph& g, const SolverOptions& opts, const char* what) {
  const std::size_t n = g.order();
  if (n > opts.cap || n > kMaxExhaustiveOrder)
    throw CapacityError(std::string(what) + " over " + std::to_string(n) +
                        " vertices exceeds cap " +
                        std::to_string(std::min(opts.cap, kMaxExhaustiveOrder)));
}

void require_order_two(const Graph& g) {
  if (g.order() < 2)
    throw PreconditionError("cover and partition numbers require at least 2 vertices");
}

std::vector<bool> convex_table(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> convex(std::size_t{1} << n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) convex[m] = detail::mask_is_convex(adj, m);
  return convex;
}

// Nonempty convex sets other than V, in increasing mask order.
std::vector<Mask> proper_convex_masks(const std::vector<Mask>& adj) {
  const Mask all = detail::full_mask(adj.size());
  std::vector<Mask> out;
  for (Mask m = 1; m < all; ++m)
    if (detail::mask_is_convex(adj, m)) out.push_back(m);
  return out;
}

ConvexFamily to_family(std::size_t n, const std::vector<Mask>& masks, FamilyKind kind) {
  ConvexFamily fam;
  fam.kind = kind;
  for (Mask m : masks) fam.sets.push_back(VertexSet::from_mask(n, m));
  return fam;
}

std::optional<FamilySolution> two_partition_fast_path(const Graph& g, FamilyKind kind) {
  auto two = convex_two_partition(g);
  if (!two) return std::nullopt;
  return FamilySolution{2, ConvexFamily{{two->first, two->second}, kind}};
}

// Exact-p irredundant cover search. Branches on the lowest uncovered vertex;
// any irredundant cover is reached because a proper subfamily covering V would
// leave the remaining sets without private vertices.
class CoverSearch {
 public:
  CoverSearch(std::size_t n, std::vector<Mask> sets, std::size_t p)
      : all_(detail::full_mask(n)), p_(p), containing_(n) {
    for (Mask s : sets)
      for (Mask rest = s; rest; rest &= rest - 1) containing_[std::countr_zero(rest)].push_back(s);
  }

  std::optional<std::vector<Mask>> run() {
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool every_set_has_private() const {
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      Mask others = 0;
      for (std::size_t j = 0; j < chosen_.size(); ++j)
        if (j != i) others |= chosen_[j];
      if ((chosen_[i] & ~others) == 0) return false;
    }
    return true;
  }

  bool dfs(Mask covered) {
    if (covered == all_) return chosen_.size() == p_;
    if (chosen_.size() == p_) return false;
    const auto u = static_cast<std::size_t>(std::countr_zero(all_ & ~covered));
    for (Mask s : containing_[u]) {
      chosen_.push_back(s);
      if (every_set_has_private() && dfs(covered | s)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  Mask all_;
  std::size_t p_;
  std::vector<std::vector<Mask>> containing_;
  std::vector<Mask> chosen_;
};

// Exact-p partition search; each class is the one containing the lowest
// unassigned vertex, so classes are generated in a canonical order.
class PartitionSearch {
 public:
  PartitionSearch(std::size_t n, const std::vector<Mask>& sets, std::size_t p)
      : all_(detail::full_mask(n)), p_(p), by_lowest_(n) {
    for (Mask s : sets) by_lowest_[std::countr_zero(s)].push_back(s);
  }

  std::optional<std::vector<Mask>> run() {
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(Mask used) {
    const Mask remaining = all_ & ~used;
    if (remaining == 0) return chosen_.size() == p_;
    const std::size_t left = p_ - chosen_.size();
    if (left == 0 || static_cast<std::size_t>(std::popcount(remaining)) < left) return false;
    const auto u = static_cast<std::size_t>(std::countr_zero(remaining));
    for (Mask s : by_lowest_[u]) {
      if (s & used) continue;
      chosen_.push_back(s);
      if (dfs(used | s)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  Mask all_;
  std::size_t p_;
  std::vector<std::vector<Mask>> by_lowest_;
  std::vector<Mask> chosen_;
};

}  // namespace

std::vector<VertexSet> enumerate_convex_sets(const Graph& g, SolverOptions opts) {
  check_capacity(g, opts, "convex set enumeration");
  const auto adj = detail::adjacency_masks(g);
  const std::size_t n = g.order();
  std::vector<VertexSet> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (detail::mask_is_convex(adj, m)) out.push_back(VertexSet::from_mask(n, m));
  return out;
}

FamilySolution cover_number(const Graph& g, SolverOptions opts) {
  require_order_two(g);
  if (auto fast = two_partition_fast_path(g, FamilyKind::Cover)) return *fast;
  check_capacity(g, opts, "cover number");

  // A minimum cover by proper convex sets is automatically irredundant, and
  // each of its sets can be enlarged to a maximal proper convex set. So the
  // cover number is the minimum set cover of V by maximal proper convex sets.
  const auto adj = detail::adjacency_masks(g);
  const std::size_t n = g.order();
  const Mask all = detail::full_mask(n);
  const std::size_t size = std::size_t{1} << n;
  const auto convex = convex_table(adj);

  // below[m]: some proper convex set contains m.
  std::vector<bool> below(size, false);
  std::vector<Mask> maximal;
  for (Mask m = all; m-- > 0;) {
    bool strictly = false;
    for (Vertex v = 0; v < n && !strictly; ++v)
      if (!(m & detail::bit(v)) && (m | detail::bit(v)) != all) strictly = below[m | detail::bit(v)];
    const bool proper = m != 0 && convex[m];
    below[m] = proper || strictly;
    if (proper && !strictly) maximal.push_back(m);
  }

  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(size, kUnseen);
  std::vector<std::uint32_t> via(size, 0);
  std::vector<Mask> frontier{0};
  parent[0] = 0;
  while (parent[all] == kUnseen) {
    std::vector<Mask> next;
    for (Mask m : frontier) {
      for (std::size_t i = 0; i < maximal.size(); ++i) {
        const Mask reached = m | maximal[i];
        if (parent[reached] != kUnseen) continue;
        parent[reached] = static_cast<std::uint32_t>(m);
        via[reached] = static_cast<std::uint32_t>(i);
        next.push_back(reached);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> chosen;
  for (Mask m = all; m != 0; m = parent[m]) chosen.push_back(maximal[via[m]]);
  std::reverse(chosen.begin(), chosen.end());
  return {chosen.size(), to_family(n, chosen, FamilyKind::Cover)};
}

FamilySolution partition_number(const Graph& g, SolverOptions opts) {
  require_order_two(g);
  if (auto fast = two_partition_fast_path(g, FamilyKind::Partition)) return *fast;
  check_capacity(g, opts, "partition number");

  const auto adj = detail::adjacency_masks(g);
  const std::size_t n = g.order();
  const Mask all = detail::full_mask(n);
  const std::size_t size = std::size_t{1} << n;
  const auto convex = convex_table(adj);

  // best[m]: fewest proper convex classes partitioning m; the class holding
  // the lowest vertex of m is enumerated explicitly.
  constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> best(size, kInf);
  std::vector<std::uint32_t> choice(size, 0);
  best[0] = 0;
  for (Mask m = 1; m < size; ++m) {
    const Mask low = m & (~m + 1);
    const Mask rest = m ^ low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask part = sub | low;
      if (part != all && convex[part] && best[m ^ part] != kInf &&
          best[m ^ part] + 1 < best[m]) {
        best[m] = static_cast<std::uint8_t>(best[m ^ part] + 1);
        choice[m] = static_cast<std::uint32_t>(part);
      }
      if (sub == 0) break;
    }
  }
  std::vector<Mask> classes;
  for (Mask m = all; m != 0; m ^= choice[m]) classes.push_back(choice[m]);
  return {classes.size(), to_family(n, classes, FamilyKind::Partition)};
}

std::optional<ConvexFamily> find_convex_cover(const Graph& g, std::size_t p, SolverOptions opts) {
  check_capacity(g, opts, "convex cover search");
  const std::size_t n = g.order();
  if (p == 0) return std::nullopt;
  if (p == 1) return ConvexFamily{{g.vertices()}, FamilyKind::Cover};
  if (p > n) return std::nullopt;
  const auto adj = detail::adjacency_masks(g);
  auto found = CoverSearch(n, proper_convex_masks(adj), p).run();
  if (!found) return std::nullopt;
  return to_family(n, *found, FamilyKind::Cover);
}

std::optional<ConvexFamily> find_convex_partition(const Graph& g, std::size_t p,
                                                  SolverOptions opts) {
  check_capacity(g, opts, "convex partition search");
  const std::size_t n = g.order();
  if (p == 0) return std::nullopt;
  if (p == 1) return ConvexFamily{{g.vertices()}, FamilyKind::Partition};
  if (p > n) return std::nullopt;
  const auto adj = detail::adjacency_masks(g);
  auto found = PartitionSearch(n, proper_convex_masks(adj), p).run();
  if (!found) return std::nullopt;
  return to_family(n, *found, FamilyKind::Partition);
}

FamilySolution cover_number_search(const Graph& g, SolverOptions opts) {
  require_order_two(g);
  for (std::size_t p = 2; p <= g.order(); ++p)
    if (auto fam = find_convex_cover(g, p, opts)) return {p, std::move(*fam)};
  throw PreconditionError("no convex cover found");  // singletons always form one
}

FamilySolution partition_number_search(const Graph& g, SolverOptions opts) {
  require_order_two(g);
  for (std::size_t p = 2; p <= g.order(); ++p)
    if (auto fam = find_convex_partition(g, p, opts)) return {p, std::move(*fam)};
  throw PreconditionError("no convex partition found");
}

}  // namespace deltacvx
