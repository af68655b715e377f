#include "doctest.h"

#include "deltacvx/convexity.hpp"
#include "deltacvx/cover_partition.hpp"
#include "deltacvx/reduction.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace deltacvx;
using namespace deltacvx::testing;

TEST_CASE("interval operator is extensive and monotone; hull is a fixpoint") {
  Rng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 9;
    Graph g = random_graph(n, 0.5, rng);
    const auto all = (std::uint64_t{1} << n) - 1;
    const std::uint64_t s = rng() & all, t = s | (rng() & all);
    VertexSet vs = VertexSet::from_mask(n, s), vt = VertexSet::from_mask(n, t);
    CHECK(vs.is_subset_of(delta_interval(g, vs)));
    CHECK(delta_interval(g, vs).is_subset_of(delta_interval(g, vt)));
    CHECK(delta_interval(g, vs).to_mask() == oracle::interval(oracle::matrix(g), s));
    auto h = convex_hull(g, vs).hull;
    CHECK(delta_interval(g, h) == h);
    CHECK(is_convex(g, vs) == is_convex_by_neighborhoods(g, vs));
  }
}

TEST_CASE("intersections of convex sets are convex") {
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(7, 0.6, rng);
    auto convex = enumerate_convex_sets(g);
    std::uniform_int_distribution<std::size_t> pick(0, convex.size() - 1);
    for (int k = 0; k < 10; ++k) CHECK(is_convex(g, convex[pick(rng)] & convex[pick(rng)]));
  }
}

TEST_CASE("an extreme vertex gives cover and partition number 2") {
  Rng rng(103);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_graph(2 + trial % 7, 0.5, rng);
    VertexSet ext = extreme_vertices(g);
    if (ext.empty()) continue;
    VertexSet single(g.order(), {ext.first()});
    CHECK(validate(g, {{single, single.complement()}, FamilyKind::Partition}).ok());
    CHECK(cover_number(g).p == 2);
    CHECK(partition_number(g).p == 2);
    ext.for_each([&](Vertex v) { CHECK(is_extreme_vertex_by_complement(g, v)); });
  }
}

TEST_CASE("cover number two forces hull number at least three") {
  Rng rng(104);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = random_connected_graph(3 + trial % 5, 0.55, rng);
    if (cover_number(g).p == 2) CHECK(hull_number(g) >= 3);
  }
}

TEST_CASE("reduction equivalence on random connected graphs") {
  Rng rng(105);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected_graph(3 + trial % 4, 0.6, rng);
    auto red = reduce_coloring(g, 3);
    const bool colorable = is_k_colorable(g, 3);
    CHECK(colorable == find_convex_partition(red.reduced, 4).has_value());
    CHECK(colorable == find_convex_cover(red.reduced, 4).has_value());
    CHECK(colorable == (partition_number(red.reduced).p <= 4));
    CHECK(colorable == (cover_number(red.reduced).p <= 4));
  }
}
