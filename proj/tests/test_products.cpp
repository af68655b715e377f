#include "doctest.h"

#include <algorithm>

#include "deltacvx/convexity.hpp"
#include "deltacvx/products.hpp"
#include "deltacvx/structure.hpp"
#include "support/generators.hpp"

using namespace deltacvx;
using namespace deltacvx::testing;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

bool adjacent_by_definition(const Graph& g, const Graph& h, ProductKind kind, Vertex g1, Vertex h1,
                            Vertex g2, Vertex h2) {
  if (g1 == g2 && h1 == h2) return false;
  const bool gg = g1 != g2 && g.adjacent(g1, g2), hh = h1 != h2 && h.adjacent(h1, h2);
  switch (kind) {
    case ProductKind::Cartesian:
      return (g1 == g2 && hh) || (h1 == h2 && gg);
    case ProductKind::Strong:
      return (g1 == g2 && hh) || (h1 == h2 && gg) || (gg && hh);
    case ProductKind::Lexicographic:
      return gg || (g1 == g2 && hh);
  }
  return false;
}

}  // namespace

TEST_CASE("small products") {
  // (0,0)-(0,1)-(1,1)-(1,0) in row-major ids: the 4-cycle 0-1-3-2.
  CHECK(product(complete(2), complete(2), ProductKind::Cartesian).graph() ==
        Graph::from_edges(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}));
  CHECK(product(complete(2), complete(2), ProductKind::Strong).graph() == complete(4));

  auto left = product(path(3), complete(2), ProductKind::Lexicographic).graph();
  auto right = product(complete(2), path(3), ProductKind::Lexicographic).graph();
  CHECK(degrees(left) == std::vector<std::size_t>{3, 3, 3, 3, 5, 5});
  CHECK(degrees(right) == std::vector<std::size_t>{4, 4, 4, 4, 5, 5});
  CHECK_THROWS_AS(product(Graph(0), complete(2), ProductKind::Strong), PreconditionError);
}

TEST_CASE("product edge rules and coordinates") {
  Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(1 + trial % 4, 0.5, rng), h = random_graph(1 + trial % 5, 0.5, rng);
    for (auto kind : {ProductKind::Cartesian, ProductKind::Strong, ProductKind::Lexicographic}) {
      auto p = product(g, h, kind);
      REQUIRE(p.graph().order() == g.order() * h.order());
      for (Vertex u = 0; u < p.graph().order(); ++u) {
        auto [g1, h1] = p.coordinates(u);
        CHECK(p.vertex(g1, h1) == u);
        CHECK(u == g1 * h.order() + h1);
        for (Vertex v = 0; v < p.graph().order(); ++v) {
          auto [g2, h2] = p.coordinates(v);
          CHECK(p.graph().adjacent(u, v) == adjacent_by_definition(g, h, kind, g1, h1, g2, h2));
        }
      }
    }
    // Cartesian and strong commute under the coordinate swap.
    for (auto kind : {ProductKind::Cartesian, ProductKind::Strong}) {
      auto gh = product(g, h, kind), hg = product(h, g, kind);
      for (auto [u, v] : gh.graph().edges()) {
        auto [a, b] = gh.coordinates(u);
        auto [c, d] = gh.coordinates(v);
        CHECK(hg.graph().adjacent(hg.vertex(b, a), hg.vertex(d, c)));
      }
      CHECK(gh.graph().size() == hg.graph().size());
    }
  }
}

TEST_CASE("extreme vertices survive the Cartesian product") {
  Rng rng(16);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_connected_graph(2 + i % 4, 0.6, rng), h = random_connected_graph(2 + i % 3, 0.6, rng);
    if (extreme_vertices(g).empty() || extreme_vertices(h).empty()) continue;
    CHECK_FALSE(extreme_vertices(product(g, h, ProductKind::Cartesian).graph()).empty());
  }
}

TEST_CASE("lifted families stay convex") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected_graph(3 + i % 3, 0.6, rng), h = random_connected_graph(2 + i % 3, 0.6, rng);
    auto gh = product(g, h, ProductKind::Cartesian);
    auto cov = cover_number(g);
    CHECK(validate(gh.graph(), gh.lift_left(cov.witness)).ok());
    auto part = partition_number(h);
    CHECK(validate(gh.graph(), gh.lift_right(part.witness)).ok());
  }
}

TEST_CASE("Cartesian bound report") {
  auto r = product_cover_bounds(path(3), complete(3));
  CHECK(r.holds());
  CHECK(r.factor_has_extreme_vertex);
  CHECK(r.factor_has_cut_vertex);
  CHECK(r.phi_product == 2);
  CHECK(r.theta_product == 2);

  auto k3k3 = product_cover_bounds(complete(3), complete(3));
  CHECK(k3k3.holds());
  CHECK_FALSE(k3k3.factor_has_extreme_vertex);
  CHECK(k3k3.theta_product <= 3);
  CHECK_THROWS_AS(product_cover_bounds(complete(5), complete(4)), CapacityError);
  CHECK_THROWS_AS(product_cover_bounds(Graph(1), complete(2)), PreconditionError);
}

TEST_CASE("strong and lexicographic chromatic equality") {
  auto k4 = product_chi_equality(complete(2), complete(2), ProductKind::Strong);
  CHECK(k4.holds());
  CHECK(k4.chi == 4);
  CHECK(k4.phi == 4);
  CHECK(k4.theta == 4);

  auto lex = product_chi_equality(path(3), complete(2), ProductKind::Lexicographic);
  CHECK(lex.holds());
  CHECK(lex.chi == 4);

  auto strong = product_chi_equality(path(3), path(3), ProductKind::Strong);
  CHECK(strong.holds());
  CHECK(strong.chi == 4);
  CHECK(validate(product(path(3), path(3), ProductKind::Strong).graph(), strong.theta_witness).ok());

  CHECK_THROWS_AS(product_chi_equality(path(3), path(3), ProductKind::Cartesian), PreconditionError);
}
