#include "deltacvx/graph.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace deltacvx {

Triangle::Triangle(Vertex x, Vertex y, Vertex z) {
  std::array<Vertex, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) throw DomainError("triangle vertices must be distinct");
  a = v[0];
  b = v[1];
  c = v[2];
}

struct Graph::TriangleCache {
  std::once_flag once;
  std::vector<Triangle> triangles;
  std::vector<std::vector<std::size_t>> incidence;
};

Graph::Graph() : cache_(std::make_shared<TriangleCache>()) {}

Graph::Graph(std::size_t n)
    : adjacency_(n, VertexSet(n)), lists_(n), cache_(std::make_shared<TriangleCache>()) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for n=" + std::to_string(n));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (g.adjacency_[u].contains(v)) continue;
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
    ++g.edge_count_;
  }
  for (std::size_t v = 0; v < n; ++v) g.lists_[v] = g.adjacency_[v].to_vector();
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order())
    throw DomainError("vertex " + std::to_string(v) + " out of range (n=" +
                      std::to_string(order()) + ")");
}

void Graph::check_set(const VertexSet& s) const {
  if (s.universe() != order())
    throw DomainError("vertex set universe " + std::to_string(s.universe()) +
                      " does not match graph order " + std::to_string(order()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::span<const Vertex> Graph::neighbor_list(Vertex v) const {
  check_vertex(v);
  return lists_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : lists_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::vector<Triangle>& Graph::triangles() const {
  std::call_once(cache_->once, [this] {
    auto& tris = cache_->triangles;
    const std::size_t n = order();
    cache_->incidence.assign(n, {});
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : lists_[u]) {
        if (v <= u) continue;
        const auto& wu = adjacency_[u].words();
        const auto& wv = adjacency_[v].words();
        // Only w > v so each triangle is emitted once, already sorted.
        for (std::size_t i = (v + 1) / VertexSet::kWordBits; i < wu.size(); ++i) {
          VertexSet::Word common = wu[i] & wv[i];
          if (i == (v + 1) / VertexSet::kWordBits) {
            std::size_t shift = (v + 1) % VertexSet::kWordBits;
            common &= ~VertexSet::Word{0} << shift;
          }
          while (common) {
            auto w = static_cast<Vertex>(i * VertexSet::kWordBits + std::countr_zero(common));
            common &= common - 1;
            Triangle t;
            t.a = u;
            t.b = v;
            t.c = w;
            tris.push_back(t);
          }
        }
      }
    }
    for (std::size_t i = 0; i < tris.size(); ++i)
      for (Vertex x : tris[i].vertices()) cache_->incidence[x].push_back(i);
  });
  return cache_->triangles;
}

std::span<const std::size_t> Graph::triangles_at(Vertex v) const {
  check_vertex(v);
  triangles();
  return cache_->incidence[v];
}

Graph Graph::induced(const VertexSet& keep) const {
  check_set(keep);
  std::vector<Vertex> index(order(), 0);
  std::vector<Vertex> kept = keep.to_vector();
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (auto [u, v] : edges())
    if (keep.contains(u) && keep.contains(v)) es.emplace_back(index[u], index[v]);
  return from_edges(kept.size(), es);
}

VertexSet component_within(const Graph& g, const VertexSet& allowed, Vertex start) {
  g.check_set(allowed);
  VertexSet seen(g.order());
  if (!allowed.contains(start)) return seen;
  std::vector<Vertex> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbor_list(v)) {
      if (allowed.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.vertices();
  while (!remaining.empty()) {
    VertexSet comp = component_within(g, remaining, remaining.first());
    remaining -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_independent(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw PreconditionError("block decomposition requires at least 2 vertices");
  if (!is_connected(g)) throw PreconditionError("block decomposition requires a connected graph");

  BlockDecomposition out;
  out.cut_vertices = VertexSet(n);
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> edge_stack;

  // Iterative Hopcroft-Tarjan. Frame = (vertex, parent, next neighbor index).
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    std::size_t children;
  };
  const auto none = static_cast<Vertex>(n);
  std::vector<Frame> stack;
  stack.push_back({0, none, 0, 0});
  disc[0] = low[0] = ++timer;

  auto pop_block = [&](Vertex u, Vertex v) {
    VertexSet block(n);
    while (!edge_stack.empty()) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.insert(e.first);
      block.insert(e.second);
      if (e == Edge{u, v}) break;
    }
    out.blocks.push_back(std::move(block));
  };

  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbor_list(f.v);
    if (f.next < nbrs.size()) {
      Vertex w = nbrs[f.next++];
      if (disc[w] == 0) {
        ++f.children;
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = ++timer;
        stack.push_back({w, f.v, 0, 0});
      } else if (w != f.parent && disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) {
      if (done.children >= 2) out.cut_vertices.insert(done.v);
      break;
    }
    Vertex u = stack.back().v;
    low[u] = std::min(low[u], low[done.v]);
    if (low[done.v] >= disc[u]) {
      if (stack.back().parent != none) out.cut_vertices.insert(u);
      pop_block(u, done.v);
    }
  }
  return out;
}

bool is_block_graph(const Graph& g) {
  if (g.order() <= 1) return true;
  if (!is_connected(g)) return false;
  for (const auto& block : block_decomposition(g).blocks) {
    const std::size_t k = block.size();
    std::size_t inside = 0;
    block.for_each([&](Vertex v) { inside += (g.neighbors(v) & block).size(); });
    if (inside != k * (k - 1)) return false;
  }
  return true;
}

ChordalResult is_chordal(const Graph& g) {
  const std::size_t n = g.order();
  // Maximum cardinality search; the reverse visit order is a PEO iff chordal.
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (!found || weight[v] > weight[best]) {
        best = v;
        found = true;
      }
    }
    visited[best] = true;
    visit.push_back(best);
    for (Vertex w : g.neighbor_list(best))
      if (!visited[w]) ++weight[w];
  }
  std::vector<Vertex> order(visit.rbegin(), visit.rend());
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  for (Vertex v : order) {
    // Later neighbours must form a clique; it suffices that they are all
    // adjacent to the earliest of them.
    VertexSet later(n);
    std::optional<Vertex> parent;
    for (Vertex w : g.neighbor_list(v)) {
      if (position[w] <= position[v]) continue;
      later.insert(w);
      if (!parent || position[w] < position[*parent]) parent = w;
    }
    if (!parent) continue;
    later.erase(*parent);
    if (!later.is_subset_of(g.neighbors(*parent))) return {};
  }
  return {true, std::move(order)};
}

bool is_proper_coloring(const Graph& g, std::span<const std::size_t> colors) {
  if (colors.size() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

namespace {

// DSATUR-ordered backtracking for a proper coloring with at most k colors.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, std::size_t k)
      : g_(g), k_(k), colors_(g.order(), kUncolored), used_(g.order(), std::vector<int>(k, 0)) {}

  std::optional<std::vector<std::size_t>> run() {
    if (g_.order() == 0) return std::vector<std::size_t>{};
    if (k_ == 0) return std::nullopt;
    if (solve(0, 0)) return colors_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

  std::size_t saturation(Vertex v) const {
    std::size_t s = 0;
    for (std::size_t c = 0; c < k_; ++c) s += used_[v][c] > 0;
    return s;
  }

  bool solve(std::size_t colored, std::size_t max_used) {
    if (colored == g_.order()) return true;
    Vertex pick = 0;
    std::size_t best_sat = 0, best_deg = 0;
    bool found = false;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colors_[v] != kUncolored) continue;
      std::size_t sat = saturation(v), deg = g_.degree(v);
      if (!found || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
        found = true;
      }
    }
    // Opening a fresh color is symmetric; only try the first unused one.
    const std::size_t limit = std::min(k_, max_used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (used_[pick][c]) continue;
      assign(pick, c, +1);
      if (solve(colored + 1, std::max(max_used, c + 1))) return true;
      assign(pick, c, -1);
    }
    return false;
  }

  void assign(Vertex v, std::size_t c, int delta) {
    colors_[v] = delta > 0 ? c : kUncolored;
    for (Vertex w : g_.neighbor_list(v)) used_[w][c] += delta;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<std::size_t> colors_;
  std::vector<std::vector<int>> used_;
};

std::vector<std::size_t> chordal_coloring(const Graph& g, const std::vector<Vertex>& peo) {
  // Greedy along the reverse PEO uses exactly omega colors.
  const std::size_t n = g.order();
  std::vector<std::size_t> colors(n, n);
  for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
    std::vector<bool> taken(n + 1, false);
    for (Vertex w : g.neighbor_list(*it))
      if (colors[w] < n) taken[colors[w]] = true;
    std::size_t c = 0;
    while (taken[c]) ++c;
    colors[*it] = c;
  }
  return colors;
}

}  // namespace

std::vector<std::size_t> optimal_coloring(const Graph& g, ColoringOptions opts) {
  const std::size_t n = g.order();
  if (n == 0) return {};
  if (auto chordal = is_chordal(g); chordal.chordal) return chordal_coloring(g, chordal.elimination_order);
  if (n > opts.cap)
    throw CapacityError("exact coloring of a non-chordal graph with " + std::to_string(n) +
                        " vertices exceeds cap " + std::to_string(opts.cap));
  for (std::size_t k = 1; k <= n; ++k)
    if (auto colors = KColorSearch(g, k).run()) return *colors;
  return {};  // unreachable: n colors always suffice
}

std::size_t chromatic_number(const Graph& g, ColoringOptions opts) {
  auto colors = optimal_coloring(g, opts);
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

bool is_k_colorable(const Graph& g, std::size_t k, ColoringOptions opts) {
  if (g.order() == 0) return true;
  if (auto chordal = is_chordal(g); chordal.chordal) return chromatic_number(g, opts) <= k;
  if (g.order() > opts.cap)
    throw CapacityError("exact coloring of a non-chordal graph with " + std::to_string(g.order()) +
                        " vertices exceeds cap " + std::to_string(opts.cap));
  return KColorSearch(g, k).run().has_value();
}

std::pair<Graph, Vertex> add_universal_vertex(const Graph& g) {
  const auto u = static_cast<Vertex>(g.order());
  std::vector<Edge> es = g.edges();
  for (Vertex v = 0; v < u; ++v) es.emplace_back(v, u);
  return {Graph::from_edges(g.order() + 1, es), u};
}

}  // namespace deltacvx
