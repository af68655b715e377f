#include "generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace deltacvx::testing {

Graph path(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(v - 1, v);
  return Graph::from_edges(n, es);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, es);
}

Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> es;
  for (Vertex v = 1; v <= leaves; ++v) es.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, es);
}

Graph paw() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

Graph diamond() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph petersen() {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);          // outer cycle
    es.emplace_back(i, i + 5);                // spokes
    es.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, es);
}

Graph wheel(std::size_t rim) {
  std::vector<Edge> es;
  for (Vertex v = 0; v < rim; ++v) {
    es.emplace_back(v, static_cast<Vertex>((v + 1) % rim));
    es.emplace_back(v, static_cast<Vertex>(rim));
  }
  return Graph::from_edges(rim + 1, es);
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

Graph shuffle(const Graph& g, Rng& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), es);
}

Graph random_block_graph(std::size_t n, Rng& rng, std::size_t max_clique) {
  std::vector<Edge> es;
  std::size_t used = 1;
  while (used < n) {
    std::uniform_int_distribution<std::size_t> size_dist(2, std::min(max_clique, n - used + 1));
    const std::size_t k = size_dist(rng);
    std::uniform_int_distribution<Vertex> anchor_dist(0, static_cast<Vertex>(used - 1));
    std::vector<Vertex> clique{anchor_dist(rng)};
    for (std::size_t i = 1; i < k; ++i) clique.push_back(static_cast<Vertex>(used++));
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) es.emplace_back(clique[i], clique[j]);
  }
  return shuffle(Graph::from_edges(n, es), rng);
}

namespace {

// Random clique of the graph built so far, containing `seed`.
std::vector<Vertex> grow_clique(const std::vector<std::vector<bool>>& adj, std::vector<Vertex> seed,
                                std::size_t limit, Rng& rng) {
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < limit; ++v)
    if (std::find(seed.begin(), seed.end(), v) == seed.end()) candidates.push_back(v);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (Vertex v : candidates) {
    const bool fits = std::all_of(seed.begin(), seed.end(), [&](Vertex c) { return adj[c][v]; });
    if (fits && coin(rng)) seed.push_back(v);
  }
  return seed;
}

Graph grow_chordal(std::size_t n, bool two_connected, Rng& rng) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Edge> es;
  auto connect = [&](Vertex a, Vertex b) {
    adj[a][b] = adj[b][a] = true;
    es.emplace_back(a, b);
  };
  std::size_t start = 1;
  if (two_connected) {
    connect(0, 1);
    start = 2;
  }
  for (Vertex v = static_cast<Vertex>(start); v < n; ++v) {
    std::vector<Vertex> seed;
    if (two_connected) {
      std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
      Edge e = es[pick(rng)];
      seed = {e.first, e.second};
    } else {
      std::uniform_int_distribution<Vertex> pick(0, v - 1);
      seed = {pick(rng)};
    }
    for (Vertex c : grow_clique(adj, seed, v, rng)) connect(c, v);
  }
  return Graph::from_edges(n, es);
}

}  // namespace

Graph random_chordal_graph(std::size_t n, Rng& rng) {
  return shuffle(grow_chordal(n, false, rng), rng);
}

Graph random_two_connected_chordal_graph(std::size_t n, Rng& rng) {
  return shuffle(grow_chordal(n, true, rng), rng);
}

namespace {

using Code = std::uint64_t;

// Bit index of pair (i, j), i < j, in the code.
std::size_t pair_bit(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

Code encode(const std::vector<std::vector<bool>>& adj, const std::vector<Vertex>& perm) {
  Code c = 0;
  const std::size_t n = perm.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (adj[perm[i]][perm[j]]) c |= Code{1} << pair_bit(i, j);
  return c;
}

// Minimum code over relabellings that list vertices by nondecreasing degree.
Code canonical_code(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) deg[u] += adj[u][v];
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) {
    return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[perm[j]] == deg[perm[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  Code best = ~Code{0};
  // Odometer over the permutations of each degree class.
  for (;;) {
    best = std::min(best, encode(adj, perm));
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(b),
                                perm.begin() + static_cast<std::ptrdiff_t>(e)))
        break;
    }
    if (c == classes.size()) break;
  }
  return best;
}

Graph decode(std::size_t n, Code code) {
  std::vector<Edge> es;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((code >> pair_bit(i, j)) & 1U) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, es);
}

}  // namespace

std::vector<Graph> all_graphs(std::size_t n) {
  static std::map<std::size_t, std::vector<Code>> memo;
  if (n == 0) return {Graph(0)};
  if (n > 8) throw CapacityError("isomorphism-class enumeration is limited to 8 vertices");
  if (!memo.count(n)) {
    std::set<Code> seen;
    for (const Graph& base : all_graphs(n - 1)) {
      std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
      for (auto [u, v] : base.edges()) adj[u][v] = adj[v][u] = true;
      for (std::uint32_t nb = 0; nb < (1U << (n - 1)); ++nb) {
        for (std::size_t v = 0; v + 1 < n; ++v) adj[v][n - 1] = adj[n - 1][v] = (nb >> v) & 1U;
        seen.insert(canonical_code(adj));
      }
    }
    memo[n].assign(seen.begin(), seen.end());
  }
  std::vector<Graph> out;
  for (Code c : memo[n]) out.push_back(decode(n, c));
  return out;
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace deltacvx::testing
