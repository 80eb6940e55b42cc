#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here enumerates all vertex maps or permutations directly.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "graphmodel/graph.hpp"

namespace oracle {

using graphmodel::Graph;
using graphmodel::Vertex;
using Map = std::vector<Vertex>;

inline bool is_hom(const Graph& g, const Graph& h, const Map& m) {
  for (auto [u, v] : g.edges())
    if (!h.adjacent(m[u], m[v])) return false;
  return true;
}

// Calls visit(map) for every map V(G) -> V(H), in lexicographic order.
template <class F>
void for_each_map(int n, int k, F&& visit) {
  if (n > 0 && k == 0) return;
  Map m(n, 0);
  while (true) {
    visit(m);
    int i = n - 1;
    while (i >= 0 && m[i] == k - 1) m[i--] = 0;
    if (i < 0) return;
    ++m[i];
  }
}

inline std::vector<Map> homs(const Graph& g, const Graph& h) {
  std::vector<Map> out;
  for_each_map(g.vertex_count(), h.vertex_count(), [&](const Map& m) {
    if (is_hom(g, h, m)) out.push_back(m);
  });
  return out;
}

inline std::optional<Map> iso(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  Map p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_hom(g, h, p)) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

inline Graph relabel(const Graph& g, const Map& p) {
  std::vector<graphmodel::Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(p[u], p[v]);
  return Graph::build(g.vertex_count(), edges);
}

// Graphs with loops on n vertices up to isomorphism, by Burnside's lemma:
// the average over permutations of 2^(orbits on unordered pairs {u,v}, u<=v).
inline std::uint64_t burnside_count(int n) {
  Map p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t total = 0, perms = 0;
  do {
    std::set<std::pair<int, int>> seen;
    int orbits = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u; v < n; ++v) {
        if (seen.count({u, v})) continue;
        ++orbits;
        int a = u, b = v;
        while (seen.insert({std::min(a, b), std::max(a, b)}).second) {
          a = p[a];
          b = p[b];
        }
      }
    }
    total += std::uint64_t{1} << orbits;
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / perms;
}

// Pairs (S, F) with S a vertex subset and F a subset of the edges inside S.
inline std::uint64_t subobjects(const Graph& g) {
  const int n = g.vertex_count();
  std::uint64_t total = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int inside = 0;
    for (auto [u, v] : g.edges())
      if ((s >> u & 1) && (s >> v & 1)) ++inside;
    total += std::uint64_t{1} << inside;
  }
  return total;
}

inline std::optional<int> chromatic_number(const Graph& g) {
  if (g.has_any_loop()) return std::nullopt;
  for (int k = 0;; ++k)
    if (!homs(g, graphmodel::named::complete(k)).empty()) return k;
}

inline Map compose(const Map& g, const Map& f) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

inline std::size_t image_size(const Map& m) { return std::set<Vertex>(m.begin(), m.end()).size(); }

// Smallest image of an idempotent endomorphism; this is the core's size.
inline std::size_t core_size(const Graph& g) {
  std::size_t best = static_cast<std::size_t>(g.vertex_count());
  for (const auto& m : homs(g, g))
    if (compose(m, m) == m) best = std::min(best, image_size(m));
  return best;
}

// All images of minimal idempotent endomorphisms, as induced subgraphs.
inline std::vector<Graph> minimal_retracts(const Graph& g) {
  const std::size_t best = core_size(g);
  std::vector<Graph> out;
  for (const auto& m : homs(g, g)) {
    if (compose(m, m) != m || image_size(m) != best) continue;
    std::set<Vertex> image(m.begin(), m.end());
    out.push_back(g.induced(std::vector<Vertex>(image.begin(), image.end())));
  }
  return out;
}

}  // namespace oracle
