#include "graphmodel/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>

#include "graphmodel/error.hpp"

namespace graphmodel {

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative, got " + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.words_ = (static_cast<std::size_t>(n) + 63) / 64;
  g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  g.neighbors_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u > v) std::swap(u, v);
    g.edges_.emplace_back(u, v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (auto [u, v] : g.edges_) {
    g.bits_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.bits_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    if (u == v) {
      ++g.loop_count_;
      g.neighbors_[u].push_back(u);
    } else {
      g.neighbors_[u].push_back(v);
      g.neighbors_[v].push_back(u);
    }
  }
  for (auto& list : g.neighbors_) std::sort(list.begin(), list.end());
  return g;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> position(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> kept;
  for (auto [u, v] : edges_) {
    if (position[u] >= 0 && position[v] >= 0) kept.emplace_back(position[u], position[v]);
  }
  return build(static_cast<int>(vertices.size()), kept);
}

std::string Graph::key() const {
  std::string out;
  out.reserve(4 + edges_.size() * 2);
  auto put = [&out](int x) {
    out.push_back(static_cast<char>(x & 0xff));
    out.push_back(static_cast<char>((x >> 8) & 0xff));
  };
  put(n_);
  for (auto [u, v] : edges_) {
    put(u);
    put(v);
  }
  return out;
}

std::size_t GraphKeyHash::operator()(const Graph& g) const { return std::hash<std::string>{}(g.key()); }

namespace named {

Graph empty() { return Graph{}; }
Graph point() { return Graph::build(1, {}); }
Graph loop() { return Graph::build(1, {{0, 0}}); }
Graph edge() { return Graph::build(2, {{0, 1}}); }
Graph omega2() { return Graph::build(2, {{0, 0}, {0, 1}, {1, 1}}); }

Graph complete(int k) {
  std::vector<Edge> e;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
  return Graph::build(k, e);
}

Graph complete_looped(int k) {
  std::vector<Edge> e;
  for (int u = 0; u < k; ++u)
    for (int v = u; v < k; ++v) e.emplace_back(u, v);
  return Graph::build(k, e);
}

Graph cycle(int k) {
  if (k < 3) throw InvalidInput("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::build(k, e);
}

Graph path(int k) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::build(k, e);
}

Graph discrete(int k) { return Graph::build(k, {}); }

Graph grotzsch() {
  // Mycielskian of C5: outer cycle 0..4, shadows 5..9, apex 10.
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, (i + 4) % 5);
    e.emplace_back(5 + i, (i + 1) % 5);
    e.emplace_back(10, 5 + i);
  }
  return Graph::build(11, e);
}

}  // namespace named

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e(a.edges());
  const int shift = a.vertex_count();
  for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  return Graph::build(a.vertex_count() + b.vertex_count(), e);
}

ComponentPartition connected_components(const Graph& g) {
  const int n = g.vertex_count();
  ComponentPartition out;
  out.block_of.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (out.block_of[s] >= 0) continue;
    const int id = static_cast<int>(out.blocks.size());
    std::vector<Vertex> block{s};
    out.block_of[s] = id;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (Vertex w : g.neighbors(block[i])) {
        if (out.block_of[w] < 0) {
          out.block_of[w] = id;
          block.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

FurbishedPart furbished_part(const Graph& g) {
  FurbishedPart out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) out.vertices.push_back(v);
  out.graph = g.induced(out.vertices);
  return out;
}

bool is_furbished(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return false;
  return true;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

namespace {

// Proper colouring with at most k colours, most-saturated vertex first.
bool colourable(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::function<bool(int)> extend = [&](int coloured) -> bool {
    if (coloured == n) return true;
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      std::uint64_t used = 0;
      for (Vertex w : g.neighbors(v))
        if (colour[w] >= 0) used |= std::uint64_t{1} << colour[w];
      const int sat = std::popcount(used);
      if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g.degree(v);
      }
    }
    std::uint64_t used = 0;
    for (Vertex w : g.neighbors(best))
      if (colour[w] >= 0) used |= std::uint64_t{1} << colour[w];
    // Colours above the highest used one are interchangeable: try only the first.
    int highest = -1;
    for (int v = 0; v < n; ++v) highest = std::max(highest, colour[v]);
    for (int c = 0; c < k && c <= highest + 1; ++c) {
      if ((used >> c) & 1U) continue;
      colour[best] = c;
      if (extend(coloured + 1)) return true;
      colour[best] = -1;
    }
    return false;
  };
  return extend(0);
}

}  // namespace

std::optional<int> chromatic_number(const Graph& g) {
  if (g.has_any_loop()) return std::nullopt;
  for (int k = 0;; ++k)
    if (colourable(g, k)) return k;
}

Girths girths(const Graph& g) {
  const int n = g.vertex_count();
  Girths out;
  if (g.has_any_loop()) {
    out.girth = 1;
    out.odd_girth = 1;
    return out;
  }
  // Shortest cycle: BFS from every root, closing a cycle at each non-tree edge.
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  if (best > 0) out.girth = best;
  // Shortest odd closed walk through s: distance from (s,0) to (s,1) in the
  // bipartite double cover. Its minimum over s is the odd girth.
  int odd = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(2 * n, -1);
    std::deque<int> queue{2 * s};
    dist[2 * s] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      const int u = x / 2, side = x % 2;
      for (Vertex w : g.neighbors(u)) {
        const int y = 2 * w + (1 - side);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[2 * s + 1] > 0 && (odd == 0 || dist[2 * s + 1] < odd)) odd = dist[2 * s + 1];
  }
  if (odd > 0) out.odd_girth = odd;
  return out;
}

std::uint64_t count_subobjects(const Graph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices || n > 62) {
    throw BudgetExceeded("subobject count on " + std::to_string(n) + " vertices exceeds budget of " +
                         std::to_string(max_vertices));
  }
  std::uint64_t total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    int induced_edges = 0;
    for (auto [u, v] : g.edges())
      if (((s >> u) & 1U) && ((s >> v) & 1U)) ++induced_edges;
    if (induced_edges >= 64) throw BudgetExceeded("subobject count overflows 64 bits");
    if (__builtin_add_overflow(total, std::uint64_t{1} << induced_edges, &total)) {
      throw BudgetExceeded("subobject count overflows 64 bits");
    }
  }
  return total;
}

}  // namespace graphmodel
