#include "graphmodel/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "graphmodel/error.hpp"

namespace graphmodel {

namespace {

// Equitable refinement: start from (loop, degree) and split by the multiset
// of neighbour colours until stable. Colour ids follow the sorted order of
// signatures, so they are isomorphism invariant.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n);
  {
    std::vector<std::pair<int, int>> sig(n);
    for (int v = 0; v < n; ++v) sig[v] = {g.has_loop(v) ? 1 : 0, g.degree(v)};
    std::vector<std::pair<int, int>> sorted(sig);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  }
  int classes = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> sorted(sig);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int next = static_cast<int>(sorted.size());
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

bool twins(const Graph& g, Vertex u, Vertex v) {
  if (g.has_loop(u) != g.has_loop(v)) return false;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return true;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    colour_ = refine_colours(g);
    for (int v = 0; v < n_; ++v) cell_order_.push_back(v);
    std::stable_sort(cell_order_.begin(), cell_order_.end(),
                     [&](int a, int b) { return colour_[a] < colour_[b]; });
    position_colour_.resize(n_);
    for (int p = 0; p < n_; ++p) position_colour_[p] = colour_[cell_order_[p]];
    twin_.assign(n_, std::vector<bool>(n_, false));
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) twin_[u][v] = u != v && colour_[u] == colour_[v] && twins(g, u, v);
  }

  CanonicalForm run() {
    at_.assign(n_, -1);
    used_.assign(n_, false);
    current_.assign(n_, {});
    best_.reset();
    descend(0);
    CanonicalForm out;
    out.relabeling.assign(n_, -1);
    for (int p = 0; p < n_; ++p) out.relabeling[best_order_[p]] = p;
    std::vector<Edge> edges;
    for (auto [u, v] : g_.edges()) edges.emplace_back(out.relabeling[u], out.relabeling[v]);
    out.graph = Graph::build(n_, edges);
    return out;
  }

 private:
  // Code of position p: adjacency of the vertex there with positions 0..p.
  std::vector<char> column(int p) const {
    std::vector<char> col(p + 1);
    for (int q = 0; q <= p; ++q) col[q] = g_.adjacent(at_[q], at_[p]) ? 1 : 0;
    return col;
  }

  // Lexicographic comparison of the prefix 0..p against the best code so far.
  int compare_prefix(int p) const {
    for (int q = 0; q <= p; ++q) {
      if (current_[q] < (*best_)[q]) return -1;
      if ((*best_)[q] < current_[q]) return 1;
    }
    return 0;
  }

  void descend(int p) {
    if (++nodes_ > default_node_budget()) throw BudgetExceeded("canonical labelling search exceeded node budget");
    if (p == n_) {
      if (!best_ || compare_prefix(n_ - 1) > 0) {
        best_ = current_;
        best_order_ = at_;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != position_colour_[p]) continue;
      bool skip = false;
      for (int t : tried)
        if (twin_[t][v]) skip = true;
      if (skip) continue;
      tried.push_back(v);
      at_[p] = v;
      used_[v] = true;
      current_[p] = column(p);
      if (!best_ || compare_prefix(p) >= 0) descend(p + 1);
      used_[v] = false;
      at_[p] = -1;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> cell_order_;
  std::vector<int> position_colour_;
  std::vector<std::vector<bool>> twin_;
  std::vector<int> at_;
  std::vector<bool> used_;
  std::vector<std::vector<char>> current_;
  std::optional<std::vector<std::vector<char>>> best_;
  std::vector<int> best_order_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count() || g.loop_count() != h.loop_count())
    return std::nullopt;
  auto profile = [](const Graph& x) {
    std::vector<std::pair<int, int>> p;
    for (int v = 0; v < x.vertex_count(); ++v) p.emplace_back(x.has_loop(v) ? 1 : 0, x.degree(v));
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(g) != profile(h)) return std::nullopt;

  std::vector<Vertex> image(n, -1);
  std::vector<bool> taken(n, false);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (taken[w] || g.degree(v) != h.degree(w) || g.has_loop(v) != h.has_loop(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == h.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      taken[w] = true;
      if (extend(v + 1)) return true;
      taken[w] = false;
      image[v] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

bool canonical_less(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
  if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
  return a.edges() < b.edges();
}

std::vector<Graph> enumerate_graphs(int n, int max_vertices) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  if (n > max_vertices || n > kEnumerationHardCap) {
    throw BudgetExceeded("graph enumeration on " + std::to_string(n) + " vertices exceeds budget of " +
                         std::to_string(std::min(max_vertices, kEnumerationHardCap)));
  }
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) slots.emplace_back(u, v);
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  const std::uint64_t subsets = std::uint64_t{1} << slots.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((s >> i) & 1U) edges.push_back(slots[i]);
    Graph c = canonical_form(Graph::build(n, edges)).graph;
    if (seen.insert(c.key()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Graph> enumerate_graphs_up_to(int n, int max_vertices) {
  std::vector<Graph> out;
  for (int k = 0; k <= n; ++k) {
    auto level = enumerate_graphs(k, max_vertices);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace graphmodel
