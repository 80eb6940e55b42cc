#include "graphmodel/hom.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "graphmodel/error.hpp"

namespace graphmodel {

namespace {

std::string edge_text(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

Hom::Hom(GraphPtr dom, GraphPtr cod, std::vector<Vertex> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (!dom_ || !cod_) throw InvalidInput("morphism endpoints must be graphs");
  if (static_cast<int>(map_.size()) != dom_->vertex_count()) {
    throw InvalidInput("morphism lists " + std::to_string(map_.size()) + " images for a domain with " +
                       std::to_string(dom_->vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < map_.size(); ++v) {
    if (map_[v] < 0 || map_[v] >= cod_->vertex_count()) {
      throw InvalidInput("image " + std::to_string(map_[v]) + " of vertex " + std::to_string(v) +
                         " is not a vertex of the codomain");
    }
  }
  for (auto [u, v] : dom_->edges()) {
    if (!cod_->adjacent(map_[u], map_[v])) {
      throw InvalidInput("edge " + edge_text(u, v) + " maps to non-edge " + edge_text(map_[u], map_[v]));
    }
  }
}

Hom Hom::trusted(GraphPtr dom, GraphPtr cod, std::vector<Vertex> map) {
  Hom h;
  h.dom_ = std::move(dom);
  h.cod_ = std::move(cod);
  h.map_ = std::move(map);
  return h;
}

bool same_graph(const GraphPtr& a, const GraphPtr& b) { return a == b || *a == *b; }

Hom compose(const Hom& g, const Hom& f) {
  if (!same_graph(f.cod_ptr(), g.dom_ptr())) throw CompositionError("codomain of f is not the domain of g");
  std::vector<Vertex> m(f.map().size());
  for (std::size_t v = 0; v < m.size(); ++v) m[v] = g(f(static_cast<Vertex>(v)));
  return Hom::trusted(f.dom_ptr(), g.cod_ptr(), std::move(m));
}

Hom identity(const GraphPtr& g) {
  std::vector<Vertex> m(g->vertex_count());
  for (int v = 0; v < g->vertex_count(); ++v) m[v] = v;
  return Hom::trusted(g, g, std::move(m));
}

Hom identity(const Graph& g) { return identity(share(g)); }

namespace {

// Backtracking over per-vertex candidate bitsets. Each level owns a copy of
// the domains it narrowed, so undoing is just dropping back a level.
class HomSearch {
 public:
  HomSearch(const Graph& g, const Graph& h, const HomConstraints& c, std::uint64_t budget)
      : g_(g), h_(h), n_(g.vertex_count()), words_((static_cast<std::size_t>(h.vertex_count()) + 63) / 64),
        budget_(budget) {
    levels_.assign(n_ + 1, std::vector<std::uint64_t>(n_ * words_, 0));
    assignment_.assign(n_, -1);
    auto& root = levels_[0];
    for (int v = 0; v < n_; ++v) {
      for (int w = 0; w < h.vertex_count(); ++w) {
        if (g.has_loop(v) && !h.has_loop(w)) continue;
        set(root, v, w);
      }
    }
    if (!c.fixed.empty()) {
      if (static_cast<int>(c.fixed.size()) != n_)
        throw InvalidInput("fixed assignment must list every domain vertex");
      for (int v = 0; v < n_; ++v) {
        if (!c.fixed[v]) continue;
        const int w = *c.fixed[v];
        if (w < 0 || w >= h.vertex_count())
          throw InvalidInput("fixed image " + std::to_string(w) + " is not a vertex of the target");
        const bool allowed = test(root, v, w);
        clear_row(root, v);
        if (allowed) set(root, v, w);
      }
    }
    if (c.post_compose) {
      const auto& [post, target] = *c.post_compose;
      if (!(post.dom() == h)) throw InvalidInput("post-composition map must start at the search target");
      if (!(target.dom() == g)) throw InvalidInput("post-composition target must start at the search domain");
      if (!(target.cod() == post.cod())) throw InvalidInput("post-composition maps must share a codomain");
      for (int v = 0; v < n_; ++v)
        for (int w = 0; w < h.vertex_count(); ++w)
          if (test(root, v, w) && post(w) != target(v)) unset(root, v, w);
    }
    // Prune each domain against the loops/fixes of its neighbours at the root.
    for (int v = 0; v < n_; ++v)
      if (row_count(root, v) == 0) impossible_ = true;
  }

  void run(const std::function<bool(const std::vector<Vertex>&)>& on_solution) {
    if (impossible_) return;
    on_solution_ = &on_solution;
    descend(0);
  }

 private:
  static constexpr std::uint64_t bit(int w) { return std::uint64_t{1} << (w & 63); }
  std::uint64_t* row_ptr(std::vector<std::uint64_t>& level, int v) const { return level.data() + v * words_; }
  void set(std::vector<std::uint64_t>& level, int v, int w) { row_ptr(level, v)[w >> 6] |= bit(w); }
  void unset(std::vector<std::uint64_t>& level, int v, int w) { row_ptr(level, v)[w >> 6] &= ~bit(w); }
  bool test(std::vector<std::uint64_t>& level, int v, int w) const {
    return (row_ptr(level, v)[w >> 6] >> (w & 63)) & 1U;
  }
  void clear_row(std::vector<std::uint64_t>& level, int v) {
    std::fill(row_ptr(level, v), row_ptr(level, v) + words_, 0);
  }
  int row_count(std::vector<std::uint64_t>& level, int v) const {
    int c = 0;
    const auto* r = row_ptr(level, v);
    for (std::size_t i = 0; i < words_; ++i) c += std::popcount(r[i]);
    return c;
  }

  // Returns false when the caller asked to stop.
  bool descend(int depth) {
    if (depth == n_) return (*on_solution_)(assignment_);
    auto& level = levels_[depth];
    int pick = -1, best = 0;
    for (int v = 0; v < n_; ++v) {
      if (assignment_[v] >= 0) continue;
      const int c = row_count(level, v);
      if (pick < 0 || c < best) {
        pick = v;
        best = c;
      }
    }
    auto& next = levels_[depth + 1];
    const auto* candidates = row_ptr(level, pick);
    for (std::size_t word = 0; word < words_; ++word) {
      std::uint64_t bits = candidates[word];
      while (bits) {
        const int w = static_cast<int>(word * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (++nodes_ > budget_) {
          throw BudgetExceeded("homomorphism search exceeded node budget of " + std::to_string(budget_));
        }
        next = level;
        clear_row(next, pick);
        set(next, pick, w);
        bool dead = false;
        const auto target_row = h_.row(w);
        for (Vertex u : g_.neighbors(pick)) {
          if (u == pick || assignment_[u] >= 0) continue;
          auto* r = row_ptr(next, u);
          std::uint64_t any = 0;
          for (std::size_t i = 0; i < words_; ++i) {
            r[i] &= target_row[i];
            any |= r[i];
          }
          if (!any) {
            dead = true;
            break;
          }
        }
        if (dead) continue;
        assignment_[pick] = w;
        const bool go_on = descend(depth + 1);
        assignment_[pick] = -1;
        if (!go_on) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool impossible_ = false;
  std::vector<std::vector<std::uint64_t>> levels_;
  std::vector<Vertex> assignment_;
  const std::function<bool(const std::vector<Vertex>&)>* on_solution_ = nullptr;
};

}  // namespace

std::optional<Hom> find_hom(const GraphPtr& g, const GraphPtr& h, const HomConstraints& c,
                            const SearchOptions& options) {
  std::optional<Hom> found;
  HomSearch search(*g, *h, c, options.node_budget);
  search.run([&](const std::vector<Vertex>& m) {
    found = Hom::trusted(g, h, m);
    return false;
  });
  return found;
}

std::optional<Hom> find_hom(const Graph& g, const Graph& h, const HomConstraints& c,
                            const SearchOptions& options) {
  return find_hom(share(g), share(h), c, options);
}

std::vector<Hom> enumerate_homs(const GraphPtr& g, const GraphPtr& h, const HomConstraints& c,
                                const SearchOptions& options) {
  std::vector<std::vector<Vertex>> maps;
  HomSearch search(*g, *h, c, options.node_budget);
  search.run([&](const std::vector<Vertex>& m) {
    maps.push_back(m);
    return true;
  });
  std::sort(maps.begin(), maps.end());
  std::vector<Hom> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(Hom::trusted(g, h, std::move(m)));
  return out;
}

std::vector<Hom> enumerate_homs(const Graph& g, const Graph& h, const HomConstraints& c,
                                const SearchOptions& options) {
  return enumerate_homs(share(g), share(h), c, options);
}

std::uint64_t count_homs(const Graph& g, const Graph& h, const HomConstraints& c, const SearchOptions& options) {
  std::uint64_t count = 0;
  HomSearch search(g, h, c, options.node_budget);
  search.run([&](const std::vector<Vertex>&) {
    ++count;
    return true;
  });
  return count;
}

bool hom_exists(const Graph& g, const Graph& h, const SearchOptions& options) {
  bool found = false;
  HomSearch search(g, h, {}, options.node_budget);
  search.run([&](const std::vector<Vertex>&) {
    found = true;
    return false;
  });
  return found;
}

bool is_injective(const Hom& f) {
  std::vector<bool> hit(f.cod().vertex_count(), false);
  for (Vertex w : f.map()) {
    if (hit[w]) return false;
    hit[w] = true;
  }
  return true;
}

bool is_surjective(const Hom& f) {
  std::vector<bool> hit(f.cod().vertex_count(), false);
  for (Vertex w : f.map()) hit[w] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_edge_surjective(const Hom& f) {
  const Graph& cod = f.cod();
  std::vector<Edge> images;
  for (auto [u, v] : f.dom().edges()) {
    Vertex a = f(u), b = f(v);
    if (a > b) std::swap(a, b);
    images.emplace_back(a, b);
  }
  std::sort(images.begin(), images.end());
  for (const auto& e : cod.edges())
    if (!std::binary_search(images.begin(), images.end(), e)) return false;
  return true;
}

bool is_isomorphism(const Hom& f) {
  return is_injective(f) && is_surjective(f) && f.dom().edge_count() == f.cod().edge_count();
}

std::optional<Hom> find_section_of(const Hom& f, const SearchOptions& options) {
  HomConstraints c;
  c.post_compose.emplace(f, identity(f.cod_ptr()));
  return find_hom(f.cod_ptr(), f.dom_ptr(), c, options);
}

std::optional<Hom> find_retraction_of(const Hom& f, const SearchOptions& options) {
  if (!is_injective(f)) return std::nullopt;
  HomConstraints c;
  c.fixed.assign(f.cod().vertex_count(), std::nullopt);
  for (int v = 0; v < f.dom().vertex_count(); ++v) c.fixed[f(v)] = v;
  return find_hom(f.cod_ptr(), f.dom_ptr(), c, options);
}

bool is_retraction(const Hom& f, const SearchOptions& options) { return find_section_of(f, options).has_value(); }
bool is_section(const Hom& f, const SearchOptions& options) { return find_retraction_of(f, options).has_value(); }

HomFlags classify_hom(const Hom& f, const SearchOptions& options) {
  HomFlags flags;
  flags.injective = is_injective(f);
  flags.surjective = is_surjective(f);
  flags.edge_surjective = is_edge_surjective(f);
  flags.retraction = is_retraction(f, options);
  flags.section = is_section(f, options);
  flags.isomorphism = is_isomorphism(f);
  return flags;
}

Hom inverse(const Hom& f) {
  if (!is_isomorphism(f)) throw InvalidInput("only isomorphisms have inverses");
  std::vector<Vertex> m(f.cod().vertex_count());
  for (int v = 0; v < f.dom().vertex_count(); ++v) m[f(v)] = v;
  return Hom::trusted(f.cod_ptr(), f.dom_ptr(), std::move(m));
}

Hom to_terminal(const GraphPtr& g) {
  static const GraphPtr terminal = share(named::loop());
  return Hom::trusted(g, terminal, std::vector<Vertex>(g->vertex_count(), 0));
}

Hom from_initial(const GraphPtr& g) {
  static const GraphPtr initial = share(named::empty());
  return Hom::trusted(initial, g, {});
}

}  // namespace graphmodel
