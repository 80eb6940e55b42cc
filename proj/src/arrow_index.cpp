#include "graphmodel/arrow_index.hpp"

#include <algorithm>
#include <map>

#include "graphmodel/canonical.hpp"
#include "graphmodel/error.hpp"

namespace graphmodel {

namespace {

constexpr std::uint64_t kMaxCodeTable = std::uint64_t{1} << 20;

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > kMaxCodeTable) throw BudgetExceeded("morphism index too large for dense map codes");
  }
  return out;
}

}  // namespace

MorphismIndex::MorphismIndex(std::vector<Graph> objects) {
  for (auto& g : objects) objects_.push_back(share(std::move(g)));
  const int n = object_count();
  offset_.assign(static_cast<std::size_t>(n) * n + 1, 0);
  code_table_.resize(static_cast<std::size_t>(n) * n);
  identity_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      offset_[pair(a, b)] = arrow_count();
      auto homs = enumerate_homs(objects_[a], objects_[b]);
      auto& table = code_table_[pair(a, b)];
      const int na = objects_[a]->vertex_count();
      const int nb = objects_[b]->vertex_count();
      table.assign(nb == 0 && na > 0 ? 0 : power(nb, na), -1);
      for (std::size_t i = 0; i < homs.size(); ++i) {
        table[code(b, homs[i].map())] = static_cast<int>(i);
        dom_.push_back(a);
        cod_.push_back(b);
        arrows_.push_back(std::move(homs[i]));
      }
    }
  }
  offset_.back() = arrow_count();
  for (int a = 0; a < n; ++a) {
    std::vector<Vertex> id(objects_[a]->vertex_count());
    for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<Vertex>(v);
    identity_[a] = lookup(a, a, id);
  }
}

std::shared_ptr<const MorphismIndex> MorphismIndex::corpus(int max_n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const MorphismIndex>> built;
  std::lock_guard lock(mutex);
  auto& slot = built[max_n];
  if (!slot) slot = std::make_shared<const MorphismIndex>(enumerate_graphs_up_to(max_n));
  return slot;
}

std::optional<int> MorphismIndex::object_id(const Graph& g) const {
  for (int i = 0; i < object_count(); ++i)
    if (*objects_[i] == g) return i;
  return std::nullopt;
}

std::uint64_t MorphismIndex::code(int b, std::span<const Vertex> map) const {
  const std::uint64_t base = objects_[b]->vertex_count();
  std::uint64_t c = 0, scale = 1;
  for (Vertex w : map) {
    c += scale * static_cast<std::uint64_t>(w);
    scale *= base;
  }
  return c;
}

int MorphismIndex::local(int a, int b, std::uint64_t c) const {
  const auto& table = code_table_[pair(a, b)];
  return c < table.size() ? table[c] : -1;
}

int MorphismIndex::lookup(int a, int b, std::span<const Vertex> map) const {
  if (static_cast<int>(map.size()) != objects_[a]->vertex_count()) return -1;
  for (Vertex w : map)
    if (w < 0 || w >= objects_[b]->vertex_count()) return -1;
  const int i = local(a, b, code(b, map));
  return i < 0 ? -1 : first(a, b) + i;
}

int MorphismIndex::compose(int g, int f) const {
  if (cod_[f] != dom_[g]) throw CompositionError("arrows are not composable");
  const auto& inner = arrows_[f].map();
  const auto& outer = arrows_[g].map();
  const std::uint64_t base = objects_[cod_[g]]->vertex_count();
  std::uint64_t c = 0, scale = 1;
  for (Vertex v : inner) {
    c += scale * static_cast<std::uint64_t>(outer[v]);
    scale *= base;
  }
  return first(dom_[f], cod_[g]) + local(dom_[f], cod_[g], c);
}

std::optional<std::pair<int, int>> MorphismIndex::counterexample(int f, int g) const {
  const int a = dom_[f], b = cod_[f], c = dom_[g], d = cod_[g];
  const int tops = count(a, c), bottoms = count(b, d);
  if (tops == 0 || bottoms == 0) return std::nullopt;
  const int top0 = first(a, c), bottom0 = first(b, d), filler0 = first(b, c);
  // Squares are indexed by (top, bottom); mark the ones a filler h realises
  // as (h ∘ f, g ∘ h).
  std::vector<bool> filled(static_cast<std::size_t>(tops) * bottoms, false);
  for (int h = filler0; h < filler0 + count(b, c); ++h) {
    const int t = compose(h, f) - top0;
    const int bt = compose(g, h) - bottom0;
    filled[static_cast<std::size_t>(t) * bottoms + bt] = true;
  }
  std::vector<std::pair<int, int>> trace_of_bottom(bottoms);
  for (int i = 0; i < bottoms; ++i) trace_of_bottom[i] = {compose(bottom0 + i, f), i};
  std::sort(trace_of_bottom.begin(), trace_of_bottom.end());
  for (int t = 0; t < tops; ++t) {
    const int trace = compose(g, top0 + t);
    auto it = std::lower_bound(trace_of_bottom.begin(), trace_of_bottom.end(), std::make_pair(trace, -1));
    for (; it != trace_of_bottom.end() && it->first == trace; ++it) {
      if (!filled[static_cast<std::size_t>(t) * bottoms + it->second]) {
        return std::make_pair(top0 + t, bottom0 + it->second);
      }
    }
  }
  return std::nullopt;
}

void MorphismIndex::build_retracts() const {
  const int n = object_count();
  retraction_pairs_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      auto& out = retraction_pairs_[pair(a, c)];
      for (int s = first(a, c); s < first(a, c) + count(a, c); ++s) {
        if (!is_injective(arrows_[s])) continue;
        for (int r = first(c, a); r < first(c, a) + count(c, a); ++r)
          if (compose(r, s) == identity_[a]) out.emplace_back(s, r);
      }
    }
  }
  std::vector<std::pair<int, int>> found;
  for (int g = 0; g < arrow_count(); ++g) {
    const int c = dom_[g], d = cod_[g];
    for (int a = 0; a < n; ++a) {
      for (const auto& [s1, r1] : retraction_pairs_[pair(a, c)]) {
        const int gs = compose(g, s1);
        for (int b = 0; b < n; ++b) {
          for (const auto& [s2, r2] : retraction_pairs_[pair(b, d)]) {
            const int f = compose(r2, gs);
            if (compose(s2, f) != gs) continue;
            if (compose(f, r1) != compose(r2, g)) continue;
            found.emplace_back(f, g);
          }
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  retract_diagrams_ = std::move(found);
}

const std::vector<std::pair<int, int>>& MorphismIndex::retraction_pairs(int a, int c) const {
  std::call_once(retract_once_, [this] { build_retracts(); });
  return retraction_pairs_[pair(a, c)];
}

const std::vector<std::pair<int, int>>& MorphismIndex::retract_diagrams() const {
  std::call_once(retract_once_, [this] { build_retracts(); });
  return retract_diagrams_;
}

std::optional<MorphismIndex::Located> MorphismIndex::locate(const Hom& f) const {
  auto cd = canonical_form(f.dom());
  auto cc = canonical_form(f.cod());
  auto a = object_id(cd.graph);
  auto b = object_id(cc.graph);
  if (!a || !b) return std::nullopt;
  std::vector<Vertex> map(f.dom().vertex_count());
  for (int v = 0; v < f.dom().vertex_count(); ++v) map[cd.relabeling[v]] = cc.relabeling[f(v)];
  const int id = lookup(*a, *b, map);
  if (id < 0) return std::nullopt;
  return Located{id, std::move(cd.relabeling), std::move(cc.relabeling)};
}

}  // namespace graphmodel
