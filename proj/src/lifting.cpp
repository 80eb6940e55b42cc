#include "graphmodel/lifting.hpp"

#include <algorithm>
#include <set>

#include "graphmodel/error.hpp"

namespace graphmodel {

Square Square::build(Hom left, Hom right, Hom top, Hom bottom) {
  if (!same_graph(left.dom_ptr(), top.dom_ptr())) throw CompositionError("left and top must share a domain");
  if (!same_graph(right.dom_ptr(), top.cod_ptr())) throw CompositionError("top must end where right starts");
  if (!same_graph(left.cod_ptr(), bottom.dom_ptr())) throw CompositionError("bottom must start where left ends");
  if (!same_graph(right.cod_ptr(), bottom.cod_ptr())) throw CompositionError("right and bottom must share a codomain");
  for (int a = 0; a < left.dom().vertex_count(); ++a) {
    if (right(top(a)) != bottom(left(a))) {
      throw CommutativityError("square does not commute at vertex " + std::to_string(a));
    }
  }
  return Square(std::move(left), std::move(right), std::move(top), std::move(bottom));
}

std::optional<Hom> find_filler(const Square& s, const SearchOptions& options) {
  const Hom& left = s.left();
  HomConstraints c;
  c.fixed.assign(left.cod().vertex_count(), std::nullopt);
  for (int a = 0; a < left.dom().vertex_count(); ++a) {
    auto& slot = c.fixed[left(a)];
    if (slot && *slot != s.top()(a)) return std::nullopt;
    slot = s.top()(a);
  }
  c.post_compose.emplace(s.right(), s.bottom());
  return find_hom(left.cod_ptr(), s.right().dom_ptr(), c, options);
}

std::shared_ptr<const std::vector<Hom>> HomCache::homs(const GraphPtr& g, const GraphPtr& h) {
  auto key = std::make_pair(g->key(), h->key());
  {
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
  }
  auto list = std::make_shared<const std::vector<Hom>>(enumerate_homs(g, h, {}, options_));
  std::lock_guard lock(mutex_);
  return table_.emplace(std::move(key), std::move(list)).first->second;
}

namespace {

std::shared_ptr<const std::vector<Hom>> homs_via(HomCache* cache, const GraphPtr& g, const GraphPtr& h) {
  if (cache) return cache->homs(g, h);
  return std::make_shared<const std::vector<Hom>>(enumerate_homs(g, h));
}

std::vector<Vertex> composite(const std::vector<Vertex>& outer, const std::vector<Vertex>& inner) {
  std::vector<Vertex> m(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) m[i] = outer[inner[i]];
  return m;
}

}  // namespace

std::optional<Square> lifting_counterexample(const Hom& f, const Hom& g, HomCache* cache) {
  // f : A -> B on the left, g : C -> D on the right.
  const auto tops = homs_via(cache, f.dom_ptr(), g.dom_ptr());
  if (tops->empty()) return std::nullopt;
  const auto bottoms = homs_via(cache, f.cod_ptr(), g.cod_ptr());
  if (bottoms->empty()) return std::nullopt;
  std::map<std::vector<Vertex>, std::vector<std::size_t>> by_trace;
  for (std::size_t i = 0; i < bottoms->size(); ++i) by_trace[composite((*bottoms)[i].map(), f.map())].push_back(i);

  std::set<std::pair<std::vector<Vertex>, std::vector<Vertex>>> filled;
  const auto fillers = homs_via(cache, f.cod_ptr(), g.dom_ptr());
  for (const Hom& h : *fillers)
    filled.emplace(composite(h.map(), f.map()), composite(g.map(), h.map()));

  for (const Hom& t : *tops) {
    auto it = by_trace.find(composite(g.map(), t.map()));
    if (it == by_trace.end()) continue;
    for (std::size_t i : it->second) {
      const Hom& b = (*bottoms)[i];
      if (!filled.count({t.map(), b.map()})) return Square::build(f, g, t, b);
    }
  }
  return std::nullopt;
}

bool lifts_left_of(const Hom& f, const Hom& g, HomCache* cache) { return !lifting_counterexample(f, g, cache); }

std::vector<std::pair<Hom, Hom>> retraction_pairs(const GraphPtr& a, const GraphPtr& c, HomCache* cache) {
  std::vector<std::pair<Hom, Hom>> out;
  if (a->vertex_count() > c->vertex_count()) return out;
  const auto sections = homs_via(cache, a, c);
  const auto retractions = homs_via(cache, c, a);
  for (const Hom& s : *sections) {
    if (!is_injective(s)) continue;
    for (const Hom& r : *retractions) {
      bool identity = true;
      for (int v = 0; v < a->vertex_count() && identity; ++v) identity = r(s(v)) == v;
      if (identity) out.emplace_back(s, r);
    }
  }
  return out;
}

std::optional<RetractWitness> retract_witness(const Hom& f, const Hom& g, HomCache* cache) {
  const auto top = retraction_pairs(f.dom_ptr(), g.dom_ptr(), cache);
  if (top.empty()) return std::nullopt;
  const auto bottom = retraction_pairs(f.cod_ptr(), g.cod_ptr(), cache);
  for (const auto& [s1, r1] : top) {
    const auto gs = composite(g.map(), s1.map());
    for (const auto& [s2, r2] : bottom) {
      if (gs != composite(s2.map(), f.map())) continue;
      if (composite(f.map(), r1.map()) != composite(r2.map(), g.map())) continue;
      return RetractWitness{s1, r1, s2, r2};
    }
  }
  return std::nullopt;
}

bool is_retract_of(const Hom& f, const Hom& g, HomCache* cache) { return retract_witness(f, g, cache).has_value(); }

}  // namespace graphmodel
