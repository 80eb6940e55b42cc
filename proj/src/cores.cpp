#include "graphmodel/cores.hpp"

#include <algorithm>
#include <functional>

#include "graphmodel/canonical.hpp"
#include "graphmodel/error.hpp"

namespace graphmodel {

IdempotentPower idempotent_power(const Hom& f) {
  if (!same_graph(f.dom_ptr(), f.cod_ptr())) throw InvalidInput("idempotent power needs an endomorphism");
  Hom power = f;
  for (int k = 1;; ++k) {
    if (compose(power, power).map() == power.map()) return {power, k};
    power = compose(f, power);
  }
}

namespace {

std::vector<Vertex> without(int n, Vertex v) {
  std::vector<Vertex> out;
  for (int w = 0; w < n; ++w)
    if (w != v) out.push_back(w);
  return out;
}

// A homomorphism g -> g - v for some v, tried in the given order.
std::optional<Hom> shrinking_endomorphism(const GraphPtr& g, DeletionOrder order) {
  const int n = g->vertex_count();
  for (int i = 0; i < n; ++i) {
    const Vertex v = order == DeletionOrder::Ascending ? i : n - 1 - i;
    const auto kept = without(n, v);
    auto smaller = share(g->induced(kept));
    if (auto h = find_hom(g, smaller)) {
      std::vector<Vertex> m(n);
      for (int x = 0; x < n; ++x) m[x] = kept[(*h)(x)];
      return Hom::trusted(g, g, std::move(m));
    }
  }
  return std::nullopt;
}

}  // namespace

CoreResult core(const GraphPtr& g, DeletionOrder order) {
  GraphPtr current = g;
  Hom retraction = identity(g);
  Hom section = identity(g);
  while (auto e = shrinking_endomorphism(current, order)) {
    const Hom p = idempotent_power(*e).power;
    std::vector<Vertex> image(p.map());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    auto next = share(current->induced(image));
    std::vector<int> position(current->vertex_count(), -1);
    for (std::size_t i = 0; i < image.size(); ++i) position[image[i]] = static_cast<int>(i);
    std::vector<Vertex> onto(current->vertex_count());
    for (int x = 0; x < current->vertex_count(); ++x) onto[x] = position[p(x)];
    retraction = compose(Hom::trusted(current, next, std::move(onto)), retraction);
    section = compose(section, Hom::trusted(next, current, image));
    current = next;
  }
  auto canon = canonical_form(*current);
  auto result = share(std::move(canon.graph));
  std::vector<Vertex> back(current->vertex_count());
  for (int x = 0; x < current->vertex_count(); ++x) back[canon.relabeling[x]] = x;
  retraction = compose(Hom::trusted(current, result, canon.relabeling), retraction);
  section = compose(section, Hom::trusted(result, current, std::move(back)));
  return {result, std::move(retraction), std::move(section)};
}

CoreResult core(const Graph& g, DeletionOrder order) { return core(share(g), order); }

bool is_core(const Graph& g) { return !shrinking_endomorphism(share(g), DeletionOrder::Ascending); }

std::string_view to_string(HomOrder o) {
  switch (o) {
    case HomOrder::Greater: return "greater";
    case HomOrder::Less: return "less";
    case HomOrder::Equivalent: return "equivalent";
    case HomOrder::Incomparable: return "incomparable";
  }
  return "incomparable";
}

HomOrder hom_order(const Graph& g, const Graph& h) {
  const bool down = hom_exists(g, h);
  const bool up = hom_exists(h, g);
  if (down && up) return HomOrder::Equivalent;
  if (down) return HomOrder::Greater;
  if (up) return HomOrder::Less;
  return HomOrder::Incomparable;
}

bool CorePoset::related(int i, int j) const {
  return std::binary_search(relation.begin(), relation.end(), std::make_pair(i, j));
}

CorePoset core_poset(const std::vector<Graph>& corpus) {
  std::vector<Graph> cores;
  for (const auto& g : corpus) cores.push_back(*core(g).core);
  std::sort(cores.begin(), cores.end(), canonical_less);
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  CorePoset out;
  for (auto& c : cores) out.elements.push_back(share(std::move(c)));
  const int n = static_cast<int>(out.elements.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (hom_exists(*out.elements[i], *out.elements[j])) out.relation.emplace_back(i, j);
  return out;
}

std::optional<std::vector<Graph>> find_antichain(const std::vector<Graph>& corpus, int k) {
  if (k < 0) throw InvalidInput("antichain size must be non-negative");
  std::vector<int> pool;
  for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
    auto chi = chromatic_number(corpus[i]);
    if (chi && *chi >= 3) pool.push_back(i);
  }
  std::vector<int> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (std::size_t p = from; p < pool.size(); ++p) {
      const Graph& g = corpus[pool[p]];
      bool ok = true;
      for (int c : chosen) ok = ok && hom_order(g, corpus[c]) == HomOrder::Incomparable;
      if (!ok) continue;
      chosen.push_back(pool[p]);
      if (extend(p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  std::vector<Graph> out;
  for (int c : chosen) out.push_back(corpus[c]);
  return out;
}

}  // namespace graphmodel
