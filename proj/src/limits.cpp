#include "graphmodel/limits.hpp"

#include <numeric>

#include "graphmodel/error.hpp"

namespace graphmodel {

Product product(const GraphPtr& g, const GraphPtr& h) {
  const int m = h->vertex_count();
  const int n = g->vertex_count() * m;
  std::vector<Edge> edges;
  for (auto [a, b] : g->edges()) {
    for (auto [c, d] : h->edges()) {
      edges.emplace_back(a * m + c, b * m + d);
      edges.emplace_back(a * m + d, b * m + c);
    }
  }
  auto graph = share(Graph::build(n, edges));
  std::vector<Vertex> first(n), second(n);
  for (int v = 0; v < n; ++v) {
    first[v] = v / m;
    second[v] = v % m;
  }
  return {graph, Hom::trusted(graph, g, std::move(first)), Hom::trusted(graph, h, std::move(second))};
}

Product product(const Graph& g, const Graph& h) { return product(share(g), share(h)); }

Coproduct coproduct(const GraphPtr& g, const GraphPtr& h) {
  auto graph = share(disjoint_union(*g, *h));
  std::vector<Vertex> left(g->vertex_count()), right(h->vertex_count());
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), g->vertex_count());
  return {graph, Hom::trusted(g, graph, std::move(left)), Hom::trusted(h, graph, std::move(right))};
}

Coproduct coproduct(const Graph& g, const Graph& h) { return coproduct(share(g), share(h)); }

namespace {

void require_parallel(const Hom& f, const Hom& g) {
  if (!same_graph(f.dom_ptr(), g.dom_ptr()) || !same_graph(f.cod_ptr(), g.cod_ptr()))
    throw InvalidInput("morphisms are not parallel");
}

}  // namespace

Equalizer equalizer(const Hom& f, const Hom& g) {
  require_parallel(f, g);
  std::vector<Vertex> kept;
  for (int v = 0; v < f.dom().vertex_count(); ++v)
    if (f(v) == g(v)) kept.push_back(v);
  auto graph = share(f.dom().induced(kept));
  return {graph, Hom::trusted(graph, f.dom_ptr(), std::move(kept))};
}

Coequalizer coequalizer(const Hom& f, const Hom& g) {
  require_parallel(f, g);
  const int n = f.cod().vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < f.dom().vertex_count(); ++v) {
    const int a = find(f(v)), b = find(g(v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> cls(n, -1), index(n, -1);
  int classes = 0;
  for (int w = 0; w < n; ++w) {
    const int root = find(w);
    if (index[root] < 0) index[root] = classes++;
    cls[w] = index[root];
  }
  std::vector<Edge> edges;
  for (auto [u, v] : f.cod().edges()) edges.emplace_back(cls[u], cls[v]);
  auto graph = share(Graph::build(classes, edges));
  return {graph, Hom::trusted(f.cod_ptr(), graph, std::move(cls))};
}

Pullback pullback(const Hom& f, const Hom& g) {
  if (!same_graph(f.cod_ptr(), g.cod_ptr())) throw InvalidInput("pullback legs must share a codomain");
  auto prod = product(f.dom_ptr(), g.dom_ptr());
  auto eq = equalizer(compose(f, prod.p1), compose(g, prod.p2));
  return {eq.graph, compose(prod.p1, eq.inclusion), compose(prod.p2, eq.inclusion)};
}

Pushout pushout(const Hom& f, const Hom& g) {
  if (!same_graph(f.dom_ptr(), g.dom_ptr())) throw InvalidInput("pushout legs must share a domain");
  auto sum = coproduct(f.cod_ptr(), g.cod_ptr());
  auto co = coequalizer(compose(sum.i1, f), compose(sum.i2, g));
  return {co.graph, compose(co.projection, sum.i1), compose(co.projection, sum.i2)};
}

Hom pairing(const Hom& f, const Hom& g) {
  if (!same_graph(f.dom_ptr(), g.dom_ptr())) throw InvalidInput("pairing needs a common domain");
  auto prod = product(f.cod_ptr(), g.cod_ptr());
  const int m = g.cod().vertex_count();
  std::vector<Vertex> map(f.dom().vertex_count());
  for (int v = 0; v < f.dom().vertex_count(); ++v) map[v] = f(v) * m + g(v);
  return Hom::trusted(f.dom_ptr(), prod.graph, std::move(map));
}

Hom copairing(const Hom& f, const Hom& g) {
  if (!same_graph(f.cod_ptr(), g.cod_ptr())) throw InvalidInput("copairing needs a common codomain");
  auto sum = coproduct(f.dom_ptr(), g.dom_ptr());
  std::vector<Vertex> map(f.map());
  map.insert(map.end(), g.map().begin(), g.map().end());
  return Hom::trusted(sum.graph, f.cod_ptr(), std::move(map));
}

Hom coproduct_map(const Hom& f, const Hom& g) {
  auto from = coproduct(f.dom_ptr(), g.dom_ptr());
  auto to = coproduct(f.cod_ptr(), g.cod_ptr());
  std::vector<Vertex> map(f.map());
  for (Vertex w : g.map()) map.push_back(w + f.cod().vertex_count());
  return Hom::trusted(from.graph, to.graph, std::move(map));
}

}  // namespace graphmodel
