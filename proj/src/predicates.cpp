#include "graphmodel/predicates.hpp"

#include <algorithm>

namespace graphmodel {

std::vector<int> component_map(const Hom& f) {
  const auto dom = connected_components(f.dom());
  const auto cod = connected_components(f.cod());
  std::vector<int> out(dom.blocks.size());
  for (std::size_t i = 0; i < dom.blocks.size(); ++i) out[i] = cod.block_of[f(dom.blocks[i].front())];
  return out;
}

bool components_injective(const Hom& f) {
  auto m = component_map(f);
  std::sort(m.begin(), m.end());
  return std::adjacent_find(m.begin(), m.end()) == m.end();
}

bool components_surjective(const Hom& f) {
  const auto m = component_map(f);
  std::vector<bool> hit(connected_components(f.cod()).blocks.size(), false);
  for (int c : m) hit[c] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool components_bijective(const Hom& f) { return components_injective(f) && components_surjective(f); }

bool componentwise_isomorphism(const Hom& f) {
  const auto dom = connected_components(f.dom());
  const auto cod = connected_components(f.cod());
  for (const auto& block : dom.blocks) {
    const auto& target = cod.blocks[cod.block_of[f(block.front())]];
    if (block.size() != target.size()) return false;
    std::vector<Vertex> image;
    for (Vertex v : block) image.push_back(f(v));
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    std::size_t edges = 0;
    for (Vertex u : block)
      for (Vertex w : f.dom().neighbors(u))
        if (u <= w) ++edges;
    std::size_t target_edges = 0;
    for (Vertex u : target)
      for (Vertex w : f.cod().neighbors(u))
        if (u <= w) ++target_edges;
    if (edges != target_edges) return false;
  }
  return true;
}

Hom furbished_restriction(const Hom& f) {
  const auto dom = furbished_part(f.dom());
  const auto cod = furbished_part(f.cod());
  std::vector<int> position(f.cod().vertex_count(), -1);
  for (std::size_t i = 0; i < cod.vertices.size(); ++i) position[cod.vertices[i]] = static_cast<int>(i);
  std::vector<Vertex> m;
  for (Vertex v : dom.vertices) m.push_back(position[f(v)]);
  return Hom::trusted(share(dom.graph), share(cod.graph), std::move(m));
}

bool furbished_isomorphism(const Hom& f) { return is_isomorphism(furbished_restriction(f)); }

bool injective_on_furbished(const Hom& f) { return is_injective(furbished_restriction(f)); }

bool isolated_bijection(const Hom& f) {
  const auto dom = isolated_vertices(f.dom());
  const auto cod = isolated_vertices(f.cod());
  if (dom.size() != cod.size()) return false;
  std::vector<Vertex> image;
  for (Vertex v : dom) {
    if (f.cod().degree(f(v)) != 0) return false;
    image.push_back(f(v));
  }
  std::sort(image.begin(), image.end());
  return std::adjacent_find(image.begin(), image.end()) == image.end();
}

namespace {

std::vector<Edge> image_edges(const Hom& f) {
  std::vector<Edge> out;
  for (auto [u, v] : f.dom().edges()) {
    Vertex a = f(u), b = f(v);
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<bool> image_mask(const Hom& f) {
  std::vector<bool> in(f.cod().vertex_count(), false);
  for (Vertex w : f.map()) in[w] = true;
  return in;
}

}  // namespace

bool non_loop_edge_surjective(const Hom& f) {
  const auto images = image_edges(f);
  for (const auto& e : f.cod().edges())
    if (e.first != e.second && !std::binary_search(images.begin(), images.end(), e)) return false;
  return true;
}

bool loops_have_looped_preimage(const Hom& f) {
  std::vector<bool> covered(f.cod().vertex_count(), false);
  for (int v = 0; v < f.dom().vertex_count(); ++v)
    if (f.dom().has_loop(v)) covered[f(v)] = true;
  for (int w = 0; w < f.cod().vertex_count(); ++w)
    if (f.cod().has_loop(w) && !covered[w]) return false;
  return true;
}

bool loops_covered(const Hom& f) {
  const auto images = image_edges(f);
  for (int w = 0; w < f.cod().vertex_count(); ++w)
    if (f.cod().has_loop(w) && !std::binary_search(images.begin(), images.end(), Edge{w, w})) return false;
  return true;
}

bool edge_reflecting_injection(const Hom& f) {
  if (!is_injective(f)) return false;
  const int n = f.dom().vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (f.cod().adjacent(f(u), f(v)) && !f.dom().adjacent(u, v)) return false;
  return true;
}

bool image_closed(const Hom& f) {
  const auto in = image_mask(f);
  for (auto [u, v] : f.cod().edges())
    if (in[u] != in[v]) return false;
  return true;
}

bool is_coproduct_injection(const Hom& f) { return edge_reflecting_injection(f) && image_closed(f); }

bool no_new_edges_on_image(const Hom& f) {
  const auto in = image_mask(f);
  const auto images = image_edges(f);
  for (const auto& e : f.cod().edges())
    if (e.first != e.second && in[e.first] && in[e.second] && !std::binary_search(images.begin(), images.end(), e))
      return false;
  return true;
}

bool no_new_loops_on_image(const Hom& f) {
  const auto in = image_mask(f);
  std::vector<bool> looped_preimage(f.cod().vertex_count(), false);
  for (int v = 0; v < f.dom().vertex_count(); ++v)
    if (f.dom().has_loop(v)) looped_preimage[f(v)] = true;
  for (int w = 0; w < f.cod().vertex_count(); ++w)
    if (in[w] && f.cod().has_loop(w) && !looped_preimage[w]) return false;
  return true;
}

}  // namespace graphmodel
