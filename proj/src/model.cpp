#include "graphmodel/model.hpp"

#include <algorithm>

#include "graphmodel/canonical.hpp"
#include "graphmodel/cores.hpp"
#include "graphmodel/error.hpp"
#include "graphmodel/limits.hpp"
#include "graphmodel/predicates.hpp"

namespace graphmodel {

DownwardClosedSet::DownwardClosedSet(std::vector<Graph> generators) : cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) generators_.push_back(share(std::move(g)));
}

bool DownwardClosedSet::contains(const Graph& g) const {
  auto key = canonical_form(g).graph.key();
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->table.find(key); it != cache_->table.end()) return it->second;
  }
  bool member = false;
  for (const auto& h : generators_) {
    if (hom_exists(*h, g)) {
      member = true;
      break;
    }
  }
  std::lock_guard lock(cache_->mutex);
  cache_->table.emplace(std::move(key), member);
  return member;
}

std::string_view to_string(FactorMode m) { return m == FactorMode::CofAfib ? "cof-afib" : "acof-fib"; }

namespace {

Factorization through_codomain(const Hom& f) { return {f, identity(f.cod_ptr())}; }
Factorization through_domain(const Hom& f) { return {identity(f.dom_ptr()), f}; }

class Trivial : public ModelStructure {
 public:
  Trivial(StructureKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  StructureKind kind() const override { return kind_; }
  bool is_we(const Hom& f) const override { return kind_ != StructureKind::Trivial3 || is_isomorphism(f); }
  bool is_cof(const Hom& f) const override { return kind_ != StructureKind::Trivial2 || is_isomorphism(f); }
  bool is_fib(const Hom& f) const override { return kind_ != StructureKind::Trivial1 || is_isomorphism(f); }
  Factorization factor_cof_afib(const Hom& f) const override {
    return kind_ == StructureKind::Trivial2 ? through_domain(f) : through_codomain(f);
  }
  Factorization factor_acof_fib(const Hom& f) const override {
    return kind_ == StructureKind::Trivial1 ? through_codomain(f) : through_domain(f);
  }

 private:
  StructureKind kind_;
  std::string name_;
};

class ComponentStructure : public ModelStructure {
 public:
  std::string name() const override { return "cc"; }
  StructureKind kind() const override { return StructureKind::ConnectedComponents; }
  bool is_we(const Hom& f) const override { return components_bijective(f); }
  bool is_cof(const Hom&) const override { return true; }
  bool is_fib(const Hom& f) const override { return componentwise_isomorphism(f); }
  Factorization factor_cof_afib(const Hom& f) const override { return through_codomain(f); }
  Factorization factor_acof_fib(const Hom& f) const override {
    auto steps = component_factorization(f);
    return {steps.acof, compose(steps.add_missing, steps.identify)};
  }
};

class FurbishedStructure : public ModelStructure {
 public:
  std::string name() const override { return "furbished"; }
  StructureKind kind() const override { return StructureKind::Furbished; }
  bool is_we(const Hom& f) const override { return furbished_isomorphism(f); }
  bool is_cof(const Hom& f) const override { return isolated_bijection(f); }
  bool is_fib(const Hom&) const override { return true; }

  // G = furb(G) + iso(G) -> furb(H) + iso(G) -> H.
  Factorization factor_cof_afib(const Hom& f) const override {
    const auto furb = furbished_part(f.cod());
    const auto isolated = isolated_vertices(f.dom());
    std::vector<int> position(f.cod().vertex_count(), -1);
    for (std::size_t i = 0; i < furb.vertices.size(); ++i) position[furb.vertices[i]] = static_cast<int>(i);
    const int offset = static_cast<int>(furb.vertices.size());
    auto middle = share(disjoint_union(furb.graph, named::discrete(static_cast<int>(isolated.size()))));

    std::vector<Vertex> first(f.dom().vertex_count());
    std::size_t next_isolated = 0;
    for (int v = 0; v < f.dom().vertex_count(); ++v) {
      if (f.dom().degree(v) > 0) first[v] = position[f(v)];
      else first[v] = offset + static_cast<int>(next_isolated++);
    }
    std::vector<Vertex> second(furb.vertices);
    for (Vertex v : isolated) second.push_back(f(v));
    return {Hom::trusted(f.dom_ptr(), middle, std::move(first)), Hom::trusted(middle, f.cod_ptr(), std::move(second))};
  }
  Factorization factor_acof_fib(const Hom& f) const override { return through_domain(f); }
};

class CoreStructure : public ModelStructure {
 public:
  std::string name() const override { return "core"; }
  StructureKind kind() const override { return StructureKind::Core; }
  bool is_we(const Hom& f) const override { return hom_exists(f.cod(), f.dom()); }
  bool is_cof(const Hom& f) const override { return is_coproduct_injection(f); }
  bool is_fib(const Hom& f) const override { return core_fibration_witness(f).has_value(); }

  // G -> G+H -> H via i1 and f+1_H.
  Factorization factor_cof_afib(const Hom& f) const override {
    auto second = copairing(f, identity(f.cod_ptr()));
    auto sum = coproduct(f.dom_ptr(), f.cod_ptr());
    return {Hom::trusted(f.dom_ptr(), second.dom_ptr(), sum.i1.map()), second};
  }
  // G -> G+G×H -> H via i1 and f+p2.
  Factorization factor_acof_fib(const Hom& f) const override {
    auto prod = product(f.dom_ptr(), f.cod_ptr());
    auto second = copairing(f, prod.p2);
    auto sum = coproduct(f.dom_ptr(), prod.graph);
    return {Hom::trusted(f.dom_ptr(), second.dom_ptr(), sum.i1.map()), second};
  }
};

class KStructure : public ModelStructure {
 public:
  explicit KStructure(DownwardClosedSet k) : k_(std::move(k)) {}
  std::string name() const override { return "mk"; }
  StructureKind kind() const override { return StructureKind::DownwardClosed; }
  bool is_we(const Hom& f) const override {
    return is_isomorphism(f) || (k_.contains(f.dom()) && k_.contains(f.cod()));
  }
  bool is_cof(const Hom&) const override { return true; }
  bool is_fib(const Hom& f) const override { return is_isomorphism(f) || !k_.contains(f.dom()); }
  Factorization factor_cof_afib(const Hom& f) const override { return through_codomain(f); }
  Factorization factor_acof_fib(const Hom& f) const override {
    return k_.contains(f.dom()) ? through_codomain(f) : through_domain(f);
  }
  const DownwardClosedSet& set() const noexcept { return k_; }

 private:
  DownwardClosedSet k_;
};

}  // namespace

std::vector<StructurePtr> trivial_structures() {
  return {std::make_shared<Trivial>(StructureKind::Trivial1, "trivial1"),
          std::make_shared<Trivial>(StructureKind::Trivial2, "trivial2"),
          std::make_shared<Trivial>(StructureKind::Trivial3, "trivial3")};
}

StructurePtr cc_structure() { return std::make_shared<ComponentStructure>(); }
StructurePtr furbished_structure() { return std::make_shared<FurbishedStructure>(); }
StructurePtr core_structure() { return std::make_shared<CoreStructure>(); }
StructurePtr mk_structure(DownwardClosedSet k) { return std::make_shared<KStructure>(std::move(k)); }

std::optional<Hom> core_fibration_witness(const Hom& f) {
  auto prod = product(f.dom_ptr(), f.cod_ptr());
  HomConstraints c;
  c.post_compose.emplace(f, prod.p2);
  return find_hom(prod.graph, f.dom_ptr(), c);
}

ComponentFactorization component_factorization(const Hom& f) {
  const auto dom = connected_components(f.dom());
  const auto cod = connected_components(f.cod());
  const auto target = component_map(f);

  // One copy of the target component per component of G, in G's order.
  std::vector<int> position(f.cod().vertex_count(), -1);
  for (const auto& block : cod.blocks)
    for (std::size_t i = 0; i < block.size(); ++i) position[block[i]] = static_cast<int>(i);
  Graph copies;
  std::vector<int> copy_offset;
  for (int c : target) {
    copy_offset.push_back(copies.vertex_count());
    copies = disjoint_union(copies, f.cod().induced(cod.blocks[c]));
  }
  auto copies_ptr = share(std::move(copies));
  std::vector<Vertex> acof(f.dom().vertex_count());
  for (std::size_t i = 0; i < dom.blocks.size(); ++i)
    for (Vertex v : dom.blocks[i]) acof[v] = copy_offset[i] + position[f(v)];

  // The components that are hit, in increasing order.
  std::vector<int> hit(target);
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  Graph image;
  std::vector<int> image_offset(cod.blocks.size(), -1);
  std::vector<Vertex> add_missing;
  for (int c : hit) {
    image_offset[c] = image.vertex_count();
    image = disjoint_union(image, f.cod().induced(cod.blocks[c]));
    add_missing.insert(add_missing.end(), cod.blocks[c].begin(), cod.blocks[c].end());
  }
  auto image_ptr = share(std::move(image));
  std::vector<Vertex> identify;
  for (int c : target)
    for (std::size_t i = 0; i < cod.blocks[c].size(); ++i) identify.push_back(image_offset[c] + static_cast<int>(i));

  return {Hom::trusted(f.dom_ptr(), copies_ptr, std::move(acof)),
          Hom::trusted(copies_ptr, image_ptr, std::move(identify)),
          Hom::trusted(image_ptr, f.cod_ptr(), std::move(add_missing))};
}

ClassificationFlags classify_morphism(const ModelStructure& m, const Hom& f) {
  ClassificationFlags flags;
  flags.we = m.is_we(f);
  flags.cof = m.is_cof(f);
  flags.fib = m.is_fib(f);
  flags.acof = flags.we && flags.cof;
  flags.afib = flags.we && flags.fib;
  return flags;
}

Factorization factor(const ModelStructure& m, const Hom& f, FactorMode mode) {
  Factorization parts = mode == FactorMode::CofAfib ? m.factor_cof_afib(f) : m.factor_acof_fib(f);
  const std::string where = m.name() + " " + std::string(to_string(mode)) + " factorization";
  if (!(compose(parts.second, parts.first) == f)) throw FactorizationSoundnessError(where + " does not recompose");
  const auto first = classify_morphism(m, parts.first);
  const auto second = classify_morphism(m, parts.second);
  const bool ok = mode == FactorMode::CofAfib ? first.cof && second.afib : first.acof && second.fib;
  if (!ok) throw FactorizationSoundnessError(where + " produced misclassified parts");
  return parts;
}

HomotopyType homotopy_type(const ModelStructure& m, const Graph& g) {
  HomotopyType out;
  switch (m.kind()) {
    case StructureKind::ConnectedComponents:
      out.components = connected_components(g).blocks.size();
      return out;
    case StructureKind::Furbished:
      out.graph = canonical_form(furbished_part(g).graph).graph;
      return out;
    case StructureKind::Core:
      out.graph = *core(g).core;
      return out;
    case StructureKind::DownwardClosed:
      out.graph = canonical_form(collapse_object(*downward_set(m), g)).graph;
      return out;
    default:
      throw UnsupportedStructure("no homotopy type for structure " + m.name());
  }
}

Graph collapse_object(const DownwardClosedSet& k, const Graph& g) { return k.contains(g) ? named::loop() : g; }

Hom collapse_functor(const DownwardClosedSet& k, const Hom& f) {
  if (!k.contains(f.cod())) return f;
  auto dom = k.contains(f.dom()) ? share(named::loop()) : f.dom_ptr();
  return to_terminal(dom);
}

const DownwardClosedSet* downward_set(const ModelStructure& m) {
  auto* k = dynamic_cast<const KStructure*>(&m);
  return k ? &k->set() : nullptr;
}

StructurePtr structure_by_name(std::string_view name, const std::optional<DownwardClosedSet>& k) {
  for (auto& s : trivial_structures())
    if (s->name() == name) return s;
  if (name == "cc") return cc_structure();
  if (name == "furbished") return furbished_structure();
  if (name == "core") return core_structure();
  if (name == "mk") {
    if (!k) throw InvalidInput("structure mk needs generator graphs");
    return mk_structure(*k);
  }
  throw InvalidInput("unknown structure " + std::string(name));
}

}  // namespace graphmodel
