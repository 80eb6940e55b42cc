#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphmodel/config.hpp"
#include "graphmodel/graph.hpp"

namespace graphmodel {

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// A graph homomorphism: a vertex map carrying every edge of the domain to
/// an edge of the codomain. Domain and codomain are shared, immutable graphs.
class Hom {
 public:
  /// Validates the map; throws InvalidInput naming the offending vertex or edge.
  Hom(GraphPtr dom, GraphPtr cod, std::vector<Vertex> map);
  Hom(const Graph& dom, const Graph& cod, std::vector<Vertex> map)
      : Hom(share(dom), share(cod), std::move(map)) {}

  /// Skips validation; for maps the caller has already proven to be homomorphisms.
  static Hom trusted(GraphPtr dom, GraphPtr cod, std::vector<Vertex> map);

  const Graph& dom() const noexcept { return *dom_; }
  const Graph& cod() const noexcept { return *cod_; }
  const GraphPtr& dom_ptr() const noexcept { return dom_; }
  const GraphPtr& cod_ptr() const noexcept { return cod_; }
  const std::vector<Vertex>& map() const noexcept { return map_; }
  Vertex operator()(Vertex v) const noexcept { return map_[v]; }

  friend bool operator==(const Hom& a, const Hom& b) {
    return a.map_ == b.map_ && (a.dom_ == b.dom_ || *a.dom_ == *b.dom_) &&
           (a.cod_ == b.cod_ || *a.cod_ == *b.cod_);
  }

 private:
  Hom() = default;
  GraphPtr dom_;
  GraphPtr cod_;
  std::vector<Vertex> map_;
};

bool same_graph(const GraphPtr& a, const GraphPtr& b);

/// g ∘ f; throws CompositionError unless cod(f) equals dom(g).
Hom compose(const Hom& g, const Hom& f);
Hom identity(const Graph& g);
Hom identity(const GraphPtr& g);

/// Extra conditions for a homomorphism search G -> H.
struct HomConstraints {
  /// Either empty or one entry per vertex of G.
  std::vector<std::optional<Vertex>> fixed;
  /// (g, t): the result r must satisfy g ∘ r = t, with g : H -> X and t : G -> X.
  std::optional<std::pair<Hom, Hom>> post_compose;
};

struct SearchOptions {
  std::uint64_t node_budget = default_node_budget();
};

/// The first homomorphism found by most-constrained-vertex-first
/// backtracking with forward checking (ties broken by vertex index, values
/// tried in increasing order), or nullopt. Throws InvalidInput on malformed
/// constraints and BudgetExceeded past the node budget.
std::optional<Hom> find_hom(const Graph& g, const Graph& h, const HomConstraints& c = {},
                            const SearchOptions& options = {});
std::optional<Hom> find_hom(const GraphPtr& g, const GraphPtr& h, const HomConstraints& c = {},
                            const SearchOptions& options = {});

/// Every homomorphism satisfying the constraints, sorted by vertex map.
std::vector<Hom> enumerate_homs(const GraphPtr& g, const GraphPtr& h, const HomConstraints& c = {},
                                const SearchOptions& options = {});
std::vector<Hom> enumerate_homs(const Graph& g, const Graph& h, const HomConstraints& c = {},
                                const SearchOptions& options = {});

std::uint64_t count_homs(const Graph& g, const Graph& h, const HomConstraints& c = {},
                         const SearchOptions& options = {});

bool hom_exists(const Graph& g, const Graph& h, const SearchOptions& options = {});

struct HomFlags {
  bool injective = false;
  bool surjective = false;
  bool edge_surjective = false;
  bool retraction = false;
  bool section = false;
  bool isomorphism = false;
};

HomFlags classify_hom(const Hom& f, const SearchOptions& options = {});

bool is_injective(const Hom& f);
bool is_surjective(const Hom& f);
/// Every edge of the codomain, loops included, is the image of an edge.
bool is_edge_surjective(const Hom& f);
/// Bijective on vertices and reflecting edges.
bool is_isomorphism(const Hom& f);
/// Some s with f ∘ s = identity of cod(f).
std::optional<Hom> find_section_of(const Hom& f, const SearchOptions& options = {});
/// Some r with r ∘ f = identity of dom(f).
std::optional<Hom> find_retraction_of(const Hom& f, const SearchOptions& options = {});
bool is_retraction(const Hom& f, const SearchOptions& options = {});
bool is_section(const Hom& f, const SearchOptions& options = {});

/// Inverse of an isomorphism; throws InvalidInput otherwise.
Hom inverse(const Hom& f);

/// The unique map to the terminal graph T.
Hom to_terminal(const GraphPtr& g);
/// The unique map from the empty graph.
Hom from_initial(const GraphPtr& g);

}  // namespace graphmodel
