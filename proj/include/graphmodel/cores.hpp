#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "graphmodel/hom.hpp"

namespace graphmodel {

struct IdempotentPower {
  Hom power;
  /// least k >= 1 with f^k ∘ f^k = f^k
  int exponent;
};

/// Throws InvalidInput unless f is an endomorphism.
IdempotentPower idempotent_power(const Hom& f);

struct CoreResult {
  GraphPtr core;   ///< canonical
  Hom retraction;  ///< G -> core
  Hom section;     ///< core -> G, with retraction ∘ section = 1
};

/// Order in which vertex deletions are tried during core search.
enum class DeletionOrder { Ascending, Descending };

/// Repeatedly finds a homomorphism onto a one-vertex-smaller induced
/// subgraph, replaces it by its idempotent power and restricts to the image.
CoreResult core(const GraphPtr& g, DeletionOrder order = DeletionOrder::Ascending);
CoreResult core(const Graph& g, DeletionOrder order = DeletionOrder::Ascending);

/// No homomorphism from g to a proper subgraph of itself.
bool is_core(const Graph& g);

enum class HomOrder { Greater, Less, Equivalent, Incomparable };
std::string_view to_string(HomOrder o);

/// Greater: g -> h only; Less: h -> g only; Equivalent: both ways.
HomOrder hom_order(const Graph& g, const Graph& h);

/// Cores of a corpus with the hom-existence relation: (i, j) is present when
/// a homomorphism elements[i] -> elements[j] exists, i.e. elements[i] >= elements[j].
struct CorePoset {
  std::vector<GraphPtr> elements;  ///< canonical, sorted by canonical_less, distinct
  std::vector<std::pair<int, int>> relation;  ///< sorted, reflexive pairs included
  bool related(int i, int j) const;
};

CorePoset core_poset(const std::vector<Graph>& corpus);

/// k pairwise hom-incomparable members of the corpus, each with chromatic
/// number at least 3, picked greedily in corpus order with backtracking.
std::optional<std::vector<Graph>> find_antichain(const std::vector<Graph>& corpus, int k);

}  // namespace graphmodel
