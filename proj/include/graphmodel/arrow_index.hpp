#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphmodel/hom.hpp"

namespace graphmodel {

/// Every homomorphism between a fixed list of canonical graphs, numbered
/// densely. Arrows between objects a and b occupy a contiguous id range,
/// sorted by vertex map, so composition and lifting checks reduce to
/// table lookups.
class MorphismIndex {
 public:
  explicit MorphismIndex(std::vector<Graph> objects);

  /// Shared index over enumerate_graphs_up_to(max_n).
  static std::shared_ptr<const MorphismIndex> corpus(int max_n);

  int object_count() const noexcept { return static_cast<int>(objects_.size()); }
  const GraphPtr& object(int i) const { return objects_[i]; }
  std::optional<int> object_id(const Graph& g) const;

  int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }
  const Hom& arrow(int id) const { return arrows_[id]; }
  int dom(int id) const { return dom_[id]; }
  int cod(int id) const { return cod_[id]; }
  /// First id and number of arrows from a to b.
  int first(int a, int b) const { return offset_[pair(a, b)]; }
  int count(int a, int b) const { return offset_[pair(a, b) + 1] - offset_[pair(a, b)]; }
  int identity(int a) const { return identity_[a]; }

  /// Id of the arrow a -> b with the given map, or -1 if it is not a homomorphism.
  int lookup(int a, int b, std::span<const Vertex> map) const;
  int compose(int g, int f) const;

  /// f lifts on the left of g.
  bool lifts(int f, int g) const { return !counterexample(f, g); }
  /// (top, bottom) of a square with f left and g right that has no filler.
  std::optional<std::pair<int, int>> counterexample(int f, int g) const;

  /// All (s, r) with r ∘ s = identity of a, s : a -> c.
  const std::vector<std::pair<int, int>>& retraction_pairs(int a, int c) const;
  /// Distinct (f, g) such that f is a retract of g.
  const std::vector<std::pair<int, int>>& retract_diagrams() const;

  /// An arbitrary homomorphism moved onto canonical objects: the id of
  /// β ∘ f ∘ α⁻¹ where α, β relabel dom(f), cod(f) canonically.
  struct Located {
    int id;
    std::vector<Vertex> dom_relabel;
    std::vector<Vertex> cod_relabel;
  };
  std::optional<Located> locate(const Hom& f) const;

 private:
  std::size_t pair(int a, int b) const { return static_cast<std::size_t>(a) * objects_.size() + b; }
  std::uint64_t code(int b, std::span<const Vertex> map) const;
  int local(int a, int b, std::uint64_t code) const;

  std::vector<GraphPtr> objects_;
  std::vector<Hom> arrows_;
  std::vector<int> dom_, cod_;
  std::vector<int> offset_;
  std::vector<int> identity_;
  /// per object pair: code of a map -> local arrow index or -1
  std::vector<std::vector<int>> code_table_;

  mutable std::once_flag retract_once_;
  mutable std::vector<std::vector<std::pair<int, int>>> retraction_pairs_;
  mutable std::vector<std::pair<int, int>> retract_diagrams_;
  void build_retracts() const;
};

}  // namespace graphmodel
