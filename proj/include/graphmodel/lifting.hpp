#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphmodel/hom.hpp"

namespace graphmodel {

/// A commutative square
///
///     A --top--> C
///     |          |
///   left       right
///     v          v
///     B --bot--> D
class Square {
 public:
  /// Throws CompositionError on mismatched endpoints and CommutativityError
  /// when right ∘ top differs from bottom ∘ left.
  static Square build(Hom left, Hom right, Hom top, Hom bottom);

  const Hom& left() const noexcept { return left_; }
  const Hom& right() const noexcept { return right_; }
  const Hom& top() const noexcept { return top_; }
  const Hom& bottom() const noexcept { return bottom_; }

 private:
  Square(Hom left, Hom right, Hom top, Hom bottom)
      : left_(std::move(left)), right_(std::move(right)), top_(std::move(top)), bottom_(std::move(bottom)) {}
  Hom left_, right_, top_, bottom_;
};

/// h : B -> C with h ∘ left = top and right ∘ h = bottom, found by a hom
/// search fixed on the image of `left` and post-composed with `right`.
std::optional<Hom> find_filler(const Square& s, const SearchOptions& options = {});

/// Memoised hom lists keyed by the exact (labelled) pair of graphs.
class HomCache {
 public:
  explicit HomCache(SearchOptions options = {}) : options_(options) {}
  std::shared_ptr<const std::vector<Hom>> homs(const GraphPtr& g, const GraphPtr& h);

 private:
  SearchOptions options_;
  std::mutex mutex_;
  std::map<std::pair<std::string, std::string>, std::shared_ptr<const std::vector<Hom>>> table_;
};

/// A square with f on the left and g on the right that has no filler.
/// Enumerates every commuting (top, bottom) pair.
std::optional<Square> lifting_counterexample(const Hom& f, const Hom& g, HomCache* cache = nullptr);

/// f lifts on the left of g: every square with f left and g right has a filler.
bool lifts_left_of(const Hom& f, const Hom& g, HomCache* cache = nullptr);
/// g lifts on the right of f; the same relation read from the other side.
inline bool lifts_right_of(const Hom& g, const Hom& f, HomCache* cache = nullptr) {
  return lifts_left_of(f, g, cache);
}

/// Columns exhibiting f : A -> B as a retract of g : C -> D in the arrow
/// category: r_top ∘ s_top = 1_A, r_bottom ∘ s_bottom = 1_B,
/// g ∘ s_top = s_bottom ∘ f and f ∘ r_top = r_bottom ∘ g.
struct RetractWitness {
  Hom s_top;
  Hom r_top;
  Hom s_bottom;
  Hom r_bottom;
};

/// All (s, r) with s : A -> C, r : C -> A and r ∘ s = 1_A, sorted by (s, r).
std::vector<std::pair<Hom, Hom>> retraction_pairs(const GraphPtr& a, const GraphPtr& c, HomCache* cache = nullptr);

std::optional<RetractWitness> retract_witness(const Hom& f, const Hom& g, HomCache* cache = nullptr);
bool is_retract_of(const Hom& f, const Hom& g, HomCache* cache = nullptr);

}  // namespace graphmodel
