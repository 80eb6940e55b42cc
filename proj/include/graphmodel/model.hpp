#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphmodel/hom.hpp"

namespace graphmodel {

/// The class {G : some generator maps to G}. Membership is cached by
/// canonical form, so it is invariant under isomorphism. Copies share the cache.
class DownwardClosedSet {
 public:
  explicit DownwardClosedSet(std::vector<Graph> generators);
  const std::vector<GraphPtr>& generators() const noexcept { return generators_; }
  bool contains(const Graph& g) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::unordered_map<std::string, bool> table;
  };
  std::vector<GraphPtr> generators_;
  std::shared_ptr<Cache> cache_;
};

struct ClassificationFlags {
  bool we = false;
  bool cof = false;
  bool fib = false;
  bool acof = false;  ///< we ∧ cof
  bool afib = false;  ///< we ∧ fib
  friend bool operator==(const ClassificationFlags&, const ClassificationFlags&) = default;
};

enum class FactorMode { CofAfib, AcofFib };
std::string_view to_string(FactorMode m);

/// f = second ∘ first.
struct Factorization {
  Hom first;
  Hom second;
};

enum class StructureKind { Trivial1, Trivial2, Trivial3, ConnectedComponents, Furbished, Core, DownwardClosed };

class ModelStructure {
 public:
  virtual ~ModelStructure() = default;
  virtual std::string name() const = 0;
  virtual StructureKind kind() const = 0;
  virtual bool is_we(const Hom& f) const = 0;
  virtual bool is_cof(const Hom& f) const = 0;
  virtual bool is_fib(const Hom& f) const = 0;
  /// Unchecked factorizations; `factor` re-classifies the parts.
  virtual Factorization factor_cof_afib(const Hom& f) const = 0;
  virtual Factorization factor_acof_fib(const Hom& f) const = 0;
};

using StructurePtr = std::shared_ptr<const ModelStructure>;

/// (all, all, iso), (all, iso, all) and (iso, all, all) as (we, cof, fib),
/// named trivial1, trivial2, trivial3.
std::vector<StructurePtr> trivial_structures();

/// Weak equivalences induce a bijection on components; every map is a
/// cofibration; fibrations map each component isomorphically onto a component.
StructurePtr cc_structure();

/// Weak equivalences are isomorphisms on furbished parts; every map is a
/// fibration; cofibrations map isolated vertices bijectively onto isolated vertices.
StructurePtr furbished_structure();

/// Weak equivalences f : G -> H are the maps with a homomorphism H -> G;
/// cofibrations are the coproduct injections; fibrations are the maps
/// admitting core_fibration_witness.
StructurePtr core_structure();

/// Weak equivalences are isomorphisms and maps inside K; every map is a
/// cofibration; fibrations are isomorphisms and maps with domain outside K.
StructurePtr mk_structure(DownwardClosedSet k);

/// Some v : G×H -> G with f ∘ v = p2, for f : G -> H. It exists exactly when
/// f lifts on the right of every acyclic cofibration of the core structure.
std::optional<Hom> core_fibration_witness(const Hom& f);

/// The three steps G -> ⊔ copies of the target components -> components
/// hit by f -> H; the first is an acyclic cofibration and the other two
/// fibrations of the component structure.
struct ComponentFactorization {
  Hom acof;
  Hom identify;
  Hom add_missing;
};
ComponentFactorization component_factorization(const Hom& f);

ClassificationFlags classify_morphism(const ModelStructure& m, const Hom& f);

/// The structure's factorization, re-classified before returning; throws
/// FactorizationSoundnessError if the parts do not recompose or classify.
Factorization factor(const ModelStructure& m, const Hom& f, FactorMode mode);

/// Component count for cc; canonical furbished part, canonical core or
/// canonical collapsed graph for the other non-trivial structures.
struct HomotopyType {
  std::optional<std::size_t> components;
  std::optional<Graph> graph;
  friend bool operator==(const HomotopyType&, const HomotopyType&) = default;
};

/// Throws UnsupportedStructure for the trivial structures.
HomotopyType homotopy_type(const ModelStructure& m, const Graph& g);

/// T for members of K, g itself otherwise.
Graph collapse_object(const DownwardClosedSet& k, const Graph& g);
/// Maps into members of K become the map to T; the rest are unchanged.
Hom collapse_functor(const DownwardClosedSet& k, const Hom& f);

/// The set K of an mk structure, or nullptr for any other structure.
const DownwardClosedSet* downward_set(const ModelStructure& m);

/// trivial1, trivial2, trivial3, cc, furbished, core, or mk (which needs k).
StructurePtr structure_by_name(std::string_view name, const std::optional<DownwardClosedSet>& k = std::nullopt);

}  // namespace graphmodel
