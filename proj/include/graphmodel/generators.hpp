#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphmodel/arrow_index.hpp"
#include "graphmodel/hom.hpp"
#include "graphmodel/lifting.hpp"

namespace graphmodel {

/// Which lifting class a generator cuts out: Left means the maps lifting on
/// the left of it, Right the maps lifting on its right.
enum class LiftingSide { Left, Right };

enum class GeneratorStatus { DerivedCandidate, ReconstructedBySearch };

struct LiftingGenerator {
  std::string name;
  Hom morphism;
  LiftingSide side;
  GeneratorStatus status;
};

/// f_ir, f_il, f_sr, f_sl, f_er, f_el1, f_el2, s_comp, i_comp, i_edge,
/// s_edge, r_isol, r_edge, r_loop, in that order. The reconstructed ones are
/// searched for once, on first use, among the morphisms between graphs with
/// at most three vertices, then among morphisms from four-vertex graphs
/// into them; throws GeneratorFalsified if a search comes up empty.
const std::vector<LiftingGenerator>& lifting_generators();
const LiftingGenerator& lifting_generator(std::string_view name);

/// Whether f lies in the lifting class of the generator.
bool in_lifting_class(const LiftingGenerator& gen, const Hom& f, HomCache* cache = nullptr);

std::string_view to_string(GeneratorStatus s);
std::string_view to_string(LiftingSide s);

struct CharacterizationLine {
  std::string statement;
  std::size_t checked = 0;
  std::size_t counterexamples = 0;
  /// First offending morphism, printed as "dom -> cod : m ...".
  std::optional<std::string> witness;
};

struct CharacterizationReport {
  int corpus_max_n = 0;
  std::size_t morphisms = 0;
  std::vector<CharacterizationLine> lines;
  std::size_t total_counterexamples() const;
};

/// Checks every morphism between graphs with at most corpus_max_n vertices
/// against the lifting characterizations of injective, surjective and
/// edge-surjective maps and of the component, furbished and core classes.
/// Throws GeneratorFalsified when a statement built only from derived
/// candidates has a counterexample.
CharacterizationReport verify_characterizations(int corpus_max_n);

}  // namespace graphmodel
