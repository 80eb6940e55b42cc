#include "graphmodel/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "graphmodel/canonical.hpp"
#include "graphmodel/error.hpp"
#include "graphmodel/predicates.hpp"
#include "graphmodel/text_format.hpp"

namespace graphmodel {

namespace {

using Predicate = std::function<bool(const Hom&)>;

constexpr int kReconstructionCorpus = 3;

LiftingGenerator shipped(std::string name, Graph dom, Graph cod, std::vector<Vertex> map, LiftingSide side) {
  return {std::move(name), Hom(dom, cod, std::move(map)), side, GeneratorStatus::DerivedCandidate};
}

// What a reconstructed generator must cut out on the corpus: its class lies
// between `lower` and `upper`, and together with the earlier `partners` it
// gives exactly `joint`.
struct Target {
  std::string name;
  LiftingSide side;
  Predicate lower;
  Predicate upper;
  Predicate admissible;
  std::vector<std::string> partners;
  Predicate joint;
};

bool member(const MorphismIndex& index, LiftingSide side, int gen, int f) {
  return side == LiftingSide::Left ? index.lifts(f, gen) : index.lifts(gen, f);
}

// Membership of corpus arrow f in the class of gen, through the index when
// gen is a corpus arrow and by direct lifting otherwise.
std::function<bool(int)> membership(const MorphismIndex& index, const LiftingGenerator& gen, HomCache& cache) {
  if (auto located = index.locate(gen.morphism)) {
    const int id = located->id;
    return [&index, side = gen.side, id](int f) { return member(index, side, id, f); };
  }
  return [&index, &gen, &cache](int f) { return in_lifting_class(gen, index.arrow(f), &cache); };
}

LiftingGenerator reconstruct(const MorphismIndex& index, const Target& target,
                             const std::vector<LiftingGenerator>& known, HomCache& cache) {
  const int arrows = index.arrow_count();
  std::vector<char> lower(arrows), upper(arrows), joint(arrows, 1), partners(arrows, 1);
  for (int f = 0; f < arrows; ++f) {
    lower[f] = target.lower(index.arrow(f));
    upper[f] = target.upper(index.arrow(f));
    if (target.joint) joint[f] = target.joint(index.arrow(f));
  }
  for (const auto& name : target.partners) {
    auto it = std::find_if(known.begin(), known.end(), [&](const LiftingGenerator& g) { return g.name == name; });
    const auto is_member = membership(index, *it, cache);
    for (int f = 0; f < arrows; ++f)
      if (partners[f] && !is_member(f)) partners[f] = 0;
  }
  auto matches = [&](const std::function<bool(int)>& is_member) {
    for (int f = 0; f < arrows; ++f) {
      const bool m = is_member(f);
      if (lower[f] && !m) return false;
      if (m && !upper[f]) return false;
      if (target.joint && (m && partners[f]) != static_cast<bool>(joint[f])) return false;
    }
    return true;
  };

  std::vector<int> order(arrows);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return index.arrow(a).dom().vertex_count() + index.arrow(a).cod().vertex_count() <
           index.arrow(b).dom().vertex_count() + index.arrow(b).cod().vertex_count();
  });
  for (int cand : order) {
    if (!target.admissible(index.arrow(cand))) continue;
    if (matches([&](int f) { return member(index, target.side, cand, f); }))
      return {target.name, index.arrow(cand), target.side, GeneratorStatus::ReconstructedBySearch};
  }

  // Fallback: domains one vertex larger than the corpus, codomains in it.
  const int n = kReconstructionCorpus;
  for (const auto& dom : enumerate_graphs(n + 1)) {
    for (int c = 0; c < index.object_count(); ++c) {
      for (const auto& h : enumerate_homs(share(dom), index.object(c))) {
        if (!target.admissible(h)) continue;
        LiftingGenerator cand{target.name, h, target.side, GeneratorStatus::ReconstructedBySearch};
        if (matches([&](int f) { return in_lifting_class(cand, index.arrow(f), &cache); })) return cand;
      }
    }
  }
  throw GeneratorFalsified("no morphism from a graph with at most " + std::to_string(n + 1) +
                           " vertices has the lifting class required of " + target.name);
}

std::vector<LiftingGenerator> build_generators() {
  using named::edge;
  using named::empty;
  using named::loop;
  using named::omega2;
  using named::point;
  std::vector<LiftingGenerator> out;
  out.push_back(shipped("f_ir", named::discrete(2), point(), {0, 0}, LiftingSide::Right));
  out.push_back(shipped("f_il", omega2(), loop(), {0, 0}, LiftingSide::Left));
  out.push_back(shipped("f_sr", empty(), point(), {}, LiftingSide::Right));
  out.push_back(shipped("f_sl", loop(), omega2(), {0}, LiftingSide::Left));
  out.push_back(shipped("f_er", empty(), edge(), {}, LiftingSide::Right));

  const auto index = MorphismIndex::corpus(kReconstructionCorpus);
  const Predicate any = [](const Hom&) { return true; };
  const auto retraction = [](const Hom& f) { return is_retraction(f); };
  const std::vector<Target> targets = {
      {"f_el1", LiftingSide::Left, non_loop_edge_surjective, non_loop_edge_surjective, any, {}, {}},
      {"f_el2", LiftingSide::Left, is_edge_surjective, loops_covered, any, {"f_el1"}, is_edge_surjective},
      {"s_comp", LiftingSide::Left, components_surjective, components_surjective, componentwise_isomorphism, {}, {}},
      {"i_comp", LiftingSide::Left, components_injective, components_injective, componentwise_isomorphism,
       {"s_comp"}, components_bijective},
      {"i_edge", LiftingSide::Right, injective_on_furbished, injective_on_furbished, isolated_bijection, {}, {}},
      {"s_edge", LiftingSide::Right, is_edge_surjective, is_edge_surjective, isolated_bijection, {"i_edge"},
       furbished_isomorphism},
      {"r_isol", LiftingSide::Left, is_coproduct_injection, image_closed, retraction, {}, {}},
      {"r_edge", LiftingSide::Left, is_coproduct_injection, no_new_edges_on_image, retraction, {}, {}},
      {"r_loop", LiftingSide::Left, is_coproduct_injection, no_new_loops_on_image, retraction,
       {"f_il", "r_isol", "r_edge"}, is_coproduct_injection},
  };
  HomCache cache;
  for (const auto& t : targets) out.push_back(reconstruct(*index, t, out, cache));
  return out;
}

}  // namespace

const std::vector<LiftingGenerator>& lifting_generators() {
  static const std::vector<LiftingGenerator> generators = build_generators();
  return generators;
}

const LiftingGenerator& lifting_generator(std::string_view name) {
  for (const auto& g : lifting_generators())
    if (g.name == name) return g;
  throw InvalidInput("unknown lifting generator " + std::string(name));
}

bool in_lifting_class(const LiftingGenerator& gen, const Hom& f, HomCache* cache) {
  return gen.side == LiftingSide::Left ? lifts_left_of(f, gen.morphism, cache) : lifts_left_of(gen.morphism, f, cache);
}

std::string_view to_string(GeneratorStatus s) {
  return s == GeneratorStatus::DerivedCandidate ? "derived-candidate" : "reconstructed-by-search";
}

std::string_view to_string(LiftingSide s) { return s == LiftingSide::Left ? "llp" : "rlp"; }

std::size_t CharacterizationReport::total_counterexamples() const {
  std::size_t total = 0;
  for (const auto& l : lines) total += l.counterexamples;
  return total;
}

CharacterizationReport verify_characterizations(int corpus_max_n) {
  const auto& gens = lifting_generators();
  const auto index = MorphismIndex::corpus(corpus_max_n);
  HomCache cache;

  // Membership of every corpus arrow in every generator's class.
  const int arrows = index->arrow_count();
  std::vector<std::vector<char>> in(gens.size(), std::vector<char>(arrows));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto is_member = membership(*index, gens[g], cache);
    for (int f = 0; f < arrows; ++f) in[g][f] = is_member(f);
  }
  auto gen = [&](const char* name) {
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens[g].name == name) return g;
    throw InvalidInput(std::string("unknown lifting generator ") + name);
  };
  auto all_in = [&](std::initializer_list<const char*> names, int f) {
    for (const char* n : names)
      if (!in[gen(n)][f]) return false;
    return true;
  };

  struct Statement {
    std::string text;
    std::function<bool(int)> holds;
    bool shipped_only;
  };
  auto arrow = [&](int f) -> const Hom& { return index->arrow(f); };
  const std::vector<Statement> statements = {
      {"injective <=> rlp(f_ir)", [&](int f) { return is_injective(arrow(f)) == all_in({"f_ir"}, f); }, true},
      {"injective <=> llp(f_il)", [&](int f) { return is_injective(arrow(f)) == all_in({"f_il"}, f); }, true},
      {"surjective <=> rlp(f_sr)", [&](int f) { return is_surjective(arrow(f)) == all_in({"f_sr"}, f); }, true},
      {"surjective <=> llp(f_sl)", [&](int f) { return is_surjective(arrow(f)) == all_in({"f_sl"}, f); }, true},
      {"edge-surjective <=> rlp(f_er)", [&](int f) { return is_edge_surjective(arrow(f)) == all_in({"f_er"}, f); },
       true},
      {"non-loop edge-surjective <=> llp(f_el1)",
       [&](int f) { return non_loop_edge_surjective(arrow(f)) == all_in({"f_el1"}, f); }, false},
      {"looped preimages and llp(f_el1) => llp(f_el2)",
       [&](int f) { return !(loops_have_looped_preimage(arrow(f)) && all_in({"f_el1"}, f)) || all_in({"f_el2"}, f); },
       false},
      {"edge-surjective <=> llp(f_el1) and llp(f_el2)",
       [&](int f) { return is_edge_surjective(arrow(f)) == all_in({"f_el1", "f_el2"}, f); }, false},
      {"component surjection <=> llp(s_comp)",
       [&](int f) { return components_surjective(arrow(f)) == all_in({"s_comp"}, f); }, false},
      {"component injection <=> llp(i_comp)",
       [&](int f) { return components_injective(arrow(f)) == all_in({"i_comp"}, f); }, false},
      {"component bijection <=> llp(s_comp) and llp(i_comp)",
       [&](int f) { return components_bijective(arrow(f)) == all_in({"s_comp", "i_comp"}, f); }, false},
      {"injective on furbished part <=> rlp(i_edge)",
       [&](int f) { return injective_on_furbished(arrow(f)) == all_in({"i_edge"}, f); }, false},
      {"edge-surjective <=> rlp(s_edge)",
       [&](int f) { return is_edge_surjective(arrow(f)) == all_in({"s_edge"}, f); }, false},
      {"furbished isomorphism <=> rlp(i_edge) and rlp(s_edge)",
       [&](int f) { return furbished_isomorphism(arrow(f)) == all_in({"i_edge", "s_edge"}, f); }, false},
      {"coproduct injection => llp(r_isol) => image closed",
       [&](int f) {
         const bool m = all_in({"r_isol"}, f);
         return (!is_coproduct_injection(arrow(f)) || m) && (!m || image_closed(arrow(f)));
       },
       false},
      {"coproduct injection => llp(r_edge) => no new edges on image",
       [&](int f) {
         const bool m = all_in({"r_edge"}, f);
         return (!is_coproduct_injection(arrow(f)) || m) && (!m || no_new_edges_on_image(arrow(f)));
       },
       false},
      {"coproduct injection => llp(r_loop) => no new loops on image",
       [&](int f) {
         const bool m = all_in({"r_loop"}, f);
         return (!is_coproduct_injection(arrow(f)) || m) && (!m || no_new_loops_on_image(arrow(f)));
       },
       false},
      {"coproduct injection <=> llp(f_il, r_isol, r_edge, r_loop)",
       [&](int f) {
         return is_coproduct_injection(arrow(f)) == all_in({"f_il", "r_isol", "r_edge", "r_loop"}, f);
       },
       false},
  };

  CharacterizationReport report;
  report.corpus_max_n = corpus_max_n;
  report.morphisms = static_cast<std::size_t>(arrows);
  for (const auto& s : statements) {
    CharacterizationLine line{s.text, 0, 0, std::nullopt};
    for (int f = 0; f < arrows; ++f) {
      ++line.checked;
      if (s.holds(f)) continue;
      ++line.counterexamples;
      if (!line.witness) line.witness = describe(arrow(f));
    }
    if (line.counterexamples > 0 && s.shipped_only) {
      throw GeneratorFalsified(s.text + " fails at " + *line.witness);
    }
    report.lines.push_back(std::move(line));
  }
  return report;
}

}  // namespace graphmodel
