#include "graphmodel/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "graphmodel/arrow_index.hpp"
#include "graphmodel/canonical.hpp"
#include "graphmodel/error.hpp"
#include "graphmodel/lifting.hpp"
#include "graphmodel/predicates.hpp"
#include "graphmodel/text_format.hpp"

namespace graphmodel {

bool AxiomReport::passed() const noexcept {
  for (const auto& a : axioms)
    if (!a.passed()) return false;
  return true;
}

std::string AxiomReport::render() const {
  std::ostringstream out;
  out << "structure " << structure << "\n";
  out << "corpus max-n=" << max_n << " objects=" << objects << " morphisms=" << morphisms << "\n";
  out << "sample seed=" << seed << " morphisms=" << samples << "\n";
  for (const auto& a : axioms) {
    out << "axiom " << a.name << " checked=" << a.checked << " failures=" << a.failures;
    if (a.skipped) out << " skipped=" << a.skipped;
    out << (a.passed() ? " PASS" : " FAIL") << "\n";
    if (a.witness) out << "  witness " << *a.witness << "\n";
  }
  if (sampled) out << "coverage sampled\n";
  out << "result " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

class Check {
 public:
  Check(AxiomReport& report, std::string name) : report_(report), slot_(report.axioms.size()) {
    AxiomResult a;
    a.name = std::move(name);
    report.axioms.push_back(std::move(a));
  }

  // Runs one check; `body` returns an empty string on success, else a witness.
  void run(const std::function<std::string()>& body) {
    auto& a = report_.axioms[slot_];
    try {
      std::string witness = body();
      ++a.checked;
      if (witness.empty()) return;
      ++a.failures;
      if (!a.witness) a.witness = std::move(witness);
    } catch (const BudgetExceeded&) {
      ++a.skipped;
      report_.sampled = true;
    }
  }

 private:
  AxiomReport& report_;
  std::size_t slot_;
};

std::string two_of_three_witness(const ClassificationFlags& f, const ClassificationFlags& g,
                                 const ClassificationFlags& gf, const Hom& fh, const Hom& gh) {
  const int count = f.we + g.we + gf.we;
  if (count != 2) return {};
  return "f=" + describe(fh) + " g=" + describe(gh);
}

std::string square_witness(const Hom& f, const Hom& g, const Hom& top, const Hom& bottom) {
  return "left=" + describe(f) + " right=" + describe(g) + " top=" + describe(top) + " bottom=" + describe(bottom);
}

std::string factor_witness(const ModelStructure& m, const Hom& f) {
  for (auto mode : {FactorMode::CofAfib, FactorMode::AcofFib}) {
    try {
      factor(m, f, mode);
    } catch (const FactorizationSoundnessError& e) {
      return std::string(e.what()) + " for " + describe(f);
    }
  }
  return {};
}

// Isomorphisms lie in every class; a map in all three classes lifts against
// itself and so is an isomorphism.
std::string iso_witness(const ClassificationFlags& c, const Hom& f) {
  const bool iso = is_isomorphism(f);
  const bool all = c.we && c.cof && c.fib;
  return iso == all ? std::string() : describe(f);
}

void cross_checks(AxiomReport& report, const ModelStructure& m, const MorphismIndex& index,
                  const std::vector<ClassificationFlags>& flags) {
  const int arrows = index.arrow_count();
  auto arrow = [&](int f) -> const Hom& { return index.arrow(f); };
  {
    Check c(report, "isomorphisms");
    for (int f = 0; f < arrows; ++f) c.run([&] { return iso_witness(flags[f], arrow(f)); });
  }
  switch (m.kind()) {
    case StructureKind::Core: {
      Check afib(report, "afib_is_retraction");
      for (int f = 0; f < arrows; ++f)
        afib.run([&] { return flags[f].afib == is_retraction(arrow(f)) ? std::string() : describe(arrow(f)); });
      Check acof(report, "acof_is_cof_and_section");
      for (int f = 0; f < arrows; ++f)
        acof.run([&] {
          return flags[f].acof == (flags[f].cof && is_section(arrow(f))) ? std::string() : describe(arrow(f));
        });
      Check fibrant(report, "fibrant_and_cofibrant");
      for (int a = 0; a < index.object_count(); ++a) {
        fibrant.run([&] {
          const Hom to_t = to_terminal(index.object(a));
          const Hom from_0 = from_initial(index.object(a));
          return m.is_fib(to_t) && m.is_cof(from_0) ? std::string() : digest(*index.object(a));
        });
      }
      break;
    }
    case StructureKind::ConnectedComponents: {
      Check afib(report, "afib_is_isomorphism");
      for (int f = 0; f < arrows; ++f)
        afib.run([&] { return flags[f].afib == is_isomorphism(arrow(f)) ? std::string() : describe(arrow(f)); });
      break;
    }
    case StructureKind::Furbished: {
      Check afib(report, "afib_is_furbished_injective_and_edge_surjective");
      for (int f = 0; f < arrows; ++f)
        afib.run([&] {
          const bool direct = injective_on_furbished(arrow(f)) && is_edge_surjective(arrow(f));
          return flags[f].afib == direct ? std::string() : describe(arrow(f));
        });
      // Cofibrations are exactly what lifts against the corpus acyclic fibrations.
      Check cof(report, "cof_is_llp_of_afib");
      for (int f = 0; f < arrows; ++f)
        cof.run([&] {
          bool lifts = true;
          for (int g = 0; g < arrows && lifts; ++g)
            if (flags[g].afib && !index.lifts(f, g)) lifts = false;
          return flags[f].cof == lifts ? std::string() : describe(arrow(f));
        });
      break;
    }
    case StructureKind::DownwardClosed: {
      Check afib(report, "afib_is_isomorphism");
      for (int f = 0; f < arrows; ++f)
        afib.run([&] { return flags[f].afib == is_isomorphism(arrow(f)) ? std::string() : describe(arrow(f)); });
      const DownwardClosedSet& k = *downward_set(m);
      Check down(report, "membership_downward_closed");
      for (int f = 0; f < arrows; ++f)
        down.run([&] {
          const bool ok = !k.contains(arrow(f).dom()) || k.contains(arrow(f).cod());
          return ok ? std::string() : describe(arrow(f));
        });
      break;
    }
    default:
      break;
  }
}

}  // namespace

AxiomReport verify_model_axioms(const ModelStructure& m, const VerifyOptions& options) {
  const auto index = MorphismIndex::corpus(options.max_n);
  const int arrows = index->arrow_count();
  AxiomReport report;
  report.structure = m.name();
  report.max_n = options.max_n;
  report.objects = static_cast<std::size_t>(index->object_count());
  report.morphisms = static_cast<std::size_t>(arrows);
  report.seed = options.seed;

  std::vector<ClassificationFlags> flags(arrows);
  {
    Check c(report, "classification");
    for (int f = 0; f < arrows; ++f)
      c.run([&] {
        flags[f] = classify_morphism(m, index->arrow(f));
        const auto& x = flags[f];
        return x.acof == (x.we && x.cof) && x.afib == (x.we && x.fib) ? std::string() : describe(index->arrow(f));
      });
  }

  std::vector<std::vector<int>> into(index->object_count()), out_of(index->object_count());
  for (int f = 0; f < arrows; ++f) {
    into[index->cod(f)].push_back(f);
    out_of[index->dom(f)].push_back(f);
  }
  {
    Check c(report, "two_of_three");
    for (int b = 0; b < index->object_count(); ++b)
      for (int f : into[b])
        for (int g : out_of[b])
          c.run([&] {
            const int gf = index->compose(g, f);
            return two_of_three_witness(flags[f], flags[g], flags[gf], index->arrow(f), index->arrow(g));
          });
  }
  {
    Check c(report, "lifting_cof_afib");
    Check d(report, "lifting_acof_fib");
    auto lifting = [&](std::size_t slot, bool cof_side, bool fib_side, int f, int g) {
      if (!cof_side || !fib_side) return;
      auto& a = report.axioms[slot];
      ++a.checked;
      if (auto sq = index->counterexample(f, g)) {
        ++a.failures;
        if (!a.witness)
          a.witness = square_witness(index->arrow(f), index->arrow(g), index->arrow(sq->first), index->arrow(sq->second));
      }
    };
    const std::size_t cof_slot = report.axioms.size() - 2, acof_slot = report.axioms.size() - 1;
    std::vector<int> cofs, afibs, acofs, fibs;
    for (int f = 0; f < arrows; ++f) {
      if (flags[f].cof) cofs.push_back(f);
      if (flags[f].afib) afibs.push_back(f);
      if (flags[f].acof) acofs.push_back(f);
      if (flags[f].fib) fibs.push_back(f);
    }
    for (int f : cofs)
      for (int g : afibs) lifting(cof_slot, true, true, f, g);
    for (int f : acofs)
      for (int g : fibs) lifting(acof_slot, true, true, f, g);
  }
  {
    Check c(report, "factorization");
    for (int f = 0; f < arrows; ++f) c.run([&] { return factor_witness(m, index->arrow(f)); });
  }
  {
    const auto& diagrams = index->retract_diagrams();
    const char* names[] = {"retract_we", "retract_cof", "retract_fib"};
    for (int k = 0; k < 3; ++k) {
      Check c(report, names[k]);
      for (const auto& [f, g] : diagrams)
        c.run([&, k, f = f, g = g] {
          auto pick = [k](const ClassificationFlags& x) { return k == 0 ? x.we : k == 1 ? x.cof : x.fib; };
          if (!pick(flags[g]) || pick(flags[f])) return std::string();
          return "retract " + describe(index->arrow(f)) + " of " + describe(index->arrow(g));
        });
    }
  }
  cross_checks(report, m, *index, flags);

  if (options.samples <= 0) return report;

  // Pseudo-random morphisms between larger graphs, checked against the arrows of a small corpus.
  const auto partners = MorphismIndex::corpus(options.partner_max_n);
  std::vector<ClassificationFlags> partner_flags(partners->arrow_count());
  for (int g = 0; g < partners->arrow_count(); ++g) partner_flags[g] = classify_morphism(m, partners->arrow(g));
  const auto graphs = enumerate_graphs(options.sample_n, std::max(options.sample_n, kDefaultEnumerationBudget));
  std::mt19937_64 rng(options.seed);
  std::vector<Hom> sample;
  while (static_cast<int>(sample.size()) < options.samples) {
    const auto& g = graphs[rng() % graphs.size()];
    const auto& h = graphs[rng() % graphs.size()];
    auto homs = enumerate_homs(g, h);
    if (homs.empty()) continue;
    sample.push_back(homs[rng() % homs.size()]);
  }
  report.samples = sample.size();
  HomCache cache;
  Check flags_check(report, "sample_classification");
  Check factor_check(report, "sample_factorization");
  Check lift_check(report, "sample_lifting");
  Check two_check(report, "sample_two_of_three");
  for (const Hom& f : sample) {
    ClassificationFlags cf;
    flags_check.run([&] {
      cf = classify_morphism(m, f);
      if (cf.acof != (cf.we && cf.cof) || cf.afib != (cf.we && cf.fib)) return describe(f);
      return iso_witness(cf, f);
    });
    factor_check.run([&] { return factor_witness(m, f); });
    for (int g = 0; g < partners->arrow_count(); ++g) {
      const Hom& p = partners->arrow(g);
      const auto& cg = partner_flags[g];
      auto try_square = [&](const Hom& left, const Hom& right) {
        lift_check.run([&] {
          auto sq = lifting_counterexample(left, right, &cache);
          return sq ? square_witness(left, right, sq->top(), sq->bottom()) : std::string();
        });
      };
      if ((cf.cof && cg.afib) || (cf.acof && cg.fib)) try_square(f, p);
      if ((cg.cof && cf.afib) || (cg.acof && cf.fib)) try_square(p, f);
    }
    for (int x = 0; x < partners->object_count(); ++x) {
      for (const Hom& u : *cache.homs(partners->object(x), f.dom_ptr())) {
        two_check.run([&] {
          return two_of_three_witness(classify_morphism(m, u), cf, classify_morphism(m, compose(f, u)), u, f);
        });
      }
      for (const Hom& w : *cache.homs(f.cod_ptr(), partners->object(x))) {
        two_check.run([&] {
          return two_of_three_witness(cf, classify_morphism(m, w), classify_morphism(m, compose(w, f)), f, w);
        });
      }
    }
  }
  return report;
}

}  // namespace graphmodel
