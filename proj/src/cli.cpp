#include "graphmodel/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <optional>

#include "graphmodel/canonical.hpp"
#include "graphmodel/cores.hpp"
#include "graphmodel/error.hpp"
#include "graphmodel/generators.hpp"
#include "graphmodel/lifting.hpp"
#include "graphmodel/model.hpp"
#include "graphmodel/text_format.hpp"
#include "graphmodel/verify.hpp"

namespace graphmodel::cli {

namespace {

const std::vector<std::string> kStructures = {"trivial1", "trivial2", "trivial3", "cc", "furbished", "core", "mk"};

GraphPtr load_graph(const std::string& path) { return share(parse_graph_file(path)); }

std::optional<DownwardClosedSet> load_set(const std::vector<std::string>& paths) {
  if (paths.empty()) return std::nullopt;
  std::vector<Graph> gens;
  for (const auto& p : paths) gens.push_back(parse_graph_file(p));
  return DownwardClosedSet(std::move(gens));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void apply_budget_from_env() {
  const char* raw = std::getenv("GRAPHMODEL_BUDGET");
  if (!raw || !*raw) return;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw CLI::ValidationError("GRAPHMODEL_BUDGET", "must be a positive integer");
  set_default_node_budget(value);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph homomorphisms, cores, lifting properties and model structures on finite graphs", "graphmodel"};
  app.require_subcommand(1);

  std::function<int()> action;

  // Shared argument slots; each subcommand binds the ones it needs.
  std::string g_path, h_path, map_path, structure, mode = "cof-afib";
  std::vector<std::string> paths, generator_paths, square_graphs;
  bool count = false, all = false;
  int n = 0, max_n = 3, samples = 200;
  std::uint64_t seed = kDefaultVerifySeed;

  auto* core_cmd = app.add_subcommand("core", "Compute the core of a graph");
  core_cmd->add_option("graph", g_path, "graph file")->required();
  core_cmd->callback([&] {
    action = [&] {
      auto result = core(load_graph(g_path));
      out << print_graph(*result.core);
      out << "# retraction " << print_hom(result.retraction);
      out << "# section " << print_hom(result.section);
      return kExitOk;
    };
  });

  auto* hom_cmd = app.add_subcommand("hom", "Search for homomorphisms G -> H");
  hom_cmd->add_option("G", g_path, "domain graph file")->required();
  hom_cmd->add_option("H", h_path, "codomain graph file")->required();
  auto* count_flag = hom_cmd->add_flag("--count", count, "print the number of homomorphisms");
  hom_cmd->add_flag("--all", all, "print every homomorphism")->excludes(count_flag);
  hom_cmd->callback([&] {
    action = [&] {
      auto g = load_graph(g_path), h = load_graph(h_path);
      if (count) {
        out << count_homs(*g, *h) << "\n";
        return kExitOk;
      }
      if (all) {
        auto homs = enumerate_homs(g, h);
        if (homs.empty()) out << "none\n";
        for (const auto& f : homs) out << print_hom(f);
        return homs.empty() ? kExitNegative : kExitOk;
      }
      auto f = find_hom(g, h);
      out << (f ? print_hom(*f) : std::string("none\n"));
      return f ? kExitOk : kExitNegative;
    };
  });

  auto* iso_cmd = app.add_subcommand("iso", "Search for an isomorphism G -> H");
  iso_cmd->add_option("G", g_path, "graph file")->required();
  iso_cmd->add_option("H", h_path, "graph file")->required();
  iso_cmd->callback([&] {
    action = [&] {
      auto g = load_graph(g_path), h = load_graph(h_path);
      auto bij = is_isomorphic(*g, *h);
      if (!bij) {
        out << "none\n";
        return kExitNegative;
      }
      out << print_hom(Hom(g, h, *bij));
      return kExitOk;
    };
  });

  auto* order_cmd = app.add_subcommand("order", "Compare G and H in the homomorphism order");
  order_cmd->add_option("G", g_path, "graph file")->required();
  order_cmd->add_option("H", h_path, "graph file")->required();
  order_cmd->callback([&] {
    action = [&] {
      out << to_string(hom_order(*load_graph(g_path), *load_graph(h_path))) << "\n";
      return kExitOk;
    };
  });

  auto* lift_cmd = app.add_subcommand("lift", "Find a diagonal filler for a commutative square");
  lift_cmd->add_option("--graphs", square_graphs, "graph files A B C D")->required()->expected(4);
  lift_cmd->add_option("maps", paths, "morphism files left (A->B), right (C->D), top (A->C), bottom (B->D)")
      ->required()
      ->expected(4);
  lift_cmd->callback([&] {
    action = [&] {
      auto a = load_graph(square_graphs[0]), b = load_graph(square_graphs[1]);
      auto c = load_graph(square_graphs[2]), d = load_graph(square_graphs[3]);
      auto s = Square::build(parse_hom_file(paths[0], a, b), parse_hom_file(paths[1], c, d),
                             parse_hom_file(paths[2], a, c), parse_hom_file(paths[3], b, d));
      auto h = find_filler(s);
      out << (h ? print_hom(*h) : std::string("none\n"));
      return h ? kExitOk : kExitNegative;
    };
  });

  auto add_structure = [&](CLI::App* cmd) {
    cmd->add_option("--structure", structure, "model structure")->required()->check(CLI::IsMember(kStructures));
    cmd->add_option("--generators", generator_paths, "generator graph files of K (structure mk)");
  };
  auto load_structure = [&] {
    if (structure == "mk" && generator_paths.empty())
      throw CLI::RequiredError("--generators (needed by --structure mk)");
    return structure_by_name(structure, load_set(generator_paths));
  };
  auto add_morphism = [&](CLI::App* cmd) {
    cmd->add_option("dom", g_path, "domain graph file")->required();
    cmd->add_option("cod", h_path, "codomain graph file")->required();
    cmd->add_option("map", map_path, "morphism file")->required();
  };
  auto load_morphism = [&] {
    auto g = load_graph(g_path), h = load_graph(h_path);
    return parse_hom_file(map_path, g, h);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a morphism in a model structure");
  add_structure(classify_cmd);
  add_morphism(classify_cmd);
  classify_cmd->callback([&] {
    action = [&] {
      auto m = load_structure();
      auto flags = classify_morphism(*m, load_morphism());
      out << "we " << yes_no(flags.we) << "\ncof " << yes_no(flags.cof) << "\nfib " << yes_no(flags.fib)
          << "\nacof " << yes_no(flags.acof) << "\nafib " << yes_no(flags.afib) << "\n";
      return kExitOk;
    };
  });

  auto* factor_cmd = app.add_subcommand("factor", "Factor a morphism in a model structure");
  add_structure(factor_cmd);
  factor_cmd->add_option("--mode", mode, "cof-afib or acof-fib")->check(CLI::IsMember({"cof-afib", "acof-fib"}));
  add_morphism(factor_cmd);
  factor_cmd->callback([&] {
    action = [&] {
      auto m = load_structure();
      auto parts = factor(*m, load_morphism(), mode == "cof-afib" ? FactorMode::CofAfib : FactorMode::AcofFib);
      out << "# middle\n" << print_graph(parts.first.cod());
      out << "# first\n" << print_hom(parts.first);
      out << "# second\n" << print_hom(parts.second);
      return kExitOk;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Check the model-structure axioms on a graph corpus");
  add_structure(verify_cmd);
  verify_cmd->add_option("--max-n", max_n, "exhaustive corpus size")->check(CLI::Range(0, 4));
  verify_cmd->add_option("--seed", seed, "seed for the sampled morphisms");
  verify_cmd->add_option("--samples", samples, "number of sampled morphisms")->check(CLI::NonNegativeNumber);
  verify_cmd->callback([&] {
    action = [&] {
      auto m = load_structure();
      VerifyOptions options;
      options.max_n = max_n;
      options.seed = seed;
      options.samples = samples;
      auto report = verify_model_axioms(*m, options);
      out << report.render();
      return report.passed() ? kExitOk : kExitNegative;
    };
  });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List graphs on n vertices up to isomorphism");
  enumerate_cmd->add_option("--n", n, "vertex count")->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->callback([&] {
    action = [&] {
      auto graphs = enumerate_graphs(n);
      out << "# count " << graphs.size() << "\n";
      for (std::size_t i = 0; i < graphs.size(); ++i) out << "# graph " << i << "\n" << print_graph(graphs[i]);
      return kExitOk;
    };
  });

  auto* subcount_cmd = app.add_subcommand("subcount", "Count the subgraphs of a graph");
  subcount_cmd->add_option("graph", g_path, "graph file")->required();
  subcount_cmd->callback([&] {
    action = [&] {
      out << count_subobjects(*load_graph(g_path)) << "\n";
      return kExitOk;
    };
  });

  auto* poset_cmd = app.add_subcommand("poset", "Order the cores of the given graphs");
  poset_cmd->add_option("graphs", paths, "graph files")->required();
  poset_cmd->callback([&] {
    action = [&] {
      std::vector<Graph> corpus;
      for (const auto& p : paths) corpus.push_back(parse_graph_file(p));
      auto poset = core_poset(corpus);
      for (const auto& e : poset.elements) out << "node " << digest(*e) << "\n";
      for (auto [i, j] : poset.relation)
        if (i != j) out << "edge " << digest(*poset.elements[i]) << " " << digest(*poset.elements[j]) << "\n";
      return kExitOk;
    };
  });

  auto* collapse_cmd = app.add_subcommand("collapse", "Apply the collapse functor of the class generated by K");
  collapse_cmd->add_option("--generators", generator_paths, "generator graph files of K")->required();
  collapse_cmd->add_option("inputs", paths, "a graph file, or dom cod map files for a morphism")->required();
  collapse_cmd->callback([&] {
    action = [&] {
      if (paths.size() != 1 && paths.size() != 3)
        throw CLI::ValidationError("inputs", "expected one graph file or dom, cod and map files");
      auto k = *load_set(generator_paths);
      if (paths.size() == 1) {
        out << print_graph(collapse_object(k, *load_graph(paths[0])));
        return kExitOk;
      }
      auto g = load_graph(paths[0]), h = load_graph(paths[1]);
      auto f = collapse_functor(k, parse_hom_file(paths[2], g, h));
      out << "# dom\n" << print_graph(f.dom()) << "# cod\n" << print_graph(f.cod()) << print_hom(f);
      return kExitOk;
    };
  });

  auto* characterize_cmd = app.add_subcommand("characterize", "Check the lifting characterizations on a corpus");
  characterize_cmd->add_option("--max-n", max_n, "corpus size")->check(CLI::Range(0, 4));
  characterize_cmd->callback([&] {
    action = [&] {
      auto report = verify_characterizations(max_n);
      for (const auto& g : lifting_generators()) {
        out << "generator " << g.name << " " << to_string(g.side) << " " << to_string(g.status) << " "
            << describe(g.morphism) << "\n";
      }
      out << "corpus max-n=" << report.corpus_max_n << " morphisms=" << report.morphisms << "\n";
      for (const auto& l : report.lines) {
        out << "check " << l.statement << " | checked=" << l.checked << " counterexamples=" << l.counterexamples
            << "\n";
        if (l.witness) out << "  witness " << *l.witness << "\n";
      }
      const bool ok = report.total_counterexamples() == 0;
      out << "result " << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? kExitOk : kExitNegative;
    };
  });

  try {
    apply_budget_from_env();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action();
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CommutativityError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CompositionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNegative;
  }
}

}  // namespace graphmodel::cli
