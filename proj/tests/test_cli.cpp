#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphmodel/cli.hpp"
#include "graphmodel/graph.hpp"
#include "graphmodel/text_format.hpp"

using namespace graphmodel;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("graphmodel_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string graph(const std::string& name, const Graph& g) const { return write(name, print_graph(g)); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("cli basics") {
  Workspace ws;
  const auto k3 = ws.graph("k3.g", named::complete(3));
  const auto c5 = ws.graph("c5.g", named::cycle(5));
  const auto c6 = ws.graph("c6.g", named::cycle(6));
  const auto t = ws.write("t.g", "n 1\ne 0 0\n");
  const auto e = ws.graph("e.g", named::edge());

  auto r = run({"subcount", k3});
  CHECK(r.code == 0);
  CHECK(r.out == "18\n");

  r = run({"hom", k3, c5});
  CHECK(r.code == 1);
  CHECK(r.out == "none\n");

  r = run({"hom", c5, k3});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("m ", 0) == 0);

  r = run({"hom", e, t, "--count"});
  CHECK(r.out == "1\n");
  r = run({"hom", e, e, "--all"});
  CHECK(r.out == "m 0 1\nm 1 0\n");
  CHECK(run({"hom", e, e, "--all", "--count"}).code == 2);

  r = run({"core", c6});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n 2\ne 0 1\n# retraction m ", 0) == 0);

  CHECK(run({"order", c5, k3}).out == "greater\n");
  CHECK(run({"iso", c5, k3}).code == 1);
  CHECK(run({"iso", c5, c5}).code == 0);

  r = run({"enumerate", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# count 6\n", 0) == 0);

  r = run({"poset", c6, e, t});
  CHECK(r.out == "node 1:0-0\nnode 2:0-1\nedge 2:0-1 1:0-0\n");
}

TEST_CASE("cli errors") {
  Workspace ws;
  const auto bad = ws.write("bad.g", "n 2\ne 0 2\n");
  const auto e = ws.graph("e.g", named::edge());
  const auto p = ws.graph("p.g", named::point());
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"subcount"}).code == 2);
  CHECK(run({"subcount", bad}).code == 3);
  CHECK(run({"subcount", ws.write("none.g", "") + ".missing"}).code == 3);
  CHECK(run({"verify", "--structure", "nope"}).code == 2);
  CHECK(run({"verify", "--structure", "mk"}).code == 2);
  const auto m = ws.write("m.txt", "m 0 0\n");
  CHECK(run({"classify", "--structure", "core", e, p, m}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli budget override") {
  Workspace ws;
  const auto g = ws.graph("g.g", named::grotzsch());
  const auto k3 = ws.graph("k3.g", named::complete(3));
  ::setenv("GRAPHMODEL_BUDGET", "5", 1);
  const auto r = run({"hom", g, k3});
  ::setenv("GRAPHMODEL_BUDGET", "abc", 1);
  const auto u = run({"hom", g, k3});
  ::unsetenv("GRAPHMODEL_BUDGET");
  set_default_node_budget(kDefaultNodeBudget);
  CHECK(r.code == 4);
  CHECK(u.code == 2);
  CHECK(run({"hom", g, k3}).code == 1);
}

TEST_CASE("cli structures") {
  Workspace ws;
  const auto c6 = ws.graph("c6.g", named::cycle(6));
  const auto e = ws.graph("e.g", named::edge());
  const auto k3 = ws.graph("k3.g", named::complete(3));
  const auto t = ws.write("t.g", "n 1\ne 0 0\n");
  const auto m = ws.write("m.txt", "m 0 1 0 1 0 1\n");

  auto r = run({"classify", "--structure", "core", c6, e, m});
  CHECK(r.code == 0);
  CHECK(r.out == "we yes\ncof no\nfib yes\nacof no\nafib yes\n");

  r = run({"factor", "--structure", "cc", "--mode", "cof-afib", c6, e, m});
  CHECK(r.code == 0);
  CHECK(r.out == "# middle\nn 2\ne 0 1\n# first\nm 0 1 0 1 0 1\n# second\nm 0 1\n");
  CHECK(run({"factor", "--structure", "cc", "--mode", "sideways", c6, e, m}).code == 2);

  r = run({"verify", "--structure", "core", "--max-n", "2", "--samples", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result PASS") != std::string::npos);

  r = run({"collapse", "--generators", k3, "--", k3});
  CHECK(r.out == "n 1\ne 0 0\n");
  r = run({"collapse", "--generators", k3, "--", e});
  CHECK(r.out == "n 2\ne 0 1\n");
  const auto mt = ws.write("mt.txt", "m 0 0 0\n");
  r = run({"collapse", "--generators", k3, "--", k3, t, mt});
  CHECK(r.code == 0);
  CHECK(r.out == "# dom\nn 1\ne 0 0\n# cod\nn 1\ne 0 0\nm 0\n");

  r = run({"classify", "--structure", "mk", "--generators", k3, "--", k3, t, mt});
  CHECK(r.out.rfind("we yes\n", 0) == 0);
}

TEST_CASE("cli lift") {
  Workspace ws;
  const auto pp = ws.graph("pp.g", named::discrete(2));
  const auto p = ws.graph("p.g", named::point());
  const auto o = ws.graph("o.g", named::omega2());
  const auto t = ws.write("t.g", "n 1\ne 0 0\n");
  const auto left = ws.write("left.m", "m 0 0\n");
  const auto right = ws.write("right.m", "m 0 0\n");
  const auto top_split = ws.write("top1.m", "m 0 1\n");
  const auto top_same = ws.write("top2.m", "m 1 1\n");
  const auto bottom = ws.write("bottom.m", "m 0\n");
  auto r = run({"lift", "--graphs", pp, p, o, t, left, right, top_split, bottom});
  CHECK(r.code == 1);
  CHECK(r.out == "none\n");
  r = run({"lift", "--graphs", pp, p, o, t, left, right, top_same, bottom});
  CHECK(r.code == 0);
  CHECK(r.out == "m 1\n");
  const auto id_o = ws.write("ido.m", "m 0 1\n");
  CHECK(run({"lift", "--graphs", pp, p, o, o, left, id_o, top_split, ws.write("b.m", "m 0\n")}).code == 3);
}

TEST_CASE("cli characterize") {
  const auto r = run({"characterize", "--max-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("generator f_ir rlp derived-candidate") != std::string::npos);
  CHECK(r.out.find("result PASS") != std::string::npos);
}
