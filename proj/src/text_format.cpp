#include "graphmodel/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "graphmodel/error.hpp"

namespace graphmodel {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

int to_int(std::string_view token, int line) {
  int value = 0;
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc() || ptr != last) throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing 'n <count>' line");
  const auto& head = lines.front();
  if (head.tokens[0] != "n" || head.tokens.size() != 2) throw ParseError(head.number, "expected 'n <count>'");
  const int n = to_int(head.tokens[1], head.number);
  if (n < 0) throw ParseError(head.number, "vertex count must be non-negative");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "e" || line.tokens.size() != 3) throw ParseError(line.number, "expected 'e <u> <v>'");
    const int u = to_int(line.tokens[1], line.number);
    const int v = to_int(line.tokens[2], line.number);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line.number, "edge endpoint outside 0.." + std::to_string(n - 1));
    }
    edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

Graph parse_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

Hom parse_hom(std::string_view text, const GraphPtr& dom, const GraphPtr& cod) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(lines.empty() ? 0 : lines[1].number, "expected exactly one 'm' line");
  const auto& line = lines.front();
  if (line.tokens[0] != "m") throw ParseError(line.number, "expected 'm <v0> ... <v_{n-1}>'");
  std::vector<Vertex> map;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) map.push_back(to_int(line.tokens[i], line.number));
  try {
    return Hom(dom, cod, std::move(map));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(line.number, e.what());
  }
}

Hom parse_hom_file(const std::string& path, const GraphPtr& dom, const GraphPtr& cod) {
  return parse_hom(read_file(path), dom, cod);
}

std::string print_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string print_hom(const Hom& f) {
  std::string out = "m";
  for (Vertex w : f.map()) out += " " + std::to_string(w);
  return out + "\n";
}

std::string digest(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

std::string describe(const Hom& f) {
  std::string out = digest(f.dom()) + " -> " + digest(f.cod()) + " : " + print_hom(f);
  out.pop_back();
  return out;
}

}  // namespace graphmodel
