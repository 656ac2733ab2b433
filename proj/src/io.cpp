#include "wincx/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wincx/errors.hpp"

namespace wincx {
namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw BadParams("edge-list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

LoadedGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  bool directed = false;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream iss(s);
    if (!header_seen) {
      std::string kind;
      iss >> kind >> n;
      std::string rest;
      if (!iss || (iss >> rest)) fail(line_no, "expected `digraph <n>` or `graph <n>`");
      if (kind == "digraph") {
        directed = true;
      } else if (kind == "graph") {
        directed = false;
      } else {
        fail(line_no, "unknown kind `" + kind + "`");
      }
      if (n < 0) fail(line_no, "negative vertex count");
      header_seen = true;
      continue;
    }
    int u = 0, v = 0;
    std::string rest;
    iss >> u >> v;
    if (!iss || (iss >> rest)) fail(line_no, "expected `u v`");
    if (u < 0 || u >= n || v < 0 || v >= n) fail(line_no, "vertex id out of range");
    pairs.emplace_back(u, v);
  }
  if (!header_seen) throw BadParams("edge-list input has no header line");
  LoadedGraph out;
  if (directed) {
    out.digraph = Digraph(n, std::move(pairs));
  } else {
    out.graph = Graph(n, std::move(pairs));
  }
  return out;
}

LoadedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParams("cannot open input file `" + path + "`");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Digraph& g) {
  out << "digraph " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.arcs()) out << u << " " << v << "\n";
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_graph(std::ostream& out, const LoadedGraph& g) {
  if (g.is_digraph()) {
    write_graph(out, *g.digraph);
  } else {
    write_graph(out, *g.graph);
  }
}

std::string graph_to_string(const LoadedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

LoadedGraph load_input(const std::string& source) {
  if (source.rfind("gen:", 0) == 0) return generate_from_spec(source.substr(4));
  return read_graph_file(source);
}

}  // namespace wincx
