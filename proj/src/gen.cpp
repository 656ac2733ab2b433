#include "wincx/gen.hpp"

#include <charconv>
#include <map>

#include "wincx/errors.hpp"

namespace wincx {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw BadParams(msg);
}

}  // namespace

Digraph make_line_digraph(int count) {
  require(count >= 1, "line_digraph: n must be >= 1");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i + 1 < count; ++i) arcs.emplace_back(i, i + 1);
  return Digraph(count, std::move(arcs));
}

Graph make_line_graph(int count) {
  require(count >= 1, "line_graph: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < count; ++i) edges.emplace_back(i, i + 1);
  return Graph(count, std::move(edges));
}

Digraph make_cycle_digraph(int r) {
  require(r >= 2, "cycle_digraph: r must be >= 2");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < r; ++i) arcs.emplace_back(i, (i + 1) % r);
  return Digraph(r, std::move(arcs));
}

Graph make_cycle_graph(int r) {
  require(r >= 3, "cycle_graph: r must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i) edges.emplace_back(i, (i + 1) % r);
  return Graph(r, std::move(edges));
}

Digraph make_zigzag(int count) {
  require(count >= 1, "zigzag: n must be >= 1");
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < count; i += 2) {
    if (i - 1 >= 0) arcs.emplace_back(i, i - 1);
    if (i + 1 < count) arcs.emplace_back(i, i + 1);
  }
  return Digraph(count, std::move(arcs));
}

Digraph make_segment(int count) {
  require(count >= 1, "segment: n must be >= 1");
  return make_line_digraph(count);
}

std::vector<int> lattice_coords(int dims, int extent, int id) {
  std::vector<int> c(static_cast<std::size_t>(dims));
  for (int i = dims - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = id % extent;
    id /= extent;
  }
  return c;
}

int lattice_id(int extent, const std::vector<int>& coords) {
  int id = 0;
  for (int c : coords) id = id * extent + c;
  return id;
}

namespace {

long long lattice_size(int dims, int extent) {
  long long total = 1;
  for (int i = 0; i < dims; ++i) {
    total *= extent;
    require(total <= 1'000'000, "lattice: too many vertices");
  }
  return total;
}

std::vector<std::pair<int, int>> lattice_arcs(int dims, int extent) {
  const long long total = lattice_size(dims, extent);
  std::vector<std::pair<int, int>> arcs;
  for (int id = 0; id < total; ++id) {
    auto c = lattice_coords(dims, extent, id);
    for (int axis = 0; axis < dims; ++axis) {
      if (c[static_cast<std::size_t>(axis)] + 1 < extent) {
        auto c2 = c;
        ++c2[static_cast<std::size_t>(axis)];
        arcs.emplace_back(id, lattice_id(extent, c2));
      }
    }
  }
  return arcs;
}

}  // namespace

Digraph make_lattice_digraph(int dims, int extent) {
  require(dims >= 1, "lattice_digraph: l must be >= 1");
  require(extent >= 1, "lattice_digraph: w must be >= 1");
  auto arcs = lattice_arcs(dims, extent);
  return Digraph(static_cast<int>(lattice_size(dims, extent)), std::move(arcs));
}

Graph make_lattice_graph(int dims, int extent) {
  require(dims >= 1, "lattice_graph: l must be >= 1");
  require(extent >= 1, "lattice_graph: w must be >= 1");
  auto arcs = lattice_arcs(dims, extent);
  return Graph(static_cast<int>(lattice_size(dims, extent)), std::move(arcs));
}

Graph make_complete_graph(int count) {
  require(count >= 1, "complete_graph: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < count; ++u)
    for (int v = u + 1; v < count; ++v) edges.emplace_back(u, v);
  return Graph(count, std::move(edges));
}

LoadedGraph generate_from_spec(const std::string& spec) {
  // Accept "kind:key=value,..." and "kind,key=value,...".
  std::string kind;
  std::map<std::string, int> params;
  std::size_t start = 0;
  {
    std::size_t colon = spec.find(':');
    std::size_t comma = spec.find(',');
    std::size_t cut = std::min(colon, comma);
    kind = spec.substr(0, cut);
    start = cut == std::string::npos ? spec.size() : cut + 1;
  }
  while (start < spec.size()) {
    std::size_t next = spec.find(',', start);
    std::string item = spec.substr(start, next == std::string::npos ? std::string::npos : next - start);
    start = next == std::string::npos ? spec.size() : next + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    require(eq != std::string::npos, "generator parameter missing '=': " + item);
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
    require(ec == std::errc{} && ptr == val.data() + val.size(),
            "generator parameter not an integer: " + item);
    params[key] = value;
  }
  auto get = [&](const std::string& key, int fallback, bool required_key) {
    auto it = params.find(key);
    if (it == params.end()) {
      require(!required_key, "generator " + kind + " requires parameter " + key);
      return fallback;
    }
    return it->second;
  };

  LoadedGraph out;
  if (kind == "line_digraph") out.digraph = make_line_digraph(get("n", 0, true));
  else if (kind == "line_graph") out.graph = make_line_graph(get("n", 0, true));
  else if (kind == "cycle_digraph") out.digraph = make_cycle_digraph(get("r", 0, true));
  else if (kind == "cycle_graph") out.graph = make_cycle_graph(get("r", 0, true));
  else if (kind == "zigzag") out.digraph = make_zigzag(get("n", 0, true));
  else if (kind == "segment") out.digraph = make_segment(get("n", 2, false));
  else if (kind == "lattice_digraph") out.digraph = make_lattice_digraph(get("l", 0, true), get("w", 0, true));
  else if (kind == "lattice_graph") out.graph = make_lattice_graph(get("l", 0, true), get("w", 0, true));
  else if (kind == "complete_graph") out.graph = make_complete_graph(get("n", 0, true));
  else throw BadParams("unknown generator kind: " + kind);
  return out;
}

}  // namespace wincx
