#include "wincx/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "wincx/errors.hpp"
#include "wincx/util.hpp"

namespace wincx {

std::string dist_to_string(Dist d) {
  return d == kInfDist ? "inf" : std::to_string(d);
}

Dist dist_from_string(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return kInfDist;
  Dist v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == kInfDist)
    throw BadParams("bad distance value: " + s);
  return v;
}

namespace {

void check_pairs(int n, const std::vector<std::pair<int, int>>& ps, const char* what) {
  for (auto [u, v] : ps) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw BadParams(std::string(what) + " endpoint out of range");
    if (u == v) throw BadParams(std::string(what) + " forms a self-loop");
  }
}

}  // namespace

Digraph::Digraph(int vertex_count, std::vector<std::pair<int, int>> arcs,
                 std::vector<std::string> labels)
    : n_(vertex_count), arcs_(std::move(arcs)), labels_(std::move(labels)) {
  if (n_ < 0) throw BadParams("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw BadParams("label count does not match vertex count");
  check_pairs(n_, arcs_, "arc");
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  out_.assign(static_cast<std::size_t>(n_), {});
  in_.assign(static_cast<std::size_t>(n_), {});
  for (auto [u, v] : arcs_) {
    out_[static_cast<std::size_t>(u)].push_back(v);
    in_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : in_) std::sort(a.begin(), a.end());
}

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : n_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ < 0) throw BadParams("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw BadParams("label count does not match vertex count");
  check_pairs(n_, edges_, "edge");
  for (auto& [u, v] : edges_)
    if (u > v) std::swap(u, v);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

DistanceTable::DistanceTable(int n, std::vector<Dist> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 0 || values_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
    throw BadParams("distance table size mismatch");
}

Dist DistanceTable::max_finite() const {
  Dist best = 0;
  for (Dist d : values_)
    if (d != kInfDist && d > best) best = d;
  return best;
}

std::vector<Dist> DistanceTable::finite_values() const {
  std::vector<Dist> vals;
  for (Dist d : values_)
    if (d != kInfDist && d > 0) vals.push_back(d);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

Graph underlying_graph(const Digraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.arcs().size());
  for (auto [u, v] : g.arcs()) edges.emplace_back(u, v);
  return Graph(g.vertex_count(), std::move(edges), g.labels());
}

Digraph full_preimage(const Graph& g) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(2 * g.edges().size());
  for (auto [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph(g.vertex_count(), std::move(arcs), g.labels());
}

namespace {

// One directed BFS sweep from src over the supplied adjacency accessor.
template <class Adj>
void bfs(int n, int src, const Adj& adj, std::vector<Dist>& dist) {
  dist.assign(static_cast<std::size_t>(n), kInfDist);
  dist[static_cast<std::size_t>(src)] = 0;
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    Dist du = dist[static_cast<std::size_t>(u)];
    for (int v : adj(u)) {
      if (dist[static_cast<std::size_t>(v)] == kInfDist) {
        dist[static_cast<std::size_t>(v)] = du + 1;
        q.push_back(v);
      }
    }
  }
}

}  // namespace

DistanceTable distance_table(const Digraph& g, int jobs) {
  const int n = g.vertex_count();
  std::vector<Dist> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInfDist);
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t ui) {
    const int u = static_cast<int>(ui);
    std::vector<Dist> fwd, bwd;
    bfs(n, u, [&](int x) -> const std::vector<int>& { return g.out(x); }, fwd);
    bfs(n, u, [&](int x) -> const std::vector<int>& { return g.in(x); }, bwd);
    for (int v = 0; v < n; ++v)
      values[ui * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
          std::min(fwd[static_cast<std::size_t>(v)], bwd[static_cast<std::size_t>(v)]);
  });
  return DistanceTable(n, std::move(values));
}

DistanceTable directed_distance_table(const Digraph& g, int jobs) {
  const int n = g.vertex_count();
  std::vector<Dist> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInfDist);
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t ui) {
    std::vector<Dist> fwd;
    bfs(n, static_cast<int>(ui), [&](int x) -> const std::vector<int>& { return g.out(x); }, fwd);
    std::copy(fwd.begin(), fwd.end(), values.begin() + ui * static_cast<std::size_t>(n));
  });
  return DistanceTable(n, std::move(values));
}

DistanceTable distance_table(const Graph& g, int jobs) {
  const int n = g.vertex_count();
  std::vector<Dist> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kInfDist);
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t ui) {
    const int u = static_cast<int>(ui);
    std::vector<Dist> d;
    bfs(n, u, [&](int x) -> const std::vector<int>& { return g.neighbors(x); }, d);
    for (int v = 0; v < n; ++v)
      values[ui * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
          d[static_cast<std::size_t>(v)];
  });
  return DistanceTable(n, std::move(values));
}

}  // namespace wincx
