#include "wincx/complex.hpp"

#include <algorithm>

#include "wincx/errors.hpp"

namespace wincx {

int WindowComplex::dimension() const {
  for (int d = static_cast<int>(simplices.size()) - 1; d >= 0; --d)
    if (!simplices[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

std::size_t WindowComplex::count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(simplices.size())) return 0;
  return simplices[static_cast<std::size_t>(dim)].size();
}

bool WindowComplex::contains(const Simplex& s) const {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= graph.vertex_count()) return false;
    if (i && s[i] <= s[i - 1]) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!graph.adjacent(s[j], s[i])) return false;
  }
  return true;
}

namespace {

// Neighbors of v strictly above v; seeding expansions with these keeps every
// emitted vertex list strictly increasing and each clique visited once.
std::vector<int> forward_neighbors(const WindowGraph& wg, int v) {
  const auto& nb = wg.neighbors(v);
  return {std::upper_bound(nb.begin(), nb.end(), v), nb.end()};
}

// Depth-first clique expansion in increasing vertex order; emits every
// clique once, grouped by size, in lexicographic order per size.
void expand(const WindowGraph& wg, Simplex& cur, const std::vector<int>& cands, int dim_cap,
            WindowComplex& out) {
  const int dim = static_cast<int>(cur.size()) - 1;
  out.simplices[static_cast<std::size_t>(dim)].push_back(cur);
  if (dim == dim_cap) {
    if (!cands.empty()) out.capped = true;
    return;
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const int v = cands[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (wg.adjacent(v, cands[j])) next.push_back(cands[j]);
    cur.push_back(v);
    expand(wg, cur, next, dim_cap, out);
    cur.pop_back();
  }
}

}  // namespace

WindowComplex independence_complex(WindowGraph wg, int dim_cap) {
  if (dim_cap < 0) throw BadParams("independence complex: dim_cap must be >= 0");
  WindowComplex out{std::move(wg), dim_cap, {}, false};
  out.simplices.resize(static_cast<std::size_t>(dim_cap) + 1);
  const int n = out.graph.vertex_count();
  Simplex cur;
  for (int v = 0; v < n; ++v) {
    cur.push_back(v);
    expand(out.graph, cur, forward_neighbors(out.graph, v), dim_cap, out);
    cur.pop_back();
  }
  return out;
}

WindowComplex independence_complex(const Digraph& g, Window w, int dim_cap) {
  return independence_complex(window_graph(g, w), dim_cap);
}

WindowComplex independence_complex(const Graph& g, Window w, int dim_cap) {
  return independence_complex(window_graph(g, w), dim_cap);
}

namespace {

void expand_ordered(const WindowGraph& wg, std::vector<int>& cur, int k,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  const int n = wg.vertex_count();
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (int u : cur) {
      if (u == v || !wg.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cur.push_back(v);
    expand_ordered(wg, cur, k, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> ordered_configurations(const WindowGraph& wg, int k) {
  if (k < 1) throw BadParams("ordered configurations: k must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  expand_ordered(wg, cur, k, out);
  return out;
}

namespace {

void cap_expand(const WindowGraph& wg, const std::vector<int>& cands, Simplex& cur, int dim_cap,
                DoubleFiltration& out) {
  const int dim = static_cast<int>(cur.size()) - 1;
  SimplexRegion region{cur, kInfDist, 0};
  const auto& dist = wg.distances();
  for (std::size_t i = 0; i < cur.size(); ++i) {
    for (std::size_t j = i + 1; j < cur.size(); ++j) {
      Dist d = dist.at(cur[i], cur[j]);
      region.minpd = std::min(region.minpd, d);
      region.maxpd = std::max(region.maxpd, d);
    }
  }
  out.regions[static_cast<std::size_t>(dim)].push_back(std::move(region));
  if (dim == dim_cap) return;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const int v = cands[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (wg.adjacent(v, cands[j])) next.push_back(cands[j]);
    cur.push_back(v);
    cap_expand(wg, next, cur, dim_cap, out);
    cur.pop_back();
  }
}

}  // namespace

DoubleFiltration double_filtration(const WindowGraph& widest, int dim_cap) {
  if (widest.window().lower != 1 || !widest.window().unbounded())
    throw BadParams("double filtration: base window graph must use window (1, inf]");
  if (dim_cap < 0) throw BadParams("double filtration: dim_cap must be >= 0");
  DoubleFiltration out;
  out.lower_grid = lower_thresholds(widest.distances());
  out.upper_grid = upper_thresholds(widest.distances());
  out.regions.resize(static_cast<std::size_t>(dim_cap) + 1);
  const int n = widest.vertex_count();
  Simplex cur;
  for (int v = 0; v < n; ++v) {
    cur.push_back(v);
    cap_expand(widest, forward_neighbors(widest, v), cur, dim_cap, out);
    cur.pop_back();
  }
  return out;
}

}  // namespace wincx
