#include "wincx/morphism.hpp"

#include <algorithm>
#include <map>

#include "wincx/errors.hpp"

namespace wincx {

bool check_morphism(const Digraph& src, const Digraph& tgt, const VertexMap& m) {
  if (static_cast<int>(m.to.size()) != src.vertex_count()) return false;
  for (int v : m.to)
    if (v < 0 || v >= tgt.vertex_count()) return false;
  for (auto [u, v] : src.arcs()) {
    int a = m(u), b = m(v);
    if (a != b && !tgt.has_arc(a, b)) return false;
  }
  return true;
}

bool check_morphism(const Graph& src, const Graph& tgt, const VertexMap& m) {
  if (static_cast<int>(m.to.size()) != src.vertex_count()) return false;
  for (int v : m.to)
    if (v < 0 || v >= tgt.vertex_count()) return false;
  for (auto [u, v] : src.edges()) {
    int a = m(u), b = m(v);
    if (a != b && !tgt.has_edge(a, b)) return false;
  }
  return true;
}

Dist doubled_radius(const DistanceTable& d) {
  Dist sup = 0;
  for (int u = 0; u < d.size(); ++u)
    for (int v = u + 1; v < d.size(); ++v)
      sup = std::max(sup, d.at(u, v));
  return sup;
}

GeodesicReport geodesic_report_from_tables(const DistanceTable& dsrc, const DistanceTable& dtgt,
                                           const VertexMap& m) {
  GeodesicReport rep;
  rep.is_morphism = true;
  Dist min_finite_violation = kInfDist;
  bool infinite_violation = false;
  Dist max_finite_source = 0;
  const int n = dsrc.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Dist ds = dsrc.at(u, v);
      Dist dt = dtgt.at(m(u), m(v));
      if (ds != kInfDist) max_finite_source = std::max(max_finite_source, ds);
      if (ds == dt) continue;
      if (ds == kInfDist) infinite_violation = true;
      else min_finite_violation = std::min(min_finite_violation, ds);
    }
  }
  if (min_finite_violation == kInfDist && !infinite_violation) {
    rep.max_verified_radius_doubled = kInfDist;
    rep.all_finite_radii = true;
    rep.is_embedding = true;
  } else if (min_finite_violation == kInfDist) {
    rep.max_verified_radius_doubled = max_finite_source;
    rep.all_finite_radii = true;
    rep.is_embedding = false;
  } else {
    rep.max_verified_radius_doubled = min_finite_violation - 1;
    rep.all_finite_radii = false;
    rep.is_embedding = false;
  }
  return rep;
}

GeodesicReport geodesic_report(const Digraph& src, const Digraph& tgt, const VertexMap& m) {
  if (!check_morphism(src, tgt, m)) throw NotAMorphism("vertex map is not a digraph morphism");
  return geodesic_report_from_tables(distance_table(src), distance_table(tgt), m);
}

GeodesicReport geodesic_report(const Graph& src, const Graph& tgt, const VertexMap& m) {
  if (!check_morphism(src, tgt, m)) throw NotAMorphism("vertex map is not a graph morphism");
  return geodesic_report_from_tables(distance_table(src), distance_table(tgt), m);
}

namespace {

// Iterated colour refinement; the final colour classes bound the candidate
// images of each vertex.
template <class NeighborColours>
std::vector<int> refine_colours(int n, std::vector<long long> colour,
                                const NeighborColours& neigh) {
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<long long, std::vector<long long>>, int> next_ids;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto key = std::make_pair(colour[static_cast<std::size_t>(v)], neigh(v, colour));
      auto [it, inserted] = next_ids.emplace(key, static_cast<int>(next_ids.size()));
      next[static_cast<std::size_t>(v)] = it->second;
    }
    bool stable = true;
    for (int v = 0; v < n; ++v) {
      if (next[static_cast<std::size_t>(v)] != colour[static_cast<std::size_t>(v)]) stable = false;
      colour[static_cast<std::size_t>(v)] = next[static_cast<std::size_t>(v)];
    }
    cls.assign(colour.begin(), colour.end());
    if (stable) break;
  }
  return cls;
}

template <class ArcCheck>
void backtrack_autos(int n, int depth, std::vector<int>& image, std::vector<bool>& used,
                     const std::vector<int>& cls, const ArcCheck& consistent,
                     std::vector<std::vector<int>>& out) {
  if (depth == n) {
    out.push_back(image);
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<std::size_t>(w)]) continue;
    if (cls[static_cast<std::size_t>(w)] != cls[static_cast<std::size_t>(depth)]) continue;
    if (!consistent(depth, w, image)) continue;
    image[static_cast<std::size_t>(depth)] = w;
    used[static_cast<std::size_t>(w)] = true;
    backtrack_autos(n, depth + 1, image, used, cls, consistent, out);
    used[static_cast<std::size_t>(w)] = false;
    image[static_cast<std::size_t>(depth)] = -1;
  }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Digraph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw TooLarge("automorphisms: vertex count exceeds cap");
  std::vector<long long> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    colour[static_cast<std::size_t>(v)] =
        static_cast<long long>(g.out(v).size()) * (n + 1) + static_cast<long long>(g.in(v).size());
  auto neigh = [&](int v, const std::vector<long long>& c) {
    std::vector<long long> key;
    for (int w : g.out(v)) key.push_back(c[static_cast<std::size_t>(w)]);
    std::sort(key.begin(), key.end());
    key.push_back(-1);
    std::vector<long long> ins;
    for (int w : g.in(v)) ins.push_back(c[static_cast<std::size_t>(w)]);
    std::sort(ins.begin(), ins.end());
    key.insert(key.end(), ins.begin(), ins.end());
    return key;
  };
  auto cls = refine_colours(n, std::move(colour), neigh);
  auto consistent = [&](int v, int w, const std::vector<int>& image) {
    for (int u = 0; u < v; ++u) {
      int iu = image[static_cast<std::size_t>(u)];
      if (g.has_arc(u, v) != g.has_arc(iu, w)) return false;
      if (g.has_arc(v, u) != g.has_arc(w, iu)) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  backtrack_autos(n, 0, image, used, cls, consistent, out);
  return out;
}

std::vector<std::vector<int>> automorphisms(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap) throw TooLarge("automorphisms: vertex count exceeds cap");
  std::vector<long long> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    colour[static_cast<std::size_t>(v)] = static_cast<long long>(g.neighbors(v).size());
  auto neigh = [&](int v, const std::vector<long long>& c) {
    std::vector<long long> key;
    for (int w : g.neighbors(v)) key.push_back(c[static_cast<std::size_t>(w)]);
    std::sort(key.begin(), key.end());
    return key;
  };
  auto cls = refine_colours(n, std::move(colour), neigh);
  auto consistent = [&](int v, int w, const std::vector<int>& image) {
    for (int u = 0; u < v; ++u) {
      int iu = image[static_cast<std::size_t>(u)];
      if (g.has_edge(u, v) != g.has_edge(iu, w)) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  backtrack_autos(n, 0, image, used, cls, consistent, out);
  return out;
}

}  // namespace wincx
