#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace wincx {

// Distances live in N ∪ {∞}; kInfDist compares above every finite value.
using Dist = std::uint32_t;
inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();

std::string dist_to_string(Dist d);
Dist dist_from_string(const std::string& s);

// Finite digraph on dense vertex ids 0..n-1. Arcs are ordered pairs of
// distinct vertices, deduplicated; (u,v) and (v,u) may both be present.
// Immutable after construction and safe to share across threads.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<std::pair<int, int>> arcs,
          std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  bool has_arc(int u, int v) const;
  const std::vector<int>& out(int u) const { return out_[static_cast<std::size_t>(u)]; }
  const std::vector<int>& in(int u) const { return in_[static_cast<std::size_t>(u)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::string> labels_;
};

// Finite simple graph; edges normalized to u < v, deduplicated.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// All-pairs distance matrix over N ∪ {∞}; symmetric when it holds a graph
// or symmetrized-digraph distance, asymmetric for one-way directed
// distances. No triangle inequality is assumed anywhere: the symmetrized
// digraph distance can violate it.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(int n, std::vector<Dist> values);

  int size() const { return n_; }
  Dist at(int u, int v) const {
    return values_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(v)];
  }

  // Largest finite entry (0 when all off-diagonal entries are ∞ or n ≤ 1).
  Dist max_finite() const;
  // Distinct finite off-diagonal values, ascending.
  std::vector<Dist> finite_values() const;
  bool operator==(const DistanceTable& o) const { return n_ == o.n_ && values_ == o.values_; }

 private:
  int n_ = 0;
  std::vector<Dist> values_;
};

// Forget arc directions: {u,v} is an edge iff (u,v) or (v,u) is an arc.
Graph underlying_graph(const Digraph& g);

// Both orientations of every edge.
Digraph full_preimage(const Graph& g);

// Symmetrized distance: d(u,v) = min(directed u→v, directed v→u), computed
// as two directed BFS sweeps per source. BFS on the symmetrized graph would
// compute the underlying graph's distance instead, which is a different
// (smaller) function.
DistanceTable distance_table(const Digraph& g, int jobs = 1);
DistanceTable distance_table(const Graph& g, int jobs = 1);

// One-way directed distance: at(u,v) = shortest directed path length u→v.
// Asymmetric; the symmetrized table is the entrywise min of this matrix and
// its transpose.
DistanceTable directed_distance_table(const Digraph& g, int jobs = 1);

}  // namespace wincx
