#ifndef WINCX_WINDOW_HPP
#define WINCX_WINDOW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wincx/graph.hpp"

namespace wincx {

// Half-open distance constraint (n, m]: a pair is admissible when its
// distance d satisfies n < d <= m.  Thresholds are stored doubled relative
// to the display convention; label() prints the halved form.
struct Window {
  Dist lower = 1;         // exclusive, >= 1
  Dist upper = kInfDist;  // inclusive, kInfDist = unbounded

  Window() = default;
  Window(Dist n, Dist m);

  bool contains(Dist d) const {
    // d == 0 (same vertex) is never admissible since lower >= 1.
    return d > lower && d <= upper;
  }
  bool unbounded() const { return upper == kInfDist; }
  std::string label() const;  // "(n/2, m/2]" with halved display values

  friend bool operator==(const Window& a, const Window& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
};

// Prints a doubled threshold in halves: 1 -> "1/2", 4 -> "2", inf -> "inf".
std::string half_label(Dist doubled);

// Auxiliary graph on the same vertex set whose edges are exactly the
// window-admissible pairs.  Retains the distance table so downstream
// constructions can read pairwise distances without recomputation.
class WindowGraph {
 public:
  WindowGraph(DistanceTable dist, Window w);

  int vertex_count() const { return dist_.size(); }
  const Window& window() const { return w_; }
  const DistanceTable& distances() const { return dist_; }

  bool adjacent(int u, int v) const {
    return (words_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] >>
            (v & 63)) &
           1ULL;
  }
  const std::vector<int>& neighbors(int u) const {
    return nbrs_[static_cast<std::size_t>(u)];
  }
  std::size_t edge_count() const { return edges_; }

  // Row u of the adjacency bitset; words of 64 vertices each.
  const std::uint64_t* row(int u) const {
    return words_.data() + static_cast<std::size_t>(u) * stride_;
  }
  std::size_t stride() const { return stride_; }

 private:
  Window w_;
  DistanceTable dist_;
  std::size_t stride_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::vector<int>> nbrs_;
};

WindowGraph window_graph(const Digraph& g, Window w);
WindowGraph window_graph(const Graph& g, Window w);

// Distinct lower thresholds worth scanning: 1 plus every finite distance
// value; at n = max finite distance the window (n, inf] keeps only
// infinitely-separated pairs.
std::vector<Dist> lower_thresholds(const DistanceTable& d);

// Distinct upper thresholds: every finite distance value >= 2, then inf.
std::vector<Dist> upper_thresholds(const DistanceTable& d);

}  // namespace wincx

#endif
