#include "wincx/window.hpp"

#include <algorithm>
#include <sstream>

#include "wincx/errors.hpp"

namespace wincx {

Window::Window(Dist n, Dist m) : lower(n), upper(m) {
  if (n < 1) throw BadParams("window: lower threshold must be >= 1");
  if (n >= m) throw BadParams("window: lower threshold must be below upper threshold");
}

std::string half_label(Dist doubled) {
  if (doubled == kInfDist) return "inf";
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string Window::label() const {
  std::ostringstream os;
  os << '(' << half_label(lower) << ", " << half_label(upper) << ']';
  return os.str();
}

WindowGraph::WindowGraph(DistanceTable dist, Window w) : w_(w), dist_(std::move(dist)) {
  const int n = dist_.size();
  stride_ = (static_cast<std::size_t>(n) + 63) / 64;
  words_.assign(static_cast<std::size_t>(n) * stride_, 0);
  nbrs_.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!w_.contains(dist_.at(u, v))) continue;
      words_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] |=
          1ULL << (v & 63);
      words_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(u >> 6)] |=
          1ULL << (u & 63);
      nbrs_[static_cast<std::size_t>(u)].push_back(v);
      nbrs_[static_cast<std::size_t>(v)].push_back(u);
      ++edges_;
    }
  }
  for (auto& row : nbrs_) std::sort(row.begin(), row.end());
}

WindowGraph window_graph(const Digraph& g, Window w) {
  return WindowGraph(distance_table(g), w);
}

WindowGraph window_graph(const Graph& g, Window w) {
  return WindowGraph(distance_table(g), w);
}

std::vector<Dist> lower_thresholds(const DistanceTable& d) {
  std::vector<Dist> out = d.finite_values();
  if (out.empty() || out.front() != 1) out.insert(out.begin(), 1);
  return out;
}

std::vector<Dist> upper_thresholds(const DistanceTable& d) {
  std::vector<Dist> out;
  for (Dist v : d.finite_values())
    if (v >= 2) out.push_back(v);
  out.push_back(kInfDist);
  return out;
}

}  // namespace wincx
