#ifndef WINCX_CAPACITY_HPP
#define WINCX_CAPACITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wincx/graph.hpp"
#include "wincx/morphism.hpp"
#include "wincx/window.hpp"

namespace wincx {

inline constexpr long long kDefaultAlphaBudget = 10'000'000;

// Exact windowed independence number: the maximum number of vertices with
// pairwise window-admissible distances, i.e. the clique number of the
// window graph (dim Ind + 1 when the vertex set is nonempty).
struct AlphaResult {
  long long value = 0;
  std::vector<int> witness;  // one maximum admissible set, ascending ids
  std::uint64_t nodes = 0;   // branch nodes expanded
};

// Deterministic branch and bound with a greedy-coloring upper bound.
// Throws Timeout carrying the bracket [best clique found, global coloring
// bound] once the node budget is exhausted.
AlphaResult alpha_witness(const WindowGraph& wg, long long node_budget = kDefaultAlphaBudget);
long long alpha(const WindowGraph& wg, long long node_budget = kDefaultAlphaBudget);

// One supermultiplicativity measurement alpha(p+q) >= alpha(p) * alpha(q).
// Provable for unbounded windows (block projection of any realizing path);
// measured, not promised, when the upper threshold is finite.
struct SupermultCheck {
  int p = 0, q = 0;
  long long alpha_p = 0, alpha_q = 0, alpha_pq = 0;
  bool holds = false;
};

// Finite-power lower bounds for the windowed capacity.  The best bound is
// the exact root best_alpha^(1/best_p); candidate roots are compared via
// exact integer powers, never through floating point.
struct CapacityEstimate {
  Window window;
  int p_max = 1;
  std::vector<long long> alpha_by_power;  // alpha of the p-fold power at index p-1
  int best_p = 1;
  long long best_alpha = 0;
  std::vector<SupermultCheck> supermult;  // every p <= q with p + q <= p_max

  std::string bound_label() const;  // exact rendering, e.g. "5^(1/2)"
  double bound_estimate() const;    // floating-point hint for display only
};

CapacityEstimate capacity_bound(const Digraph& g, Window w, int p_max,
                                long long node_budget = kDefaultAlphaBudget);
CapacityEstimate capacity_bound(const Graph& g, Window w, int p_max,
                                long long node_budget = kDefaultAlphaBudget);

// Windowed independence numbers of the three structures sharing the vertex
// set of a digraph power: alpha_a/b/c in chain order, with ab/bc recording
// whether each adjacent inequality held on this instance.  The asserted
// flags mark inequalities the library guarantees outright; a failure there
// is a defect, while an unasserted inequality is a per-instance
// measurement that can genuinely go either way.
struct CapacityChainCheck {
  int p = 0;
  long long alpha_a = 0, alpha_b = 0, alpha_c = 0;
  bool ab_holds = false, bc_holds = false;
  bool ab_asserted = false, bc_asserted = false;
};

struct CapacityInequalityReport {
  Window lower_window;                 // (q, inf]: chain G^p, pi(D^p), D^p
  std::optional<Window> upper_window;  // (1, q] when q >= 2: chain D^p, pi(D^p), G^p
  std::vector<CapacityChainCheck> lower;
  std::vector<CapacityChainCheck> upper;

  bool asserted_hold() const;  // every asserted inequality measured true
  bool measured_hold() const;  // every inequality, asserted or not
};

// For each p <= p_max and the windows (q, inf] and (1, q], compares alpha
// across the strong power of the underlying graph, the underlying graph of
// the strong power, and the power digraph itself.  q is a doubled
// threshold, finite and >= 1.
CapacityInequalityReport verify_capacity_inequalities(const Digraph& g, int p_max, Dist q,
                                                      long long node_budget = kDefaultAlphaBudget);

// Monotonicity of windowed independence numbers under coordinate powers of
// a vertex map.  Whether the power map still preserves distances far
// enough to cover the window is a measured premise (products of
// radius-covering maps need not cover the radius); when it verifies, the
// monotonicity alpha_src <= alpha_tgt is guaranteed, otherwise it too is
// only a measurement.
struct GeodesicPowerCheck {
  int p = 0;
  bool power_map_covers = false;
  long long alpha_src = 0, alpha_tgt = 0;
  bool holds = false;  // alpha_src <= alpha_tgt
};

std::vector<GeodesicPowerCheck> verify_geodesic_power_monotonicity(
    const Digraph& src, const Digraph& tgt, const VertexMap& phi, Window w, int p_max,
    long long node_budget = kDefaultAlphaBudget);

}  // namespace wincx

#endif
