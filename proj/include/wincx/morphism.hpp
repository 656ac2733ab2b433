#pragma once

#include <vector>

#include "wincx/graph.hpp"

namespace wincx {

// Total vertex map V_source → V_target.
struct VertexMap {
  std::vector<int> to;
  int operator()(int v) const { return to[static_cast<std::size_t>(v)]; }
};

// True iff every arc maps to an arc or collapses to a single vertex.
bool check_morphism(const Digraph& src, const Digraph& tgt, const VertexMap& m);
// Edge analogue.
bool check_morphism(const Graph& src, const Graph& tgt, const VertexMap& m);

// Distance-preservation certificate for a verified morphism.
//
// Encoding of max_verified_radius_doubled:
//   kInfDist          every pair, including pairs at source distance ∞, has
//                     its distance preserved (a full embedding);
//   finite k          every pair with source distance ≤ k is preserved, and
//                     either some pair at finite distance k+1.. is violated
//                     (all_finite_radii = false) or the only violations are
//                     at source distance ∞ (all_finite_radii = true, and k
//                     is the largest finite source distance).
// all_finite_radii means the certificate covers every finite threshold, so a
// consumer with a finite window bound never needs more.
struct GeodesicReport {
  bool is_morphism = false;
  Dist max_verified_radius_doubled = 0;
  bool all_finite_radii = false;
  bool is_embedding = false;

  // True when windows with upper bound m are covered by this certificate.
  bool covers(Dist m) const {
    if (m == kInfDist) return is_embedding;
    return all_finite_radii || max_verified_radius_doubled >= m;
  }
};

// Doubled radius of a (di)graph: sup of all pairwise symmetrized distances.
Dist doubled_radius(const DistanceTable& d);

// Requires check_morphism (throws NotAMorphism otherwise). The source
// distance always dominates the target distance under any morphism; the
// report records up to which source distance the two agree.
GeodesicReport geodesic_report(const Digraph& src, const Digraph& tgt, const VertexMap& m);
GeodesicReport geodesic_report(const Graph& src, const Graph& tgt, const VertexMap& m);
// Core used by both overloads; assumes the map is already verified.
GeodesicReport geodesic_report_from_tables(const DistanceTable& dsrc, const DistanceTable& dtgt,
                                           const VertexMap& m);

inline constexpr int kAutomorphismVertexCap = 12;

// All arc-preserving (edge-preserving) vertex bijections, sorted
// lexicographically. Exact backtracking over refinement-pruned candidates;
// throws TooLarge above the cap.
std::vector<std::vector<int>> automorphisms(const Digraph& g, int cap = kAutomorphismVertexCap);
std::vector<std::vector<int>> automorphisms(const Graph& g, int cap = kAutomorphismVertexCap);

}  // namespace wincx
