#ifndef WINCX_PRODUCT_HPP
#define WINCX_PRODUCT_HPP

#include <string>
#include <vector>

#include "wincx/graph.hpp"

namespace wincx {

// Largest vertex count a product construction is allowed to materialize.
inline constexpr long long kProductVertexCap = 20000;

// Fixed-base positional codec for vertices of an iterated product.
// Coordinate 0 is the most significant digit.
struct MixedRadix {
  int base = 0;
  int width = 0;

  long long size() const;  // base^width, throws SizeOverflow past the cap
  int encode(const std::vector<int>& coords) const;
  std::vector<int> decode(int id) const;
  std::string label(int id) const;  // "(c0,c1,...)"
};

// Strong product: vertices are pairs, and (u1,u2) -> (v1,v2) is an arc
// exactly when each coordinate either stays fixed or moves along an arc,
// and at least one coordinate moves.  Pair (a, b) encodes to a*|H| + b.
Digraph strong_product(const Digraph& g, const Digraph& h);
Graph strong_product(const Graph& g, const Graph& h);

// p-fold strong product of g with itself, p >= 1.
Digraph strong_power(const Digraph& g, int p);
Graph strong_power(const Graph& g, int p);

// Distance table of the p-fold strong power without materializing its arc
// set.  A directed path in a strong product advances every coordinate along
// arcs or stalls it, so the one-way power distance is the coordinate-wise
// maximum of one-way base distances; the symmetrized value takes the min
// over the two orientations afterwards.  Symmetrizing before taking the max
// would only give a lower bound: the orientations realizing the factor
// minima need not agree across coordinates.
DistanceTable power_distance_table(const Digraph& g, int p);
DistanceTable power_distance_table(const Graph& g, int p);

}  // namespace wincx

#endif
