#ifndef WINCX_COMPLEX_HPP
#define WINCX_COMPLEX_HPP

#include <vector>

#include "wincx/window.hpp"

namespace wincx {

// Strictly increasing vertex list; dimension = size - 1.
using Simplex = std::vector<int>;

// Flag complex of a window graph, truncated at dim_cap.  simplices[d] holds
// the d-simplices in lexicographic order.  capped is set when at least one
// simplex at dim_cap admits a further extension, so the true dimension may
// exceed the reported one.
struct WindowComplex {
  WindowGraph graph;
  int dim_cap = 0;
  std::vector<std::vector<Simplex>> simplices;
  bool capped = false;

  int dimension() const;             // largest d with simplices[d] nonempty, -1 if no vertices
  std::size_t count(int dim) const;  // 0 when dim is out of range
  bool contains(const Simplex& s) const;  // flag test against the window graph
};

WindowComplex independence_complex(WindowGraph wg, int dim_cap);
WindowComplex independence_complex(const Digraph& g, Window w, int dim_cap);
WindowComplex independence_complex(const Graph& g, Window w, int dim_cap);

// Ordered k-tuples of pairwise window-admissible distinct vertices, in
// lexicographic order.  Count equals (number of (k-1)-simplices) * k!.
std::vector<std::vector<int>> ordered_configurations(const WindowGraph& wg, int k);

// Per-simplex alive region in the two-parameter family: a simplex with
// pairwise distance extremes (minpd, maxpd) is present in the complex of
// window (n, m] exactly when n < minpd and maxpd <= m.  Singletons carry
// minpd = inf and maxpd = 0, so they are alive everywhere.
struct SimplexRegion {
  Simplex simplex;
  Dist minpd = kInfDist;
  Dist maxpd = 0;

  bool alive(Window w) const { return w.lower < minpd && maxpd <= w.upper; }
};

struct DoubleFiltration {
  std::vector<Dist> lower_grid;  // ascending candidate values for n
  std::vector<Dist> upper_grid;  // ascending candidate values for m, ends with inf
  std::vector<std::vector<SimplexRegion>> regions;  // per dimension, lex order
};

// Regions of all simplices of the flag complex at the widest window
// (1, inf], truncated at dim_cap.  Every narrower window's complex is the
// subfamily of regions alive there.
DoubleFiltration double_filtration(const WindowGraph& widest, int dim_cap);

}  // namespace wincx

#endif
