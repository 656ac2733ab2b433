#ifndef WINCX_COMPLEX_MAPS_HPP
#define WINCX_COMPLEX_MAPS_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "wincx/complex.hpp"
#include "wincx/morphism.hpp"

namespace wincx {

// One slice of a canonical vertex-identity comparison between the complexes
// of a digraph and of its underlying graph at a shared window.
struct EmbedReport {
  Dist param = 0;  // the varying threshold (lower for the i family, upper for j)
  Window window;
  bool identity = false;  // simplex sets coincide exactly
  std::size_t source_count = 0;
  std::size_t target_count = 0;
};

// Vertex-identity maps Ind(underlying graph, (n, inf]) -> Ind(digraph, (n, inf])
// for each requested lower threshold.  The internal validator confirms that
// every source simplex is a target simplex and throws NotASimplicialMap
// otherwise; at n = 1 the two complexes coincide and identity is reported.
std::vector<EmbedReport> embed_i(const Digraph& gd, const std::vector<Dist>& lower_params,
                                 int dim_cap);

// Vertex-identity maps Ind(digraph, (1, m]) -> Ind(underlying graph, (1, m])
// for each requested finite upper threshold m >= 2.
std::vector<EmbedReport> embed_j(const Digraph& gd, const std::vector<Dist>& upper_params,
                                 int dim_cap);

// Simplex-level image of a verified geodesic morphism.
struct InducedComplexMap {
  std::vector<std::vector<std::pair<Simplex, Simplex>>> mapped;  // per dimension: (source, image)
  bool injective = false;
  bool dimension_preserving = false;
};

// Maps each simplex of src through phi.  Requires matching windows and a
// geodesic certificate covering the window's upper threshold; throws
// RadiusTooSmall otherwise.  The validator confirms every image is a
// simplex of tgt (NotASimplicialMap on violation).
InducedComplexMap induced_complex_map(const WindowComplex& src, const WindowComplex& tgt,
                                      const VertexMap& phi, const GeodesicReport& geodesic);

// Affine-independence audit of a coordinate assignment: true when the image
// of every k-vertex simplex spans an affine (k-1)-plane.  Exact rational
// rank; no floating point.  Throws DimensionTooSmall when the coordinate
// space cannot possibly host an affinely independent k-tuple but the
// complex demands one.
struct RegularityReport {
  bool regular = true;
  std::optional<Simplex> violation;  // lexicographically first failing simplex
  std::size_t checked = 0;
};

RegularityReport check_affine_regularity(const WindowGraph& wg, int k,
                                         const std::vector<std::vector<mpq_class>>& coords);

}  // namespace wincx

#endif
