#include "wincx/complex_maps.hpp"

#include <algorithm>
#include <set>

#include "wincx/errors.hpp"
#include "wincx/field.hpp"
#include "wincx/linalg.hpp"

namespace wincx {

namespace {

EmbedReport compare_complexes(Dist param, const WindowComplex& src, const WindowComplex& tgt) {
  EmbedReport rep;
  rep.param = param;
  rep.window = src.graph.window();
  std::size_t src_total = 0, tgt_total = 0;
  for (const auto& level : src.simplices) src_total += level.size();
  for (const auto& level : tgt.simplices) tgt_total += level.size();
  rep.source_count = src_total;
  rep.target_count = tgt_total;
  for (const auto& level : src.simplices)
    for (const auto& s : level)
      if (!tgt.contains(s))
        throw NotASimplicialMap("vertex-identity map dropped a simplex at window " +
                                src.graph.window().label());
  rep.identity = src_total == tgt_total;  // inclusion + equal counts = equality
  return rep;
}

}  // namespace

std::vector<EmbedReport> embed_i(const Digraph& gd, const std::vector<Dist>& lower_params,
                                 int dim_cap) {
  const Graph g = underlying_graph(gd);
  const DistanceTable dg = distance_table(g);
  const DistanceTable dgd = distance_table(gd);
  std::vector<EmbedReport> out;
  for (Dist n : lower_params) {
    Window w(n, kInfDist);
    auto src = independence_complex(WindowGraph(dg, w), dim_cap);
    auto tgt = independence_complex(WindowGraph(dgd, w), dim_cap);
    out.push_back(compare_complexes(n, src, tgt));
  }
  return out;
}

std::vector<EmbedReport> embed_j(const Digraph& gd, const std::vector<Dist>& upper_params,
                                 int dim_cap) {
  const Graph g = underlying_graph(gd);
  const DistanceTable dg = distance_table(g);
  const DistanceTable dgd = distance_table(gd);
  std::vector<EmbedReport> out;
  for (Dist m : upper_params) {
    if (m != kInfDist && m < 2) throw BadParams("embed j: upper threshold must be >= 2");
    Window w(1, m);
    auto src = independence_complex(WindowGraph(dgd, w), dim_cap);
    auto tgt = independence_complex(WindowGraph(dg, w), dim_cap);
    out.push_back(compare_complexes(m, src, tgt));
  }
  return out;
}

InducedComplexMap induced_complex_map(const WindowComplex& src, const WindowComplex& tgt,
                                      const VertexMap& phi, const GeodesicReport& geodesic) {
  if (!(src.graph.window() == tgt.graph.window()))
    throw BadParams("induced complex map: windows must match");
  if (!geodesic.is_morphism) throw NotAMorphism("induced complex map: not a morphism");
  if (!geodesic.covers(src.graph.window().upper))
    throw RadiusTooSmall("geodesic radius does not cover the window's upper threshold " +
                         half_label(src.graph.window().upper));
  InducedComplexMap out;
  out.injective = true;
  out.dimension_preserving = true;
  out.mapped.resize(src.simplices.size());
  for (std::size_t d = 0; d < src.simplices.size(); ++d) {
    std::set<Simplex> seen;
    for (const auto& s : src.simplices[d]) {
      Simplex image;
      image.reserve(s.size());
      for (int v : s) image.push_back(phi(v));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != s.size()) out.dimension_preserving = false;
      if (!tgt.contains(image))
        throw NotASimplicialMap("geodesic image is not a simplex of the target complex");
      if (!seen.insert(image).second) out.injective = false;
      out.mapped[d].emplace_back(s, std::move(image));
    }
  }
  return out;
}

RegularityReport check_affine_regularity(const WindowGraph& wg, int k,
                                         const std::vector<std::vector<mpq_class>>& coords) {
  if (k < 1) throw BadParams("affine regularity: k must be >= 1");
  if (static_cast<int>(coords.size()) != wg.vertex_count())
    throw BadParams("affine regularity: coordinate count must match vertex count");
  std::size_t dim = coords.empty() ? 0 : coords.front().size();
  for (const auto& c : coords)
    if (c.size() != dim) throw BadParams("affine regularity: ragged coordinates");
  if (!coords.empty() && dim < 1) throw BadParams("affine regularity: empty coordinate vectors");

  const auto complex = independence_complex(wg, k - 1);
  const auto& top = complex.simplices[static_cast<std::size_t>(k - 1)];

  RegularityReport rep;
  if (top.empty()) return rep;
  if (static_cast<int>(dim) < k - 1)
    throw DimensionTooSmall("affine regularity: " + std::to_string(k) +
                            " affinely independent points need at least " + std::to_string(k - 1) +
                            " coordinates, got " + std::to_string(dim));

  const QField f;
  for (const auto& s : top) {
    ++rep.checked;
    SparseMat<QField> m(static_cast<int>(dim), k - 1);
    const auto& base = coords[static_cast<std::size_t>(s[0])];
    for (int j = 1; j < k; ++j) {
      const auto& pt = coords[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])];
      for (std::size_t r = 0; r < dim; ++r) {
        mpq_class diff = pt[r] - base[r];
        if (sgn(diff) != 0) m.set(static_cast<int>(r), j - 1, std::move(diff));
      }
    }
    if (matrix_rank(f, m) != k - 1) {
      rep.regular = false;
      rep.violation = s;
      return rep;
    }
  }
  return rep;
}

}  // namespace wincx
