// Vertex-identity comparison maps between digraph and underlying-graph
// complexes, simplex images of geodesic morphisms, and the exact-rational
// affine-independence audit.
#include <random>
#include <utility>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "wincx/complex.hpp"
#include "wincx/complex_maps.hpp"
#include "wincx/errors.hpp"
#include "wincx/gen.hpp"
#include "wincx/graph.hpp"
#include "wincx/morphism.hpp"
#include "wincx/window.hpp"

using namespace wincx;

namespace {

WindowComplex complex_of(const DistanceTable& d, Window w, int dim_cap) {
  return independence_complex(WindowGraph(d, w), dim_cap);
}

}  // namespace

TEST_SUITE("complex-maps") {

TEST_CASE("lower-threshold comparison on the zigzag family") {
  // Zigzag distances are 1 between consecutive vertices and infinite
  // otherwise, while the underlying path has distance |i - j|; the two
  // complexes therefore coincide at lower threshold 1 and diverge above it.
  const Digraph z = make_zigzag(8);
  const auto reports = embed_i(z, {1, 2}, 7);
  REQUIRE(reports.size() == 2);

  CHECK(reports[0].param == 1);
  CHECK(reports[0].window == Window(1, kInfDist));
  CHECK(reports[0].identity);
  // Vertex subsets with pairwise index gaps >= 2: 8 + 21 + 20 + 5.
  CHECK(reports[0].source_count == 54);
  CHECK(reports[0].target_count == 54);

  CHECK(reports[1].param == 2);
  CHECK(reports[1].window == Window(2, kInfDist));
  CHECK_FALSE(reports[1].identity);
  // Path side shrinks to gaps >= 3 (8 + 15 + 4); digraph side keeps every
  // pair at infinite distance.
  CHECK(reports[1].source_count == 27);
  CHECK(reports[1].target_count == 54);
}

TEST_CASE("upper-threshold comparison on the zigzag family") {
  const Digraph z = make_zigzag(8);
  const auto reports = embed_j(z, {2, kInfDist}, 7);
  REQUIRE(reports.size() == 2);

  CHECK(reports[0].param == 2);
  CHECK(reports[0].window == Window(1, 2));
  CHECK_FALSE(reports[0].identity);
  CHECK(reports[0].source_count == 8);   // no digraph distance equals 2
  CHECK(reports[0].target_count == 14);  // 8 vertices + 6 gap-2 path edges

  CHECK(reports[1].param == kInfDist);
  CHECK(reports[1].identity);
  CHECK(reports[1].source_count == 54);
  CHECK(reports[1].target_count == 54);
}

TEST_CASE("comparison maps on symmetric and random digraphs") {
  // A directed cycle's symmetrized distances equal the underlying cycle's
  // distances, so every slice is an identity.
  for (const auto& rep : embed_i(make_cycle_digraph(6), {1, 2, 3}, 6)) {
    CHECK(rep.identity);
    CHECK(rep.source_count == rep.target_count);
  }
  for (const auto& rep : embed_j(make_cycle_digraph(6), {2, 3, kInfDist}, 6)) {
    CHECK(rep.identity);
    CHECK(rep.source_count == rep.target_count);
  }

  CHECK_THROWS_AS(embed_j(make_cycle_digraph(6), {1}, 3), BadParams);

  std::mt19937_64 rng(0xE3BEDD1EULL);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);  // 2..7 vertices
    const Digraph g = oracle::random_digraph(rng, n, 0.4);
    const DistanceTable d = distance_table(g);
    std::vector<Dist> lowers = lower_thresholds(d);
    std::vector<Dist> uppers = upper_thresholds(d);
    // Neither direction may ever drop a simplex; at the extreme thresholds
    // the complexes coincide exactly.
    const auto ri = embed_i(g, lowers, n + 1);
    for (const auto& rep : ri) CHECK(rep.source_count <= rep.target_count);
    CHECK(ri.front().identity);  // lower threshold 1
    const auto rj = embed_j(g, uppers, n + 1);
    for (const auto& rep : rj) CHECK(rep.source_count <= rep.target_count);
    CHECK(rj.back().identity);  // upper threshold inf
  }
}

TEST_CASE("winding a long directed line onto a hexagon") {
  const Digraph line = make_line_digraph(12);
  const Digraph hex = make_cycle_digraph(6);
  VertexMap wind;
  for (int i = 0; i < 12; ++i) wind.to.push_back(i % 6);

  const GeodesicReport rep = geodesic_report(line, hex, wind);
  CHECK(rep.is_morphism);
  CHECK(rep.max_verified_radius_doubled == 3);  // distance 4 wraps to 2
  CHECK_FALSE(rep.all_finite_radii);
  CHECK_FALSE(rep.is_embedding);
  CHECK(rep.covers(2));
  CHECK_FALSE(rep.covers(4));
  CHECK_FALSE(rep.covers(kInfDist));

  const DistanceTable dl = distance_table(line);
  const DistanceTable dh = distance_table(hex);
  const WindowComplex src = complex_of(dl, Window(1, 2), 3);
  const WindowComplex tgt = complex_of(dh, Window(1, 2), 3);

  const InducedComplexMap m = induced_complex_map(src, tgt, wind, rep);
  REQUIRE(m.mapped.size() == 4);
  CHECK(m.mapped[0].size() == 12);
  CHECK(m.mapped[1].size() == 10);
  CHECK(m.mapped[2].empty());
  CHECK(m.dimension_preserving);
  CHECK_FALSE(m.injective);  // two windings cover each hexagon edge
  int hits = 0;
  for (const auto& [s, image] : m.mapped[1])
    if (image == Simplex{0, 2}) {
      ++hits;
      CHECK((s == Simplex{0, 2} || s == Simplex{6, 8}));
    }
  CHECK(hits == 2);

  // The certificate stops short of upper threshold 4.
  const WindowComplex src4 = complex_of(dl, Window(1, 4), 3);
  const WindowComplex tgt4 = complex_of(dh, Window(1, 4), 3);
  CHECK_THROWS_AS(induced_complex_map(src4, tgt4, wind, rep), RadiusTooSmall);
  // Windows must agree before anything else is considered.
  CHECK_THROWS_AS(induced_complex_map(src, tgt4, wind, rep), BadParams);
  GeodesicReport not_morphism;
  CHECK_THROWS_AS(induced_complex_map(src, tgt, wind, not_morphism), NotAMorphism);
}

TEST_CASE("corner inclusion of a small box is a full embedding") {
  const Digraph small = make_lattice_digraph(2, 2);
  const Digraph big = make_lattice_digraph(2, 3);
  VertexMap corner;
  for (int id = 0; id < small.vertex_count(); ++id)
    corner.to.push_back(lattice_id(3, lattice_coords(2, 2, id)));

  const GeodesicReport rep = geodesic_report(small, big, corner);
  CHECK(rep.is_embedding);
  CHECK(rep.all_finite_radii);
  CHECK(rep.max_verified_radius_doubled == kInfDist);
  CHECK(rep.covers(kInfDist));

  const WindowComplex src = complex_of(distance_table(small), Window(1, kInfDist), 3);
  const WindowComplex tgt = complex_of(distance_table(big), Window(1, kInfDist), 3);
  const InducedComplexMap m = induced_complex_map(src, tgt, corner, rep);
  CHECK(m.injective);
  CHECK(m.dimension_preserving);
  // The 2x2 box complex: 4 vertices plus the two diagonals (the antichain
  // pair at infinite distance and the chain pair at distance 2).
  CHECK(m.mapped[0].size() == 4);
  CHECK(m.mapped[1].size() == 2);
}

TEST_CASE("collapsing images are reported, not rejected") {
  // A fabricated certificate (as a careless caller might supply) lets the
  // map collapse the distance-2 pair of a three-vertex line onto one vertex
  // of a two-cycle; the validator keeps the collapsed simplex and clears
  // the dimension-preservation flag.
  const WindowComplex src = complex_of(distance_table(make_line_digraph(3)), Window(1, 2), 2);
  REQUIRE(src.count(1) == 1);
  const WindowComplex tgt = complex_of(distance_table(make_cycle_digraph(2)), Window(1, 2), 2);
  const VertexMap fold{{0, 1, 0}};
  const GeodesicReport fake{true, kInfDist, true, true};
  const InducedComplexMap m = induced_complex_map(src, tgt, fold, fake);
  CHECK_FALSE(m.dimension_preserving);
  CHECK_FALSE(m.injective);  // vertices 0 and 2 share an image
  REQUIRE(m.mapped[1].size() == 1);
  CHECK(m.mapped[1][0].first == Simplex{0, 2});
  CHECK(m.mapped[1][0].second == Simplex{0});

  // Images must still be simplices of the target: a complete pair of arcs
  // leaves the target window graph edgeless, so the identity on an edge is
  // not simplicial even with a (fabricated) perfect certificate.
  const WindowComplex esrc =
      complex_of(distance_table(Digraph(2, {})), Window(1, kInfDist), 2);
  REQUIRE(esrc.count(1) == 1);
  const WindowComplex etgt =
      complex_of(distance_table(Digraph(2, {{0, 1}, {1, 0}})), Window(1, kInfDist), 2);
  REQUIRE(etgt.count(1) == 0);
  CHECK_THROWS_AS(induced_complex_map(esrc, etgt, VertexMap{{0, 1}}, fake), NotASimplicialMap);
}

TEST_CASE("affine regularity of hexagon triangle placements") {
  const WindowGraph wg(distance_table(make_cycle_digraph(6)), Window(1, 2));
  const auto q = [](int a, int b) { return mpq_class(a, b); };

  // Both admissible triangles land on genuinely two-dimensional point sets.
  std::vector<std::vector<mpq_class>> good = {
      {q(0, 1), q(0, 1)}, {q(5, 1), q(5, 1)}, {q(1, 1), q(0, 1)},
      {q(6, 1), q(5, 1)}, {q(0, 1), q(1, 1)}, {q(5, 1), q(6, 1)}};
  const RegularityReport ok = check_affine_regularity(wg, 3, good);
  CHECK(ok.regular);
  CHECK_FALSE(ok.violation.has_value());
  CHECK(ok.checked == 2);

  // Collapse the even triangle onto a line; the audit names it and stops.
  std::vector<std::vector<mpq_class>> bad = good;
  bad[0] = {q(0, 1), q(0, 1)};
  bad[2] = {q(1, 2), q(1, 2)};
  bad[4] = {q(1, 1), q(1, 1)};
  const RegularityReport viol = check_affine_regularity(wg, 3, bad);
  CHECK_FALSE(viol.regular);
  REQUIRE(viol.violation.has_value());
  CHECK(*viol.violation == Simplex{0, 2, 4});
  CHECK(viol.checked == 1);
}

TEST_CASE("affine regularity is exact over the rationals") {
  // (0,0), (1,1/3), (3,1) are exactly collinear; any rounding of 1/3 would
  // hide that.
  const WindowGraph all(distance_table(Digraph(3, {})), Window(1, kInfDist));
  std::vector<std::vector<mpq_class>> pts = {
      {mpq_class(0), mpq_class(0)},
      {mpq_class(1), mpq_class(1, 3)},
      {mpq_class(3), mpq_class(1)}};
  const RegularityReport rep = check_affine_regularity(all, 3, pts);
  CHECK_FALSE(rep.regular);
  REQUIRE(rep.violation.has_value());
  CHECK(*rep.violation == Simplex{0, 1, 2});

  // Nudge one coordinate and the triple becomes independent.
  pts[1][1] = mpq_class(1, 3) + mpq_class(1, 1000000);
  CHECK(check_affine_regularity(all, 3, pts).regular);
}

TEST_CASE("affine regularity corner cases and validation") {
  const WindowGraph pair(distance_table(Digraph(2, {})), Window(1, kInfDist));
  // Coincident endpoints of an edge are an affine violation already at k=2.
  std::vector<std::vector<mpq_class>> same = {{mpq_class(1)}, {mpq_class(1)}};
  const RegularityReport dup = check_affine_regularity(pair, 2, same);
  CHECK_FALSE(dup.regular);
  CHECK(*dup.violation == Simplex{0, 1});

  // Single vertices are always affinely independent.
  const RegularityReport singles = check_affine_regularity(pair, 1, same);
  CHECK(singles.regular);
  CHECK(singles.checked == 2);

  // No simplex to audit: trivially regular even in dimension too small to
  // host one, and nothing is counted.
  const WindowGraph hex(distance_table(make_cycle_digraph(6)), Window(1, 2));
  std::vector<std::vector<mpq_class>> line6(6, {mpq_class(0)});
  const RegularityReport none = check_affine_regularity(hex, 4, line6);
  CHECK(none.regular);
  CHECK(none.checked == 0);
  // Triangles do exist, so one coordinate is not enough there.
  CHECK_THROWS_AS(check_affine_regularity(hex, 3, line6), DimensionTooSmall);

  CHECK_THROWS_AS(check_affine_regularity(pair, 0, same), BadParams);
  std::vector<std::vector<mpq_class>> short_list = {{mpq_class(0)}};
  CHECK_THROWS_AS(check_affine_regularity(pair, 2, short_list), BadParams);
  std::vector<std::vector<mpq_class>> ragged = {{mpq_class(0)}, {mpq_class(0), mpq_class(1)}};
  CHECK_THROWS_AS(check_affine_regularity(pair, 2, ragged), BadParams);
  std::vector<std::vector<mpq_class>> empties = {{}, {}};
  CHECK_THROWS_AS(check_affine_regularity(pair, 2, empties), BadParams);
}

}  // TEST_SUITE
