// Homology of window complexes, slice barcodes, the two-parameter rank
// invariant, and induced maps on homology, checked against dense reference
// linear algebra and hand-computed small cases.
#include <algorithm>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "wincx/complex.hpp"
#include "wincx/errors.hpp"
#include "wincx/gen.hpp"
#include "wincx/graph.hpp"
#include "wincx/homology.hpp"
#include "wincx/persistence.hpp"
#include "wincx/window.hpp"

using namespace wincx;

namespace {

// Distance table whose window graph at (1, 2] is exactly the given edge set:
// listed pairs get distance 2, everything else off-diagonal distance 1.
DistanceTable edge_table(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Dist> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 1);
  for (int v = 0; v < n; ++v) values[static_cast<std::size_t>(v) * n + v] = 0;
  for (auto [u, v] : edges) {
    values[static_cast<std::size_t>(u) * n + v] = 2;
    values[static_cast<std::size_t>(v) * n + u] = 2;
  }
  return DistanceTable(n, std::move(values));
}

WindowComplex edge_complex(int n, const std::vector<std::pair<int, int>>& edges, int dim_cap) {
  return independence_complex(WindowGraph(edge_table(n, edges), Window(1, 2)), dim_cap);
}

long long field_characteristic(const FieldSpec& f) { return f.rational ? 0 : f.prime; }

const std::vector<FieldSpec> kFields = {FieldSpec::rationals(), FieldSpec::gf(2),
                                        FieldSpec::gf(3)};

// Window selected by a slice threshold: the free parameter takes the
// threshold value, the other parameter stays at its widest setting.
Window slice_window(SliceDirection dir, Dist threshold) {
  return dir == SliceDirection::LowerDecreasing ? Window(threshold, kInfDist)
                                                : Window(1, threshold);
}

int threshold_index(const std::vector<Dist>& thresholds, Dist value) {
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    if (thresholds[i] == value) return static_cast<int>(i);
  return -1;
}

// Rebuild the alive-count matrix from the bar list alone.
std::vector<std::vector<long long>> alive_from_bars(const Barcode& bc, int degree_cap) {
  std::vector<std::vector<long long>> alive(
      bc.thresholds.size(), std::vector<long long>(static_cast<std::size_t>(degree_cap) + 1, 0));
  for (const Bar& bar : bc.bars) {
    const int be = threshold_index(bc.thresholds, bar.birth);
    REQUIRE(be >= 0);
    int de = static_cast<int>(bc.thresholds.size());
    if (!bar.open) {
      de = threshold_index(bc.thresholds, bar.death);
      REQUIRE(de >= 0);
      REQUIRE(de > be);  // zero-length pairs must have been dropped
    }
    for (int t = be; t < de; ++t)
      ++alive[static_cast<std::size_t>(t)][static_cast<std::size_t>(bar.degree)];
  }
  return alive;
}

void check_slice_against_recomputation(const DistanceTable& d, int degree_cap,
                                       const FieldSpec& field) {
  const WindowGraph widest(d, Window(1, kInfDist));
  for (SliceDirection dir : {SliceDirection::LowerDecreasing, SliceDirection::UpperIncreasing}) {
    const Barcode bc = persistence_slice(widest, dir, degree_cap, field);
    REQUIRE(bc.direction == dir);
    REQUIRE(bc.alive.size() == bc.thresholds.size());
    // Threshold order: descending lower values, ascending upper values.
    for (std::size_t i = 1; i < bc.thresholds.size(); ++i) {
      if (dir == SliceDirection::LowerDecreasing)
        CHECK(bc.thresholds[i] < bc.thresholds[i - 1]);
      else
        CHECK(bc.thresholds[i] > bc.thresholds[i - 1]);
    }
    for (std::size_t t = 0; t < bc.thresholds.size(); ++t) {
      const Window w = slice_window(dir, bc.thresholds[t]);
      const WindowComplex c = independence_complex(WindowGraph(d, w), degree_cap + 1);
      const BettiTable bt = simplicial_homology(c, degree_cap, field);
      REQUIRE(bc.alive[t].size() == bt.betti.size());
      for (std::size_t q = 0; q < bt.betti.size(); ++q) {
        CHECK_FALSE(bt.truncated[q]);
        CHECK(bc.alive[t][q] == bt.betti[q]);
      }
    }
    // The bar list alone must reproduce the alive counts.
    CHECK(alive_from_bars(bc, degree_cap) == bc.alive);
    for (const Bar& bar : bc.bars) {
      CHECK(bar.degree >= 0);
      CHECK(bar.degree <= degree_cap);
      if (!bar.open) {
        // Death lies strictly later in filtration order than birth.
        if (dir == SliceDirection::LowerDecreasing)
          CHECK(bar.death < bar.birth);
        else
          CHECK(bar.death > bar.birth);
      }
    }
    CHECK(std::is_sorted(bc.bars.begin(), bc.bars.end(), [](const Bar& a, const Bar& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
    }));
  }
}

}  // namespace

TEST_SUITE("homology-persist") {

TEST_CASE("flag complex betti numbers of hand-built graphs") {
  // Octahedron: complete tripartite K_{2,2,2}, a triangulated 2-sphere.
  std::vector<std::pair<int, int>> oct;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!(u / 2 == v / 2)) oct.emplace_back(u, v);
  REQUIRE(oct.size() == 12);
  const WindowComplex sphere = edge_complex(6, oct, 3);
  CHECK_FALSE(sphere.capped);
  CHECK(sphere.count(0) == 6);
  CHECK(sphere.count(1) == 12);
  CHECK(sphere.count(2) == 8);
  CHECK(sphere.count(3) == 0);
  for (const FieldSpec& f : kFields) {
    const BettiTable bt = simplicial_homology(sphere, 3, f);
    CHECK(bt.chain_dims == std::vector<long long>{6, 12, 8, 0});
    CHECK(bt.betti == std::vector<long long>{1, 0, 1, 0});
    CHECK(bt.truncated == std::vector<bool>{false, false, false, false});
  }

  // Two disjoint filled triangles: contractible pieces.
  const WindowComplex triangles =
      edge_complex(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}, 3);
  for (const FieldSpec& f : kFields) {
    const BettiTable bt = simplicial_homology(triangles, 2, f);
    CHECK(bt.betti == std::vector<long long>{2, 0, 0});
  }

  // Pentagon: one loop, no triangles to fill it.
  const WindowComplex pentagon =
      edge_complex(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, 2);
  for (const FieldSpec& f : kFields) {
    const BettiTable bt = simplicial_homology(pentagon, 2, f);
    CHECK(bt.betti == std::vector<long long>{1, 1, 0});
  }
}

TEST_CASE("random flag complex betti numbers match the dense reference") {
  std::mt19937_64 rng(0xB0551E5ULL);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);  // 3..7 vertices
    const Digraph g = oracle::random_digraph(rng, n, 0.5);
    const DistanceTable d = distance_table(g);
    const Window w = oracle::random_window(rng, d);
    const WindowComplex c = independence_complex(WindowGraph(d, w), n + 1);
    REQUIRE_FALSE(c.capped);
    for (const FieldSpec& f : kFields) {
      const BettiTable bt = simplicial_homology(c, c.dim_cap, f);
      const std::vector<long long> ref = oracle::betti(c.simplices, field_characteristic(f));
      REQUIRE(bt.betti.size() == ref.size());
      for (std::size_t q = 0; q < ref.size(); ++q) {
        CHECK_FALSE(bt.truncated[q]);
        CHECK(bt.betti[q] == ref[q]);
      }
    }
  }
}

TEST_CASE("betti computation validates its inputs") {
  const QField f;
  // A fabricated pair of boundaries whose composite is nonzero.
  SparseMat<QField> b1(1, 1), b2(1, 1);
  b1.set(0, 0, mpq_class(1));
  b2.set(0, 0, mpq_class(1));
  const SparseMat<QField> top(1, 0);
  CHECK_THROWS_AS(
      betti_from_complex(f, {1, 1, 1},
                         std::vector<const SparseMat<QField>*>{nullptr, &b1, &b2, &top}),
      std::logic_error);
  // Wrong boundary-list length.
  CHECK_THROWS_AS(betti_from_complex(f, {1, 1},
                                     std::vector<const SparseMat<QField>*>{nullptr, &b1}),
                  std::logic_error);
  // Interior boundary missing.
  CHECK_THROWS_AS(betti_from_complex(f, {1, 1, 1},
                                     std::vector<const SparseMat<QField>*>{nullptr, nullptr,
                                                                           &b2, &top}),
                  std::logic_error);
}

TEST_CASE("degree cap validation and truncation flags") {
  const WindowComplex c = edge_complex(4, {{0, 1}, {1, 2}}, 2);
  CHECK_THROWS_AS(simplicial_homology(c, -1, FieldSpec::rationals()), BadParams);
  CHECK_THROWS_AS(simplicial_homology(c, 3, FieldSpec::rationals()), BadParams);

  // Edgeless digraph: all distances infinite, so the widest window graph is
  // complete and the flag complex is a full simplex.  Capping at dimension 2
  // leaves the top reported degree an upper bound.
  const Digraph free6(6, {});
  const WindowComplex capped = independence_complex(free6, Window(1, kInfDist), 2);
  CHECK(capped.capped);
  const BettiTable bt = simplicial_homology(capped, 2, FieldSpec::gf(2));
  CHECK(bt.chain_dims == std::vector<long long>{6, 15, 20});
  CHECK(bt.betti[0] == 1);
  CHECK(bt.betti[1] == 0);
  CHECK(bt.betti[2] == 10);  // upper bound only: the missing level would kill it
  CHECK(bt.truncated == std::vector<bool>{false, false, true});

  // Same complex with a cap past the top dimension: exact zeros, no flags.
  const WindowComplex oct = edge_complex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 3);
  const BettiTable square = simplicial_homology(oct, 3, FieldSpec::rationals());
  CHECK(square.betti == std::vector<long long>{1, 1, 0, 0});
  CHECK(square.truncated == std::vector<bool>{false, false, false, false});
}

TEST_CASE("double filtration and slices require the widest base window") {
  const DistanceTable d = distance_table(make_cycle_digraph(6));
  CHECK_THROWS_AS(double_filtration(WindowGraph(d, Window(1, 2)), 1), BadParams);
  CHECK_THROWS_AS(double_filtration(WindowGraph(d, Window(2, kInfDist)), 1), BadParams);
  CHECK_THROWS_AS(double_filtration(WindowGraph(d, Window(1, kInfDist)), -1), BadParams);
  CHECK_THROWS_AS(persistence_slice(WindowGraph(d, Window(1, 3)),
                                    SliceDirection::UpperIncreasing, 1,
                                    FieldSpec::rationals()),
                  BadParams);
  CHECK_THROWS_AS(persistence_slice(WindowGraph(d, Window(1, kInfDist)),
                                    SliceDirection::UpperIncreasing, -1,
                                    FieldSpec::rationals()),
                  BadParams);
  CHECK_THROWS_AS(rank_invariant(WindowGraph(d, Window(2, kInfDist)), 1,
                                 FieldSpec::rationals()),
                  BadParams);
  CHECK_THROWS_AS(rank_invariant(WindowGraph(d, Window(1, kInfDist)), -1,
                                 FieldSpec::rationals()),
                  BadParams);
}

TEST_CASE("directed hexagon slice barcodes") {
  const WindowGraph widest(distance_table(make_cycle_digraph(6)), Window(1, kInfDist));

  const Barcode lower =
      persistence_slice(widest, SliceDirection::LowerDecreasing, 2, FieldSpec::rationals());
  CHECK(lower.thresholds == std::vector<Dist>{3, 2, 1});
  CHECK(lower.alive == std::vector<std::vector<long long>>{{6, 0, 0}, {3, 0, 0}, {1, 2, 0}});
  // Six components appear at lower threshold 3; the antipodal matching at 2
  // merges them to three, the short chords at 1 merge those to one.
  int open0 = 0, die2 = 0, die1 = 0, deg1_open = 0, deg2_bars = 0;
  for (const Bar& b : lower.bars) {
    if (b.degree == 0) {
      CHECK(b.birth == 3);
      if (b.open)
        ++open0;
      else if (b.death == 2)
        ++die2;
      else if (b.death == 1)
        ++die1;
    } else if (b.degree == 1) {
      CHECK(b.birth == 1);
      CHECK(b.open);
      ++deg1_open;
    } else {
      ++deg2_bars;
    }
  }
  CHECK(open0 == 1);
  CHECK(die2 == 3);
  CHECK(die1 == 2);
  CHECK(deg1_open == 2);
  CHECK(deg2_bars == 0);

  const Barcode upper =
      persistence_slice(widest, SliceDirection::UpperIncreasing, 2, FieldSpec::rationals());
  CHECK(upper.thresholds == std::vector<Dist>{2, 3, kInfDist});
  CHECK(upper.alive == std::vector<std::vector<long long>>{{2, 0, 0}, {1, 2, 0}, {1, 2, 0}});
  // Two filled triangles at upper threshold 2 merge into one component at 3,
  // where the antipodal chords also open two loops that never close.
  REQUIRE(upper.bars.size() == 4);
  CHECK(upper.bars[0].degree == 0);
  CHECK(upper.bars[0].birth == 2);
  CHECK(upper.bars[0].open);
  CHECK(upper.bars[1].degree == 0);
  CHECK(upper.bars[1].birth == 2);
  CHECK_FALSE(upper.bars[1].open);
  CHECK(upper.bars[1].death == 3);
  for (std::size_t i = 2; i < 4; ++i) {
    CHECK(upper.bars[i].degree == 1);
    CHECK(upper.bars[i].birth == 3);
    CHECK(upper.bars[i].open);
  }
}

TEST_CASE("slice barcodes agree with per-threshold recomputation") {
  check_slice_against_recomputation(distance_table(make_cycle_digraph(6)), 2,
                                    FieldSpec::rationals());
  check_slice_against_recomputation(distance_table(make_cycle_digraph(7)), 2, FieldSpec::gf(2));
  check_slice_against_recomputation(distance_table(make_zigzag(8)), 2,
                                    FieldSpec::rationals());

  std::mt19937_64 rng(0x5EEDBA55ULL);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // 3..6 vertices
    const Digraph g = oracle::random_digraph(rng, n, 0.55);
    const FieldSpec f = trial % 2 == 0 ? FieldSpec::rationals() : FieldSpec::gf(2);
    check_slice_against_recomputation(distance_table(g), 2, f);
  }
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    check_slice_against_recomputation(distance_table(g), 2, FieldSpec::gf(3));
  }
}

TEST_CASE("rank invariant of the directed hexagon") {
  const DistanceTable d = distance_table(make_cycle_digraph(6));
  const WindowGraph widest(d, Window(1, kInfDist));
  const RankInvariant ri = rank_invariant(widest, 2, FieldSpec::rationals());
  CHECK(ri.lower_grid == std::vector<Dist>{1, 2, 3});
  CHECK(ri.upper_grid == std::vector<Dist>{2, 3, kInfDist});

  std::map<std::tuple<Dist, Dist, Dist, Dist, int>, long long> rank;
  for (const auto& e : ri.entries) {
    const bool inserted =
        rank.emplace(std::make_tuple(e.n_src, e.m_src, e.n_dst, e.m_dst, e.degree), e.rank)
            .second;
    CHECK(inserted);  // no duplicate grid entries
    CHECK(e.n_dst <= e.n_src);
    CHECK(e.m_dst >= e.m_src);
  }
  // 6 valid windows; comparable ordered pairs (including equal) = 15; 3 degrees.
  CHECK(ri.entries.size() == 45);

  const auto at = [&](Dist ns, Dist ms, Dist nd, Dist md, int q) {
    const auto it = rank.find(std::make_tuple(ns, ms, nd, md, q));
    REQUIRE(it != rank.end());
    return it->second;
  };
  // Diagonal entries are betti numbers of the window complexes.
  CHECK(at(1, 2, 1, 2, 0) == 2);  // two filled triangles
  CHECK(at(1, 2, 1, 2, 1) == 0);
  CHECK(at(1, 3, 1, 3, 0) == 1);  // hexagon complement: connected, two loops
  CHECK(at(1, 3, 1, 3, 1) == 2);
  CHECK(at(1, kInfDist, 1, kInfDist, 1) == 2);
  CHECK(at(2, 3, 2, 3, 0) == 3);  // antipodal matching
  CHECK(at(2, kInfDist, 2, kInfDist, 0) == 3);
  CHECK(at(3, kInfDist, 3, kInfDist, 0) == 6);  // six isolated vertices
  // Cross ranks.
  CHECK(at(1, 2, 1, kInfDist, 0) == 1);  // both triangle components survive into one
  CHECK(at(1, 2, 1, kInfDist, 1) == 0);
  CHECK(at(1, 3, 1, kInfDist, 1) == 2);  // identical complexes, full-rank map
  CHECK(at(2, 3, 1, kInfDist, 0) == 1);
  CHECK(at(3, kInfDist, 1, kInfDist, 0) == 1);
  CHECK(at(2, 3, 2, kInfDist, 0) == 3);  // same matching on both sides
}

TEST_CASE("rank invariant entries match independently computed map ranks") {
  std::mt19937_64 rng(0xC0FFEE11ULL);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // 3..6 vertices
    const DistanceTable d = trial % 2 == 0
                                ? distance_table(oracle::random_digraph(rng, n, 0.5))
                                : distance_table(oracle::random_graph(rng, n, 0.5));
    const FieldSpec f = trial % 3 == 0 ? FieldSpec::gf(2) : FieldSpec::rationals();
    const int degree_cap = 1;
    const RankInvariant ri = rank_invariant(WindowGraph(d, Window(1, kInfDist)), degree_cap, f);

    VertexMap id;
    for (int v = 0; v < d.size(); ++v) id.to.push_back(v);

    std::map<std::tuple<Dist, Dist, Dist, Dist, int>, long long> rank;
    std::map<std::pair<Dist, Dist>, WindowComplex> complexes;
    for (const auto& e : ri.entries) {
      rank[std::make_tuple(e.n_src, e.m_src, e.n_dst, e.m_dst, e.degree)] = e.rank;
      for (auto key : {std::make_pair(e.n_src, e.m_src), std::make_pair(e.n_dst, e.m_dst)})
        if (!complexes.count(key))
          complexes.emplace(key, independence_complex(WindowGraph(d, Window(key.first, key.second)),
                                                      degree_cap + 1));
    }
    // Every reported rank equals the rank of the induced map computed from
    // the two complexes and the identity vertex map.
    for (const auto& e : ri.entries) {
      if (e.degree != 0) continue;  // handle all degrees at once below
      const auto& src = complexes.at(std::make_pair(e.n_src, e.m_src));
      const auto& dst = complexes.at(std::make_pair(e.n_dst, e.m_dst));
      const std::vector<long long> got = induced_homology_rank(src, dst, id, degree_cap, f, f);
      for (int q = 0; q <= degree_cap; ++q) {
        const auto it = rank.find(std::make_tuple(e.n_src, e.m_src, e.n_dst, e.m_dst, q));
        REQUIRE(it != rank.end());
        CHECK(got[static_cast<std::size_t>(q)] == it->second);
      }
    }
    // Functoriality: a factored inclusion never has larger rank.
    for (const auto& [key_ab, r_ab] : rank) {
      const auto [na, ma, nb, mb, q] = key_ab;
      for (const auto& [key_bc, r_bc] : rank) {
        const auto [nb2, mb2, nc, mc, q2] = key_bc;
        if (q2 != q || nb2 != nb || mb2 != mb) continue;
        const auto it = rank.find(std::make_tuple(na, ma, nc, mc, q));
        if (it == rank.end()) continue;
        CHECK(it->second <= std::min(r_ab, r_bc));
      }
    }
  }
}

TEST_CASE("induced homology rank conventions and errors") {
  const FieldSpec q = FieldSpec::rationals();

  // Identity on the octahedron sphere gives its betti numbers back.
  std::vector<std::pair<int, int>> oct;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!(u / 2 == v / 2)) oct.emplace_back(u, v);
  const WindowComplex sphere = edge_complex(6, oct, 3);
  VertexMap id6{{0, 1, 2, 3, 4, 5}};
  CHECK(induced_homology_rank(sphere, sphere, id6, 2, q, q) ==
        std::vector<long long>{1, 0, 1});

  // Collapsing an edge to a vertex: rank 1 in degree 0, zero in degree 1.
  const WindowComplex seg = independence_complex(Digraph(2, {}), Window(1, kInfDist), 2);
  REQUIRE(seg.count(1) == 1);
  const WindowComplex point = independence_complex(Digraph(1, {}), Window(1, kInfDist), 2);
  CHECK(induced_homology_rank(seg, point, VertexMap{{0, 0}}, 1, q, q) ==
        std::vector<long long>{1, 0});

  // Image must be a simplex of the target.
  const WindowComplex two_points =
      independence_complex(Digraph(2, {{0, 1}, {1, 0}}), Window(1, kInfDist), 2);
  REQUIRE(two_points.count(1) == 0);
  CHECK_THROWS_AS(induced_homology_rank(seg, two_points, VertexMap{{0, 1}}, 1, q, q),
                  NotASimplicialMap);

  // Field agreement, degree bounds, domain size, and cap materialization.
  CHECK_THROWS_AS(induced_homology_rank(seg, point, VertexMap{{0, 0}}, 1, q, FieldSpec::gf(2)),
                  FieldMismatch);
  CHECK_THROWS_AS(induced_homology_rank(seg, point, VertexMap{{0, 0}}, -1, q, q), BadParams);
  CHECK_THROWS_AS(induced_homology_rank(seg, point, VertexMap{{0, 0}}, 3, q, q), BadParams);
  CHECK_THROWS_AS(induced_homology_rank(seg, point, VertexMap{{0}}, 1, q, q), BadParams);
  const WindowComplex capped = independence_complex(Digraph(5, {}), Window(1, kInfDist), 2);
  REQUIRE(capped.capped);
  VertexMap id5{{0, 1, 2, 3, 4}};
  CHECK_THROWS_AS(induced_homology_rank(capped, capped, id5, 2, q, q), BadParams);
  CHECK(induced_homology_rank(capped, capped, id5, 1, q, q) == std::vector<long long>{1, 0});
}

}  // TEST_SUITE
