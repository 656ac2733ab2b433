#include "wincx/persistence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wincx/errors.hpp"

namespace wincx {

namespace {

// Index of a sorted simplex inside a lex-sorted level, -1 if absent.
int simplex_index(const std::vector<Simplex>& level, const Simplex& s) {
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return static_cast<int>(it - level.begin());
}

// Boundary matrix from dimension d cells to dimension d-1 faces, both given
// as lex-sorted levels.
template <class F>
SparseMat<F> level_boundary(const F& f, const std::vector<Simplex>& faces,
                            const std::vector<Simplex>& cells) {
  SparseMat<F> m(static_cast<int>(faces.size()), static_cast<int>(cells.size()));
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const Simplex& s = cells[j];
    std::map<int, typename F::Scalar> acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != i) face.push_back(s[t]);
      int row = simplex_index(faces, face);
      if (row < 0) throw std::logic_error("simplicial boundary: face missing from complex");
      auto sign = i % 2 == 0 ? f.one() : f.neg(f.one());
      auto [it, inserted] = acc.emplace(row, sign);
      if (!inserted) it->second = f.add(it->second, sign);
    }
    for (auto& [r, c] : acc)
      if (!f.is_zero(c)) m.col[j].entries.emplace_back(r, c);
  }
  return m;
}

template <class F>
BettiTable simplicial_homology_impl(const F& f, const WindowComplex& c, int degree_cap) {
  std::vector<long long> dims;
  for (int d = 0; d <= degree_cap; ++d) dims.push_back(static_cast<long long>(c.count(d)));
  std::vector<SparseMat<F>> mats;
  std::vector<const SparseMat<F>*> bnds(static_cast<std::size_t>(degree_cap) + 2, nullptr);
  mats.reserve(static_cast<std::size_t>(degree_cap) + 1);
  for (int d = 1; d <= degree_cap + 1; ++d) {
    bool have_cells = d <= c.dim_cap;
    if (!have_cells) {
      // Levels past dim_cap were not enumerated; when the complex is not
      // capped there are provably none, so the boundary is a zero map.
      if (!c.capped) {
        mats.emplace_back(static_cast<int>(c.count(d - 1)), 0);
        bnds[static_cast<std::size_t>(d)] = &mats.back();
      }
      continue;
    }
    mats.push_back(level_boundary(f, c.simplices[static_cast<std::size_t>(d) - 1],
                                  c.simplices[static_cast<std::size_t>(d)]));
    bnds[static_cast<std::size_t>(d)] = &mats.back();
  }
  return betti_from_complex(f, dims, bnds);
}

}  // namespace

BettiTable simplicial_homology(const WindowComplex& c, int degree_cap, const FieldSpec& field) {
  if (degree_cap < 0) throw BadParams("simplicial homology: degree cap must be >= 0");
  if (degree_cap > c.dim_cap)
    throw BadParams("simplicial homology: complex not materialized up to the degree cap");
  return with_field(field, [&](auto f) { return simplicial_homology_impl(f, c, degree_cap); });
}

namespace {

struct FiltrationCell {
  int entry;  // threshold index where the simplex appears
  int dim;
  const SimplexRegion* region;
};

// Entry index of a region along a slice.
int entry_index(const SimplexRegion& r, SliceDirection dir, const std::vector<Dist>& ts) {
  if (dir == SliceDirection::LowerDecreasing) {
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (ts[i] < r.minpd) return static_cast<int>(i);
  } else {
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (ts[i] >= r.maxpd) return static_cast<int>(i);
  }
  return -1;
}

template <class F>
Barcode persistence_slice_impl(const F& f, const WindowGraph& widest, SliceDirection dir,
                               int degree_cap) {
  const auto df = double_filtration(widest, degree_cap + 1);
  Barcode out;
  out.direction = dir;
  if (dir == SliceDirection::LowerDecreasing) {
    out.thresholds = df.lower_grid;
    std::reverse(out.thresholds.begin(), out.thresholds.end());
  } else {
    out.thresholds = df.upper_grid;
  }

  std::vector<FiltrationCell> cells;
  for (const auto& level : df.regions) {
    for (const auto& r : level) {
      int e = entry_index(r, dir, out.thresholds);
      if (e < 0) throw std::logic_error("persistence: simplex never enters the slice");
      cells.push_back(FiltrationCell{e, static_cast<int>(r.simplex.size()) - 1, &r});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const FiltrationCell& a, const FiltrationCell& b) {
    if (a.entry != b.entry) return a.entry < b.entry;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.region->simplex < b.region->simplex;
  });

  std::map<Simplex, int> position;
  for (std::size_t i = 0; i < cells.size(); ++i) position.emplace(cells[i].region->simplex, i);

  // Columns in total order; low = largest row index.
  using Column = std::vector<std::pair<int, typename F::Scalar>>;  // ascending rows
  std::vector<Column> cols(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const Simplex& s = cells[j].region->simplex;
    if (s.size() < 2) continue;
    std::map<int, typename F::Scalar> acc;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != i) face.push_back(s[t]);
      auto it = position.find(face);
      if (it == position.end()) throw std::logic_error("persistence: face missing from filtration");
      auto sign = i % 2 == 0 ? f.one() : f.neg(f.one());
      auto [mit, inserted] = acc.emplace(it->second, sign);
      if (!inserted) mit->second = f.add(mit->second, sign);
    }
    for (auto& [r, c] : acc)
      if (!f.is_zero(c)) cols[j].emplace_back(r, c);
  }

  // pivot_owner[i]: column whose reduced low row is i; such a column kills
  // the creator born at position i.
  std::vector<int> pivot_owner(cells.size(), -1);
  for (std::size_t j = 0; j < cells.size(); ++j) {
    Column& col = cols[j];
    while (!col.empty()) {
      int low = col.back().first;
      int owner = pivot_owner[static_cast<std::size_t>(low)];
      if (owner < 0) break;
      // col -= (col.low / owner.low) * owner
      auto factor = f.div(col.back().second, cols[static_cast<std::size_t>(owner)].back().second);
      Column merged;
      const Column& other = cols[static_cast<std::size_t>(owner)];
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < other.size()) {
        if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
          merged.push_back(col[a++]);
        } else if (a == col.size() || other[b].first < col[a].first) {
          merged.emplace_back(other[b].first, f.neg(f.mul(factor, other[b].second)));
          ++b;
        } else {
          auto v = f.sub(col[a].second, f.mul(factor, other[b].second));
          if (!f.is_zero(v)) merged.emplace_back(col[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) pivot_owner[static_cast<std::size_t>(col.back().first)] = static_cast<int>(j);
  }

  // Creators are the columns that reduced to zero.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cols[i].empty()) continue;  // not a creator
    int dim = cells[i].dim;
    if (dim > degree_cap) continue;
    int killer = pivot_owner[i];
    if (killer >= 0) {
      int be = cells[i].entry, de = cells[static_cast<std::size_t>(killer)].entry;
      if (be == de) continue;  // zero-length pair
      out.bars.push_back(Bar{dim, out.thresholds[static_cast<std::size_t>(be)],
                             out.thresholds[static_cast<std::size_t>(de)], false});
    } else {
      out.bars.push_back(
          Bar{dim, out.thresholds[static_cast<std::size_t>(cells[i].entry)], 0, true});
    }
  }
  std::sort(out.bars.begin(), out.bars.end(), [&](const Bar& a, const Bar& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
  });

  out.alive.assign(out.thresholds.size(),
                   std::vector<long long>(static_cast<std::size_t>(degree_cap) + 1, 0));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cols[i].empty()) continue;
    int dim = cells[i].dim;
    if (dim > degree_cap) continue;
    int be = cells[i].entry;
    int de = pivot_owner[i] >= 0 ? cells[static_cast<std::size_t>(pivot_owner[i])].entry
                                 : static_cast<int>(out.thresholds.size());
    for (int t = be; t < de && t < static_cast<int>(out.thresholds.size()); ++t)
      ++out.alive[static_cast<std::size_t>(t)][static_cast<std::size_t>(dim)];
  }
  return out;
}

// Simplices of the widest complex alive at a window, per dimension.
std::vector<std::vector<Simplex>> alive_levels(const DoubleFiltration& df, Window w) {
  std::vector<std::vector<Simplex>> out(df.regions.size());
  for (std::size_t d = 0; d < df.regions.size(); ++d)
    for (const auto& r : df.regions[d])
      if (r.alive(w)) out[d].push_back(r.simplex);
  return out;
}

template <class F>
RankInvariant rank_invariant_impl(const F& f, const WindowGraph& widest, int degree_cap) {
  const auto df = double_filtration(widest, degree_cap + 1);
  RankInvariant out;
  out.lower_grid = df.lower_grid;
  out.upper_grid = df.upper_grid;

  struct Node {
    Window w;
    std::vector<std::vector<Simplex>> levels;
    std::vector<SparseMat<F>> boundary;  // index d: level d -> d-1, d >= 1
  };
  std::vector<Node> nodes;
  for (Dist n : out.lower_grid) {
    for (Dist m : out.upper_grid) {
      if (n >= m) continue;
      Node node;
      node.w = Window(n, m);
      node.levels = alive_levels(df, node.w);
      node.boundary.resize(node.levels.size());
      for (std::size_t d = 1; d < node.levels.size(); ++d)
        node.boundary[d] = level_boundary(f, node.levels[d - 1], node.levels[d]);
      nodes.push_back(std::move(node));
    }
  }

  for (const auto& src : nodes) {
    for (const auto& dst : nodes) {
      if (dst.w.lower > src.w.lower || dst.w.upper < src.w.upper) continue;
      // src complex includes into dst complex
      for (int q = 0; q <= degree_cap; ++q) {
        SparseMat<F> inc(static_cast<int>(dst.levels[static_cast<std::size_t>(q)].size()),
                         static_cast<int>(src.levels[static_cast<std::size_t>(q)].size()));
        for (std::size_t j = 0; j < src.levels[static_cast<std::size_t>(q)].size(); ++j) {
          int row = simplex_index(dst.levels[static_cast<std::size_t>(q)],
                                  src.levels[static_cast<std::size_t>(q)][j]);
          if (row < 0) throw std::logic_error("rank invariant: inclusion failed");
          inc.col[j].entries.emplace_back(row, f.one());
        }
        long long rank = homology_map_rank(
            f,
            q >= 1 ? src.boundary[static_cast<std::size_t>(q)]
                   : SparseMat<F>(0, static_cast<int>(src.levels[0].size())),
            dst.boundary[static_cast<std::size_t>(q) + 1], inc);
        out.entries.push_back(RankInvariant::Entry{src.w.lower, src.w.upper, dst.w.lower,
                                                   dst.w.upper, q, rank});
      }
    }
  }
  return out;
}

}  // namespace

Barcode persistence_slice(const WindowGraph& widest, SliceDirection direction, int degree_cap,
                          const FieldSpec& field) {
  if (degree_cap < 0) throw BadParams("persistence: degree cap must be >= 0");
  return with_field(field,
                    [&](auto f) { return persistence_slice_impl(f, widest, direction, degree_cap); });
}

RankInvariant rank_invariant(const WindowGraph& widest, int degree_cap, const FieldSpec& field) {
  if (degree_cap < 0) throw BadParams("rank invariant: degree cap must be >= 0");
  return with_field(field, [&](auto f) { return rank_invariant_impl(f, widest, degree_cap); });
}

namespace {

template <class F>
std::vector<long long> induced_homology_rank_impl(const F& f, const WindowComplex& src,
                                                  const WindowComplex& tgt, const VertexMap& phi,
                                                  int degree_cap) {
  std::vector<long long> out;
  for (int q = 0; q <= degree_cap; ++q) {
    const auto& src_cells = src.simplices[static_cast<std::size_t>(q)];
    const auto& tgt_cells = tgt.simplices[static_cast<std::size_t>(q)];
    SparseMat<F> chain_map(static_cast<int>(tgt_cells.size()),
                           static_cast<int>(src_cells.size()));
    for (std::size_t j = 0; j < src_cells.size(); ++j) {
      std::vector<int> image;
      for (int v : src_cells[j]) image.push_back(phi(v));
      // Orientation sign = parity of the sort; collapsed simplices map to zero.
      long long inversions = 0;
      bool collapsed = false;
      for (std::size_t a = 0; a < image.size() && !collapsed; ++a)
        for (std::size_t b = a + 1; b < image.size(); ++b) {
          if (image[a] == image[b]) {
            collapsed = true;
            break;
          }
          if (image[a] > image[b]) ++inversions;
        }
      if (collapsed) continue;
      Simplex sorted = image;
      std::sort(sorted.begin(), sorted.end());
      int row = simplex_index(tgt_cells, sorted);
      if (row < 0) throw NotASimplicialMap("induced homology: image is not a target simplex");
      chain_map.col[j].entries.emplace_back(row,
                                            inversions % 2 == 0 ? f.one() : f.neg(f.one()));
    }
    SparseMat<F> src_boundary =
        q >= 1 ? level_boundary(f, src.simplices[static_cast<std::size_t>(q) - 1], src_cells)
               : SparseMat<F>(0, static_cast<int>(src_cells.size()));
    SparseMat<F> tgt_up;
    if (q + 1 <= tgt.dim_cap) {
      tgt_up = level_boundary(f, tgt_cells, tgt.simplices[static_cast<std::size_t>(q) + 1]);
    } else if (!tgt.capped) {
      tgt_up = SparseMat<F>(static_cast<int>(tgt_cells.size()), 0);
    } else {
      throw BadParams("induced homology: target complex not materialized past the degree cap");
    }
    out.push_back(homology_map_rank(f, src_boundary, tgt_up, chain_map));
  }
  return out;
}

}  // namespace

std::vector<long long> induced_homology_rank(const WindowComplex& src, const WindowComplex& tgt,
                                             const VertexMap& phi, int degree_cap,
                                             const FieldSpec& src_field,
                                             const FieldSpec& tgt_field) {
  if (src_field != tgt_field)
    throw FieldMismatch("induced homology: source and target fields differ");
  if (degree_cap < 0) throw BadParams("induced homology: degree cap must be >= 0");
  if (degree_cap > src.dim_cap)
    throw BadParams("induced homology: source complex not materialized to the degree cap");
  if (degree_cap > tgt.dim_cap)
    throw BadParams("induced homology: target complex not materialized to the degree cap");
  if (static_cast<int>(phi.to.size()) != src.graph.vertex_count())
    throw BadParams("induced homology: vertex map has wrong domain size");
  return with_field(src_field, [&](auto f) {
    return induced_homology_rank_impl(f, src, tgt, phi, degree_cap);
  });
}

}  // namespace wincx
