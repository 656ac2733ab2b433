#include "wincx/path.hpp"

#include <algorithm>
#include <stdexcept>

#include "wincx/errors.hpp"

namespace wincx {

PathBasis path_basis(const WindowGraph& wg, int length) {
  if (length < 0) throw BadParams("path basis: length must be >= 0");
  PathBasis out;
  out.window = wg.window();
  out.length = length;
  const int n = wg.vertex_count();
  std::vector<Path> cur;
  cur.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cur.push_back(Path{v});
  for (int step = 0; step < length; ++step) {
    std::vector<Path> next;
    for (const Path& p : cur) {
      for (int w : wg.neighbors(p.back())) {
        Path q = p;
        q.push_back(w);
        next.push_back(std::move(q));
      }
    }
    cur = std::move(next);
  }
  out.paths = std::move(cur);
  return out;
}

Path reversed_path(const Path& p) { return Path(p.rbegin(), p.rend()); }

std::optional<Path> regular_face(const Path& p, std::size_t i) {
  if (i > 0 && i + 1 < p.size() && p[i - 1] == p[i + 1]) return std::nullopt;
  Path face;
  face.reserve(p.size() - 1);
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != i) face.push_back(p[j]);
  return face;
}

namespace {

template <class F>
SparseVec<F> boundary_column(const F& f, const Path& q, const std::map<Path, int>& rows) {
  std::map<int, typename F::Scalar> acc;
  for (std::size_t i = 0; i < q.size(); ++i) {
    auto face = regular_face(q, i);
    if (!face) continue;
    auto it = rows.find(*face);
    if (it == rows.end()) throw std::logic_error("path boundary: face missing from ambient rows");
    auto sign = i % 2 == 0 ? f.one() : f.neg(f.one());
    auto [mit, inserted] = acc.emplace(it->second, sign);
    if (!inserted) mit->second = f.add(mit->second, sign);
  }
  SparseVec<F> col;
  for (auto& [r, c] : acc)
    if (!f.is_zero(c)) col.entries.emplace_back(r, c);
  return col;
}

template <class F>
void check_composition_zero(const F& f, const SparseMat<F>& lower, const SparseMat<F>& upper,
                            const char* what) {
  for (const auto& c : upper.col)
    if (!apply(f, lower, c).empty()) throw std::logic_error(what);
}

}  // namespace

template <class F>
ChainSlice<F> build_chain_slice(const F& f, const WindowGraph& wg, int max_length,
                                FieldSpec spec) {
  if (max_length < 0) throw BadParams("chain slice: max_length must be >= 0");
  const int L = max_length;
  ChainSlice<F> slice;
  slice.window = wg.window();
  slice.max_length = L;
  slice.spec = spec;

  std::vector<std::vector<Path>> walks(static_cast<std::size_t>(L) + 2);
  for (int l = 0; l <= L + 1; ++l)
    walks[static_cast<std::size_t>(l)] = path_basis(wg, l).paths;
  slice.top_paths = walks[static_cast<std::size_t>(L) + 1];

  slice.degrees.resize(static_cast<std::size_t>(L) + 1);
  for (int l = 0; l <= L; ++l) {
    auto& deg = slice.degrees[static_cast<std::size_t>(l)];
    deg.rows = walks[static_cast<std::size_t>(l)];
    deg.d_dim = static_cast<int>(deg.rows.size());
    for (int i = 0; i < deg.d_dim; ++i) deg.row_index.emplace(deg.rows[static_cast<std::size_t>(i)], i);
    for (const Path& q : walks[static_cast<std::size_t>(l) + 1]) {
      for (std::size_t i = 0; i < q.size(); ++i) {
        auto face = regular_face(q, i);
        if (!face) continue;
        if (deg.row_index.emplace(*face, static_cast<int>(deg.rows.size())).second)
          deg.rows.push_back(*face);
      }
    }
  }

  slice.degrees[0].d_boundary = SparseMat<F>(0, slice.degrees[0].d_dim);
  for (int l = 1; l <= L; ++l) {
    auto& deg = slice.degrees[static_cast<std::size_t>(l)];
    const auto& below = slice.degrees[static_cast<std::size_t>(l) - 1];
    deg.d_boundary = SparseMat<F>(static_cast<int>(below.rows.size()), deg.d_dim);
    for (int j = 0; j < deg.d_dim; ++j)
      deg.d_boundary.col[static_cast<std::size_t>(j)] =
          boundary_column(f, walks[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)],
                          below.row_index);
  }
  {
    const auto& top = slice.degrees[static_cast<std::size_t>(L)];
    slice.top_boundary =
        SparseMat<F>(static_cast<int>(top.rows.size()), static_cast<int>(slice.top_paths.size()));
    for (std::size_t j = 0; j < slice.top_paths.size(); ++j)
      slice.top_boundary.col[j] = boundary_column(f, slice.top_paths[j], top.row_index);
  }

  // Inf: kernel of the boundary followed by projection off the walk span
  // one degree down.
  for (int l = 0; l <= L; ++l) {
    auto& deg = slice.degrees[static_cast<std::size_t>(l)];
    if (l == 0) {
      for (int j = 0; j < deg.d_dim; ++j) {
        SparseVec<F> unit;
        unit.entries.emplace_back(j, f.one());
        deg.inf_basis.push_back(std::move(unit));
      }
    } else {
      const auto& below = slice.degrees[static_cast<std::size_t>(l) - 1];
      SparseMat<F> projected(static_cast<int>(below.rows.size()) - below.d_dim, deg.d_dim);
      for (int j = 0; j < deg.d_dim; ++j)
        for (const auto& [r, c] : deg.d_boundary.col[static_cast<std::size_t>(j)].entries)
          if (r >= below.d_dim)
            projected.col[static_cast<std::size_t>(j)].entries.emplace_back(r - below.d_dim, c);
      deg.inf_basis = kernel_basis(f, projected);
    }
    deg.inf_span.emplace(f);
    for (const auto& v : deg.inf_basis) deg.inf_span->insert(v);
  }

  // Sup: deterministic basis from the walk units followed by the boundaries
  // of one-higher walks.  Walk units always enter (distinct lead rows), so
  // the walk span is a prefix of every Sup basis.
  for (int l = 0; l <= L; ++l) {
    auto& deg = slice.degrees[static_cast<std::size_t>(l)];
    deg.sup_span.emplace(f);
    int src = 0;
    for (int j = 0; j < deg.d_dim; ++j, ++src) {
      SparseVec<F> unit;
      unit.entries.emplace_back(j, f.one());
      if (deg.sup_span->insert(unit).independent) deg.sup_sources.push_back(src);
    }
    const SparseMat<F>& up =
        l < L ? slice.degrees[static_cast<std::size_t>(l) + 1].d_boundary : slice.top_boundary;
    for (const auto& c : up.col) {
      if (deg.sup_span->insert(c).independent) deg.sup_sources.push_back(src);
      ++src;
    }
    deg.sup_dim = static_cast<int>(deg.sup_sources.size());
  }

  // Restricted boundaries plus the containment and chain-property checks.
  slice.degrees[0].inf_boundary = SparseMat<F>(0, static_cast<int>(slice.degrees[0].inf_basis.size()));
  slice.degrees[0].sup_boundary = SparseMat<F>(0, slice.degrees[0].sup_dim);
  for (int l = 1; l <= L; ++l) {
    auto& deg = slice.degrees[static_cast<std::size_t>(l)];
    auto& below = slice.degrees[static_cast<std::size_t>(l) - 1];

    deg.inf_boundary = SparseMat<F>(static_cast<int>(below.inf_basis.size()),
                                    static_cast<int>(deg.inf_basis.size()));
    for (std::size_t j = 0; j < deg.inf_basis.size(); ++j) {
      auto w = apply(f, deg.d_boundary, deg.inf_basis[j]);
      for (const auto& [r, c] : w.entries)
        if (r >= below.d_dim) throw std::logic_error("inf: boundary left the walk span");
      auto combo = below.inf_span->solve(w);
      if (!combo) throw std::logic_error("inf: boundary missed the lower inf span");
      deg.inf_boundary.col[j].entries = std::move(*combo);
    }

    std::vector<int> pos_of(static_cast<std::size_t>(below.sup_span->source_count()), -1);
    for (std::size_t i = 0; i < below.sup_sources.size(); ++i)
      pos_of[static_cast<std::size_t>(below.sup_sources[i])] = static_cast<int>(i);
    deg.sup_boundary = SparseMat<F>(below.sup_dim, deg.sup_dim);
    for (int col = 0; col < deg.sup_dim; ++col) {
      int source = deg.sup_sources[static_cast<std::size_t>(col)];
      if (source >= deg.d_dim) continue;  // boundary of a boundary vanishes
      auto combo = below.sup_span->solve(deg.d_boundary.col[static_cast<std::size_t>(source)]);
      if (!combo) throw std::logic_error("sup: boundary missed the lower sup span");
      for (const auto& [sidx, c] : *combo) {
        int pos = pos_of[static_cast<std::size_t>(sidx)];
        if (pos < 0) throw std::logic_error("sup: combination hit a dependent source");
        deg.sup_boundary.col[static_cast<std::size_t>(col)].entries.emplace_back(pos, c);
      }
    }
  }
  for (int l = 0; l <= L; ++l) {
    auto& deg = slice.degrees[static_cast<std::size_t>(l)];
    for (const auto& v : deg.inf_basis)
      if (!deg.sup_span->contains(v))
        throw std::logic_error("inf vector escapes the sup span");
    if (l >= 2) {
      check_composition_zero(f, slice.degrees[static_cast<std::size_t>(l) - 1].inf_boundary,
                             deg.inf_boundary, "inf: boundary of boundary is nonzero");
      check_composition_zero(f, slice.degrees[static_cast<std::size_t>(l) - 1].sup_boundary,
                             deg.sup_boundary, "sup: boundary of boundary is nonzero");
    }
  }
  return slice;
}

template ChainSlice<QField> build_chain_slice<QField>(const QField&, const WindowGraph&, int,
                                                      FieldSpec);
template ChainSlice<PField> build_chain_slice<PField>(const PField&, const WindowGraph&, int,
                                                      FieldSpec);

namespace {

template <class F>
PathHomologyReport path_homology_impl(const F& f, const WindowGraph& wg, int max_length,
                                      const FieldSpec& spec) {
  auto slice = build_chain_slice(f, wg, max_length, spec);
  PathHomologyReport rep;
  rep.window = slice.window;
  rep.max_length = max_length;
  rep.field = spec;
  std::vector<long long> inf_dims, sup_dims;
  std::vector<const SparseMat<F>*> inf_bnds{nullptr}, sup_bnds{nullptr};
  for (const auto& deg : slice.degrees) {
    rep.dim_d.push_back(deg.d_dim);
    inf_dims.push_back(static_cast<long long>(deg.inf_basis.size()));
    sup_dims.push_back(deg.sup_dim);
  }
  rep.dim_d.push_back(static_cast<long long>(slice.top_paths.size()));
  for (int l = 1; l <= max_length; ++l) {
    inf_bnds.push_back(&slice.degrees[static_cast<std::size_t>(l)].inf_boundary);
    sup_bnds.push_back(&slice.degrees[static_cast<std::size_t>(l)].sup_boundary);
  }
  inf_bnds.push_back(nullptr);  // degree max_length + 1 is out of reach
  sup_bnds.push_back(nullptr);
  rep.dim_inf = inf_dims;
  rep.dim_sup = sup_dims;
  rep.inf_betti = betti_from_complex(f, inf_dims, inf_bnds);
  rep.sup_betti = betti_from_complex(f, sup_dims, sup_bnds);
  return rep;
}

// Image of a walk under a vertex map in the regular module: the image
// sequence, or nullopt when it picks up a consecutive repeat and vanishes.
std::optional<Path> map_path(const Path& p, const VertexMap& phi) {
  Path img;
  img.reserve(p.size());
  for (int v : p) img.push_back(phi(v));
  for (std::size_t i = 1; i < img.size(); ++i)
    if (img[i] == img[i - 1]) return std::nullopt;
  return img;
}

// Looks up a walk's column index inside a degree's walk prefix.
template <class F>
int walk_index(const ChainDegree<F>& deg, const Path& p) {
  auto it = deg.row_index.find(p);
  if (it == deg.row_index.end() || it->second >= deg.d_dim) return -1;
  return it->second;
}

template <class F>
PathMapReport induced_path_map_impl(const F& f, const WindowGraph& src_g, const WindowGraph& tgt_g,
                                    const VertexMap& phi, int max_length, const FieldSpec& spec) {
  auto src = build_chain_slice(f, src_g, max_length, spec);
  auto tgt = build_chain_slice(f, tgt_g, max_length, spec);
  const int L = max_length;

  // Walk-span matrices, degrees 0..L.
  std::vector<SparseMat<F>> on_d(static_cast<std::size_t>(L) + 1);
  for (int l = 0; l <= L; ++l) {
    const auto& sdeg = src.degrees[static_cast<std::size_t>(l)];
    const auto& tdeg = tgt.degrees[static_cast<std::size_t>(l)];
    on_d[static_cast<std::size_t>(l)] = SparseMat<F>(tdeg.d_dim, sdeg.d_dim);
    for (int j = 0; j < sdeg.d_dim; ++j) {
      auto img = map_path(sdeg.rows[static_cast<std::size_t>(j)], phi);
      if (!img) continue;
      int idx = walk_index(tdeg, *img);
      if (idx < 0) throw std::logic_error("induced path map: image walk left the target basis");
      on_d[static_cast<std::size_t>(l)].col[static_cast<std::size_t>(j)].entries.emplace_back(
          idx, f.one());
    }
  }
  // Top-degree walk images, for the Sup restriction.
  std::map<Path, int> top_index;
  for (std::size_t j = 0; j < tgt.top_paths.size(); ++j)
    top_index.emplace(tgt.top_paths[j], static_cast<int>(j));
  std::vector<int> top_image(src.top_paths.size(), -1);
  for (std::size_t j = 0; j < src.top_paths.size(); ++j) {
    auto img = map_path(src.top_paths[j], phi);
    if (!img) continue;
    auto it = top_index.find(*img);
    if (it == top_index.end())
      throw std::logic_error("induced path map: image walk left the target basis");
    top_image[j] = it->second;
  }

  // Boundary-commutation square on every basis walk, in the ambient
  // regular module of the target.
  auto check_square = [&](const Path& p) {
    PathChain<F> single;
    single.emplace(p, f.one());
    PathChain<F> lhs;  // boundary of the image
    if (auto img = map_path(p, phi)) {
      PathChain<F> image_chain;
      image_chain.emplace(*img, f.one());
      lhs = regular_boundary(f, image_chain);
    }
    PathChain<F> rhs;  // image of the boundary
    for (const auto& [face, c] : regular_boundary(f, single)) {
      if (auto img = map_path(face, phi)) chain_add(f, rhs, *img, c);
    }
    if (lhs != rhs) throw std::logic_error("induced path map: boundary square does not commute");
  };
  for (int l = 1; l <= L; ++l)
    for (int j = 0; j < src.degrees[static_cast<std::size_t>(l)].d_dim; ++j)
      check_square(src.degrees[static_cast<std::size_t>(l)].rows[static_cast<std::size_t>(j)]);
  for (const auto& p : src.top_paths) check_square(p);

  PathMapReport rep;
  for (int l = 0; l <= L; ++l)
    rep.d_ranks.push_back(matrix_rank(f, on_d[static_cast<std::size_t>(l)]));

  // Restriction to Inf bases.
  std::vector<SparseMat<F>> on_inf(static_cast<std::size_t>(L) + 1);
  for (int l = 0; l <= L; ++l) {
    const auto& sdeg = src.degrees[static_cast<std::size_t>(l)];
    const auto& tdeg = tgt.degrees[static_cast<std::size_t>(l)];
    on_inf[static_cast<std::size_t>(l)] =
        SparseMat<F>(static_cast<int>(tdeg.inf_basis.size()),
                     static_cast<int>(sdeg.inf_basis.size()));
    for (std::size_t j = 0; j < sdeg.inf_basis.size(); ++j) {
      auto w = apply(f, on_d[static_cast<std::size_t>(l)], sdeg.inf_basis[j]);
      auto combo = tdeg.inf_span->solve(w);
      if (!combo) throw std::logic_error("induced path map: image left the target inf span");
      on_inf[static_cast<std::size_t>(l)].col[j].entries = std::move(*combo);
    }
  }

  // Restriction to Sup bases: walk-unit sources map through on_d; boundary
  // sources map to the boundary of the image walk one degree up.
  std::vector<SparseMat<F>> on_sup(static_cast<std::size_t>(L) + 1);
  for (int l = 0; l <= L; ++l) {
    const auto& sdeg = src.degrees[static_cast<std::size_t>(l)];
    const auto& tdeg = tgt.degrees[static_cast<std::size_t>(l)];
    std::vector<int> pos_of(static_cast<std::size_t>(tdeg.sup_span->source_count()), -1);
    for (std::size_t i = 0; i < tdeg.sup_sources.size(); ++i)
      pos_of[static_cast<std::size_t>(tdeg.sup_sources[i])] = static_cast<int>(i);
    const SparseMat<F>& tgt_up =
        l < L ? tgt.degrees[static_cast<std::size_t>(l) + 1].d_boundary : tgt.top_boundary;
    on_sup[static_cast<std::size_t>(l)] = SparseMat<F>(tdeg.sup_dim, sdeg.sup_dim);
    for (int col = 0; col < sdeg.sup_dim; ++col) {
      int source = sdeg.sup_sources[static_cast<std::size_t>(col)];
      SparseVec<F> image;  // ambient coordinates in the target degree
      if (source < sdeg.d_dim) {
        image = on_d[static_cast<std::size_t>(l)].col[static_cast<std::size_t>(source)];
      } else {
        int up_idx = source - sdeg.d_dim;
        int mapped = l < L ? [&] {
          const auto& up_walks = src.degrees[static_cast<std::size_t>(l) + 1];
          auto img = map_path(up_walks.rows[static_cast<std::size_t>(up_idx)], phi);
          if (!img) return -1;
          return walk_index(tgt.degrees[static_cast<std::size_t>(l) + 1], *img);
        }()
                           : top_image[static_cast<std::size_t>(up_idx)];
        if (mapped >= 0) image = tgt_up.col[static_cast<std::size_t>(mapped)];
      }
      if (image.empty()) continue;
      auto combo = tdeg.sup_span->solve(image);
      if (!combo) throw std::logic_error("induced path map: image left the target sup span");
      for (const auto& [sidx, c] : *combo) {
        int pos = pos_of[static_cast<std::size_t>(sidx)];
        if (pos < 0) throw std::logic_error("induced path map: dependent sup source in combo");
        on_sup[static_cast<std::size_t>(l)].col[static_cast<std::size_t>(col)].entries.emplace_back(
            pos, c);
      }
    }
  }

  // Homology ranks in the exact degrees 0..L-1.
  for (int l = 0; l + 1 <= L; ++l) {
    const auto& sdeg = src.degrees[static_cast<std::size_t>(l)];
    rep.inf_homology_ranks.push_back(homology_map_rank(
        f, sdeg.inf_boundary, tgt.degrees[static_cast<std::size_t>(l) + 1].inf_boundary,
        on_inf[static_cast<std::size_t>(l)]));
    rep.sup_homology_ranks.push_back(homology_map_rank(
        f, sdeg.sup_boundary, tgt.degrees[static_cast<std::size_t>(l) + 1].sup_boundary,
        on_sup[static_cast<std::size_t>(l)]));
  }
  return rep;
}

}  // namespace

PathHomologyReport path_homology(const WindowGraph& wg, int max_length, const FieldSpec& field) {
  return with_field(field,
                    [&](auto f) { return path_homology_impl(f, wg, max_length, field); });
}

PathMapReport induced_path_map(const WindowGraph& src, const WindowGraph& tgt,
                               const VertexMap& phi, PathMapKind kind,
                               const GeodesicReport* geodesic, int max_length,
                               const FieldSpec& src_field, const FieldSpec& tgt_field) {
  if (src_field != tgt_field)
    throw FieldMismatch("induced path map: source and target fields differ");
  if (!(src.window() == tgt.window()))
    throw BadParams("induced path map: windows must match");
  if (static_cast<int>(phi.to.size()) != src.vertex_count())
    throw BadParams("induced path map: vertex map has wrong domain size");
  if (kind == PathMapKind::CanonicalIdentity) {
    if (src.vertex_count() != tgt.vertex_count())
      throw BadParams("induced path map: identity comparison needs equal vertex sets");
    for (int v = 0; v < src.vertex_count(); ++v)
      if (phi(v) != v) throw BadParams("induced path map: identity comparison needs the identity map");
  } else {
    if (geodesic == nullptr)
      throw BadParams("induced path map: geodesic kind needs a certificate");
    if (!geodesic->is_morphism) throw NotAMorphism("induced path map: not a morphism");
    if (!geodesic->covers(src.window().upper))
      throw RadiusTooSmall("geodesic radius does not cover the window's upper threshold " +
                           half_label(src.window().upper));
  }
  return with_field(src_field, [&](auto f) {
    return induced_path_map_impl(f, src, tgt, phi, max_length, src_field);
  });
}

}  // namespace wincx
