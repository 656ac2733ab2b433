#ifndef WINCX_PATH_HPP
#define WINCX_PATH_HPP

#include <map>
#include <optional>
#include <vector>

#include "wincx/field.hpp"
#include "wincx/homology.hpp"
#include "wincx/linalg.hpp"
#include "wincx/morphism.hpp"
#include "wincx/window.hpp"

namespace wincx {

// Vertex sequence; a path with k+1 vertices has degree (length) k.
// Consecutive vertices are distinct in every basis path because window
// distances are at least 2.
using Path = std::vector<int>;

struct PathBasis {
  Window window;
  int length = 0;
  std::vector<Path> paths;  // lexicographically sorted
};

// All walks of the given length in the window graph.
PathBasis path_basis(const WindowGraph& wg, int length);

Path reversed_path(const Path& p);

// Face of p with vertex i removed, or nullopt when the removal creates a
// consecutive repeat (such faces vanish in the regular-path module).
std::optional<Path> regular_face(const Path& p, std::size_t i);

// Sparse chain in the regular-path module: path -> coefficient, no zeros.
template <class F>
using PathChain = std::map<Path, typename F::Scalar>;

template <class F>
void chain_add(const F& f, PathChain<F>& acc, const Path& p, const typename F::Scalar& c) {
  if (f.is_zero(c)) return;
  auto [it, inserted] = acc.emplace(p, c);
  if (inserted) return;
  it->second = f.add(it->second, c);
  if (f.is_zero(it->second)) acc.erase(it);
}

// Alternating face sum with non-regular faces dropped.
template <class F>
PathChain<F> regular_boundary(const F& f, const PathChain<F>& chain) {
  PathChain<F> out;
  for (const auto& [p, coeff] : chain) {
    if (p.size() < 2) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto face = regular_face(p, i);
      if (!face) continue;
      chain_add(f, out, *face, i % 2 == 0 ? coeff : f.neg(coeff));
    }
  }
  return out;
}

// Reversal of every support path, extended linearly (no sign convention is
// asserted; see the chain-level tests for what is and is not invariant).
template <class F>
PathChain<F> z2_action(const F& f, const PathChain<F>& chain) {
  PathChain<F> out;
  for (const auto& [p, coeff] : chain) chain_add(f, out, reversed_path(p), coeff);
  return out;
}

// One degree of the Inf/Sup pair over a window:
//   rows        ambient regular paths of this degree: the window walks
//               (the D basis) first, then every extra face showing up in
//               boundaries of one-higher window walks;
//   inf_basis   basis of D_l intersected with the boundary preimage of
//               D_{l-1}, in D-coordinate space;
//   sup source  j < d_dim: unit vector of the j-th window walk;
//               j >= d_dim: boundary of the (j - d_dim)-th walk one degree up;
//   sup_sources indices of the sources forming the deterministic Sup basis.
template <class F>
struct ChainDegree {
  std::vector<Path> rows;
  int d_dim = 0;
  std::map<Path, int> row_index;
  SparseMat<F> d_boundary;  // D_l columns -> ambient rows one degree down
  std::vector<SparseVec<F>> inf_basis;
  std::vector<int> sup_sources;
  int sup_dim = 0;
  SparseMat<F> inf_boundary;  // Inf_l -> Inf_{l-1}, restricted bases
  SparseMat<F> sup_boundary;  // Sup_l -> Sup_{l-1}, restricted bases
  std::optional<SpanBasis<F>> inf_span;  // sources = inf_basis vectors
  std::optional<SpanBasis<F>> sup_span;  // sources = all sup source columns
};

// The Inf and Sup chain complexes of a window, through degree max_length.
// Window walks one degree past max_length are enumerated so the Sup spans
// at the top degree are exact; homology at max_length itself stays
// truncated (it would need walks two degrees up).
template <class F>
struct ChainSlice {
  Window window;
  int max_length = 0;
  FieldSpec spec;
  std::vector<ChainDegree<F>> degrees;  // 0..max_length; window walks are the
                                        // first d_dim rows of each degree
  std::vector<Path> top_paths;          // walks one degree past max_length,
                                        // kept for the Sup construction
  SparseMat<F> top_boundary;            // those walks' boundaries, in the
                                        // ambient rows of degree max_length
};

template <class F>
ChainSlice<F> build_chain_slice(const F& f, const WindowGraph& wg, int max_length, FieldSpec spec);

struct PathHomologyReport {
  Window window;
  int max_length = 0;
  FieldSpec field;
  std::vector<long long> dim_d;    // window-walk counts per degree 0..max_length+1
  std::vector<long long> dim_inf;  // per degree 0..max_length
  std::vector<long long> dim_sup;
  BettiTable inf_betti;  // degrees 0..max_length, top flagged truncated
  BettiTable sup_betti;
};

PathHomologyReport path_homology(const WindowGraph& wg, int max_length, const FieldSpec& field);

// How a vertex map is justified to act on window walks.
enum class PathMapKind {
  CanonicalIdentity,  // vertex-identity comparison between a digraph and its underlying graph
  Geodesic,           // arbitrary morphism with a geodesic certificate for the window
};

struct PathMapReport {
  std::vector<long long> d_ranks;             // rank of the map on window-walk spans, 0..max_length
  std::vector<long long> inf_homology_ranks;  // rank of the induced map on Inf homology, 0..max_length-1
  std::vector<long long> sup_homology_ranks;  // same for Sup
};

// Induced chain map on window walks, restricted to Inf and Sup, with the
// boundary-commutation square checked on every basis walk.  Requires equal
// windows and equal coefficient fields (FieldMismatch); Geodesic kind
// additionally requires the certificate to cover the window's upper
// threshold (RadiusTooSmall).
PathMapReport induced_path_map(const WindowGraph& src, const WindowGraph& tgt,
                               const VertexMap& phi, PathMapKind kind,
                               const GeodesicReport* geodesic, int max_length,
                               const FieldSpec& src_field, const FieldSpec& tgt_field);

}  // namespace wincx

#endif
