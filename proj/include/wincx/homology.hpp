#ifndef WINCX_HOMOLOGY_HPP
#define WINCX_HOMOLOGY_HPP

#include <stdexcept>
#include <vector>

#include "wincx/linalg.hpp"

namespace wincx {

// Betti numbers per degree with the chain dimensions they came from.  A
// degree is flagged truncated when the incoming boundary one degree up was
// not available, making the reported value an upper bound.
struct BettiTable {
  std::vector<long long> chain_dims;
  std::vector<long long> betti;
  std::vector<bool> truncated;
};

// Rank-nullity homology of a finite chain complex.  dims[l] is the chain
// dimension at degree l; boundaries[l] maps degree l to degree l-1 and must
// be present for 1 <= l < dims.size().  boundaries[dims.size()], when
// supplied, makes the top degree exact; pass nullptr to flag it truncated.
// Validates del o del = 0 and the Euler identity
//   sum (-1)^l dims[l] = sum (-1)^l betti[l] + (-1)^L rank(del_{L+1})
// on every call, throwing std::logic_error on violation.
template <class F>
BettiTable betti_from_complex(const F& f, const std::vector<long long>& dims,
                              const std::vector<const SparseMat<F>*>& boundaries) {
  const std::size_t levels = dims.size();
  if (boundaries.size() != levels + 1)
    throw std::logic_error("betti: boundary list must have one slot past the top degree");
  std::vector<long long> rank(levels + 2, 0);
  for (std::size_t l = 1; l <= levels; ++l) {
    const SparseMat<F>* m = boundaries[l];
    if (m == nullptr) {
      if (l < levels) throw std::logic_error("betti: missing interior boundary matrix");
      continue;
    }
    rank[l] = matrix_rank(f, *m);
    if (l >= 2 && boundaries[l - 1] != nullptr) {
      for (const auto& c : m->col) {
        auto composed = apply(f, *boundaries[l - 1], c);
        if (!composed.empty()) throw std::logic_error("betti: boundary of boundary is nonzero");
      }
    }
  }
  BettiTable out;
  out.chain_dims = dims;
  out.betti.resize(levels);
  out.truncated.assign(levels, false);
  long long euler_chain = 0, euler_betti = 0;
  for (std::size_t l = 0; l < levels; ++l) {
    out.betti[l] = dims[l] - rank[l] - rank[l + 1];
    if (l + 1 == levels && boundaries[levels] == nullptr) out.truncated[l] = true;
    if (out.betti[l] < 0) throw std::logic_error("betti: negative rank arithmetic");
    long long sign = (l % 2 == 0) ? 1 : -1;
    euler_chain += sign * dims[l];
    euler_betti += sign * out.betti[l];
  }
  long long top_sign = (levels % 2 == 1) ? 1 : -1;  // (-1)^L with L = levels-1
  if (euler_chain != euler_betti + top_sign * rank[levels])
    throw std::logic_error("betti: Euler identity violated");
  return out;
}

// Rank of the map induced on degree-l homology by per-degree chain maps.
//   src_boundary_l: degree l -> l-1 in the source (zero-matrix for l = 0);
//   tgt_boundary_up: degree l+1 -> l in the target;
//   map_l: source degree-l chains -> target degree-l chains.
// rank = rank([map(Z_src) | B_tgt]) - rank(B_tgt).
template <class F>
long long homology_map_rank(const F& f, const SparseMat<F>& src_boundary_l,
                            const SparseMat<F>& tgt_boundary_up, const SparseMat<F>& map_l) {
  SpanBasis<F> span(f);
  for (const auto& c : tgt_boundary_up.col) span.insert(c);
  const int boundary_rank = span.rank();
  for (const auto& z : kernel_basis(f, src_boundary_l)) span.insert(apply(f, map_l, z));
  return span.rank() - boundary_rank;
}

}  // namespace wincx

#endif
