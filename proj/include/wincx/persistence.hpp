#ifndef WINCX_PERSISTENCE_HPP
#define WINCX_PERSISTENCE_HPP

#include <vector>

#include "wincx/complex.hpp"
#include "wincx/field.hpp"
#include "wincx/homology.hpp"
#include "wincx/morphism.hpp"

namespace wincx {

// Betti numbers of the flag complex over the chosen field.  Needs simplices
// materialized one dimension past degree_cap for exact top values; when the
// complex is capped right at degree_cap the top degree is flagged truncated.
BettiTable simplicial_homology(const WindowComplex& c, int degree_cap, const FieldSpec& field);

// The two one-parameter slices of the double filtration: complexes grow as
// the lower threshold decreases (at unbounded upper threshold), and as the
// upper threshold increases (at lower threshold 1).
enum class SliceDirection { LowerDecreasing, UpperIncreasing };

struct Bar {
  int degree = 0;
  Dist birth = 0;   // threshold value where the class appears
  Dist death = 0;   // threshold value where it dies (meaningful when !open)
  bool open = false;  // still alive at the end of the slice
};

struct Barcode {
  SliceDirection direction = SliceDirection::LowerDecreasing;
  std::vector<Dist> thresholds;              // in filtration order
  std::vector<Bar> bars;                     // degrees 0..degree_cap
  std::vector<std::vector<long long>> alive;  // [threshold index][degree]
};

// Boundary-matrix column reduction over the slice's inclusion order.  The
// widest window graph must carry window (1, inf]; thresholds come from its
// distance values.
Barcode persistence_slice(const WindowGraph& widest, SliceDirection direction, int degree_cap,
                          const FieldSpec& field);

// Rank of the homology map induced by every comparable grid inclusion
// Ind(n_src, m_src) -> Ind(n_dst, m_dst), n_dst <= n_src, m_src <= m_dst.
struct RankInvariant {
  std::vector<Dist> lower_grid;
  std::vector<Dist> upper_grid;
  struct Entry {
    Dist n_src, m_src, n_dst, m_dst;
    int degree;
    long long rank;
  };
  std::vector<Entry> entries;
};

RankInvariant rank_invariant(const WindowGraph& widest, int degree_cap, const FieldSpec& field);

// Per-degree rank of the map induced on homology by a simplicial vertex
// map between two window complexes.  Fields must agree (FieldMismatch);
// every mapped simplex must land in the target (NotASimplicialMap).
std::vector<long long> induced_homology_rank(const WindowComplex& src, const WindowComplex& tgt,
                                             const VertexMap& phi, int degree_cap,
                                             const FieldSpec& src_field,
                                             const FieldSpec& tgt_field);

}  // namespace wincx

#endif
