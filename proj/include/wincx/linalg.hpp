#ifndef WINCX_LINALG_HPP
#define WINCX_LINALG_HPP

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wincx/errors.hpp"

namespace wincx {

// Sparse vector: (index, coefficient) entries with strictly ascending
// indices and no stored zeros.
template <class F>
struct SparseVec {
  using Scalar = typename F::Scalar;
  std::vector<std::pair<int, Scalar>> entries;

  bool empty() const { return entries.empty(); }
  int lead() const { return entries.front().first; }
  const Scalar& lead_coeff() const { return entries.front().second; }
};

// result += c * x, merging by index and dropping cancellations.
template <class F>
void add_scaled(const F& f, std::vector<std::pair<int, typename F::Scalar>>& result,
                const typename F::Scalar& c,
                const std::vector<std::pair<int, typename F::Scalar>>& x) {
  if (f.is_zero(c) || x.empty()) return;
  std::vector<std::pair<int, typename F::Scalar>> merged;
  merged.reserve(result.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < result.size() || j < x.size()) {
    if (j == x.size() || (i < result.size() && result[i].first < x[j].first)) {
      merged.push_back(result[i++]);
    } else if (i == result.size() || x[j].first < result[i].first) {
      merged.emplace_back(x[j].first, f.mul(c, x[j].second));
      ++j;
    } else {
      auto s = f.add(result[i].second, f.mul(c, x[j].second));
      if (!f.is_zero(s)) merged.emplace_back(result[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  result = std::move(merged);
}

template <class F>
void add_scaled(const F& f, SparseVec<F>& result, const typename F::Scalar& c,
                const SparseVec<F>& x) {
  add_scaled(f, result.entries, c, x.entries);
}

template <class F>
void scale_in_place(const F& f, SparseVec<F>& v, const typename F::Scalar& c) {
  for (auto& e : v.entries) e.second = f.mul(e.second, c);
}

// Incremental echelon basis with combination tracking.  Vectors inserted
// via insert() are "sources", indexed consecutively from zero; every stored
// echelon vector knows its expression over the sources, so membership
// queries return certificates.  Pivots are the first nonzero index of each
// reduced vector, making the whole computation deterministic.
template <class F>
class SpanBasis {
 public:
  using Scalar = typename F::Scalar;
  using Combo = std::vector<std::pair<int, Scalar>>;  // coefficients over source indices

  explicit SpanBasis(F field) : f_(std::move(field)) {}

  struct Reduction {
    bool independent;
    Combo combo;  // expression of the inserted vector over PREVIOUS sources, valid when !independent
  };

  // Adds v as the next source; returns whether it enlarged the span, and if
  // not, its expression over the previously inserted sources.
  Reduction insert(const SparseVec<F>& v) {
    SparseVec<F> residual = v;
    Combo combo;  // residual = source_k - sum(combo over earlier echelon combos)
    reduce(residual, combo);
    const int k = sources_++;
    if (residual.empty()) return Reduction{false, std::move(combo)};
    // Normalize lead coefficient to one; echelon vec = (source_k - combo) / lead.
    Scalar lead_inv = f_.inv(residual.lead_coeff());
    scale_in_place(f_, residual, lead_inv);
    Combo expr;
    expr.emplace_back(k, lead_inv);
    for (auto& [idx, c] : combo) {
      auto scaled = f_.mul(f_.neg(c), lead_inv);
      if (!f_.is_zero(scaled)) expr.emplace_back(idx, std::move(scaled));
    }
    std::sort(expr.begin(), expr.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    by_lead_.emplace(residual.lead(), static_cast<int>(elems_.size()));
    elems_.push_back(Elem{std::move(residual), std::move(expr)});
    return Reduction{true, {}};
  }

  // Expresses v over the inserted sources without modifying the basis.
  std::optional<Combo> solve(const SparseVec<F>& v) const {
    SparseVec<F> residual = v;
    Combo combo;
    reduce(residual, combo);
    if (!residual.empty()) return std::nullopt;
    return combo;
  }

  bool contains(const SparseVec<F>& v) const {
    SparseVec<F> residual = v;
    Combo combo;
    reduce(residual, combo);
    return residual.empty();
  }

  int rank() const { return static_cast<int>(elems_.size()); }
  int source_count() const { return sources_; }
  const F& field() const { return f_; }

  // Echelon representatives (unit lead coefficient, distinct lead indices).
  const SparseVec<F>& echelon_vector(int i) const { return elems_[static_cast<std::size_t>(i)].vec; }

 private:
  struct Elem {
    SparseVec<F> vec;  // lead coefficient one
    Combo expr;        // vec = sum expr_j * source_j
  };

  // Reduces residual against the echelon vectors; accumulates the source
  // combination so that (original v) = residual + sum combo_j * source_j.
  void reduce(SparseVec<F>& residual, Combo& combo) const {
    while (!residual.empty()) {
      auto it = by_lead_.find(residual.lead());
      if (it == by_lead_.end()) break;
      const Elem& e = elems_[static_cast<std::size_t>(it->second)];
      Scalar c = residual.lead_coeff();
      add_scaled(f_, residual, f_.neg(c), e.vec);
      Combo scaled;
      scaled.reserve(e.expr.size());
      for (const auto& [idx, a] : e.expr) scaled.emplace_back(idx, f_.mul(c, a));
      add_scaled(f_, combo, f_.one(), scaled);
    }
  }

  F f_;
  std::vector<Elem> elems_;
  std::unordered_map<int, int> by_lead_;
  int sources_ = 0;
};

// Column-major sparse matrix over a field.
template <class F>
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec<F>> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(static_cast<std::size_t>(c)) {}

  void set(int r, int c, typename F::Scalar v) {
    col[static_cast<std::size_t>(c)].entries.emplace_back(r, std::move(v));
  }
};

template <class F>
int matrix_rank(const F& f, const SparseMat<F>& m) {
  SpanBasis<F> basis(f);
  for (const auto& c : m.col) basis.insert(c);
  return basis.rank();
}

// Kernel vectors live in column-index space; one generator per dependent
// column, unit coefficient on that column.
template <class F>
std::vector<SparseVec<F>> kernel_basis(const F& f, const SparseMat<F>& m) {
  SpanBasis<F> basis(f);
  std::vector<SparseVec<F>> kernel;
  for (int j = 0; j < m.cols; ++j) {
    auto red = basis.insert(m.col[static_cast<std::size_t>(j)]);
    if (red.independent) continue;
    SparseVec<F> k;
    for (auto& [idx, c] : red.combo) k.entries.emplace_back(idx, f.neg(c));
    k.entries.emplace_back(j, f.one());
    kernel.push_back(std::move(k));
  }
  return kernel;
}

// Indices of the columns forming the deterministic image basis (first
// independent column wins).
template <class F>
std::vector<int> image_pivot_columns(const F& f, const SparseMat<F>& m) {
  SpanBasis<F> basis(f);
  std::vector<int> pivots;
  for (int j = 0; j < m.cols; ++j)
    if (basis.insert(m.col[static_cast<std::size_t>(j)]).independent) pivots.push_back(j);
  return pivots;
}

template <class F>
std::vector<SparseVec<F>> image_basis(const F& f, const SparseMat<F>& m) {
  std::vector<SparseVec<F>> out;
  for (int j : image_pivot_columns(f, m)) out.push_back(m.col[static_cast<std::size_t>(j)]);
  return out;
}

// Matrix-vector product: columns of m combined by the entries of x.
template <class F>
SparseVec<F> apply(const F& f, const SparseMat<F>& m, const SparseVec<F>& x) {
  SparseVec<F> out;
  for (const auto& [j, c] : x.entries) add_scaled(f, out, c, m.col[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace wincx

#endif
