#include "wincx/capacity.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "wincx/errors.hpp"
#include "wincx/product.hpp"

namespace wincx {

namespace {

using Bits = std::vector<std::uint64_t>;

template <class Fn>
void for_each_bit(const Bits& bits, Fn&& fn) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t x = bits[w];
    while (x) {
      fn(static_cast<int>(w * 64) + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

// Tomita-style maximum clique search over the window graph: vertices ranked
// by descending degree, candidates greedily colored, branches processed in
// descending color so the |clique| + color bound prunes whole suffixes.
class CliqueSolver {
 public:
  CliqueSolver(const WindowGraph& wg, long long budget) : budget_(budget) {
    if (budget_ < 1) throw BadParams("independence search: node budget must be >= 1");
    n_ = wg.vertex_count();
    words_ = static_cast<std::size_t>(n_ + 63) / 64;
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return wg.neighbors(a).size() > wg.neighbors(b).size();
    });
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    std::vector<int> rank(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) rank[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n_; ++i)
      for (int v : wg.neighbors(order_[static_cast<std::size_t>(i)])) {
        int j = rank[static_cast<std::size_t>(v)];
        adj_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6)] |=
            1ULL << (j & 63);
      }
  }

  AlphaResult run() {
    if (n_ == 0) return AlphaResult{0, {}, 0};
    Bits all(words_, ~0ULL);
    if (n_ % 64 != 0) all.back() = (1ULL << (n_ % 64)) - 1;
    std::vector<std::pair<int, int>> seq;
    color(all, seq);
    upper0_ = seq.empty() ? 0 : seq.back().second;
    expand(all);
    std::vector<int> witness;
    witness.reserve(best_set_.size());
    for (int r : best_set_) witness.push_back(order_[static_cast<std::size_t>(r)]);
    std::sort(witness.begin(), witness.end());
    return AlphaResult{best_, std::move(witness), nodes_};
  }

 private:
  const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }

  bool meets(const Bits& bits, int v) const {
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w < words_; ++w)
      if (bits[w] & r[w]) return true;
    return false;
  }

  // Greedy coloring; emits (vertex, color) grouped by ascending color.
  void color(const Bits& cand, std::vector<std::pair<int, int>>& out) const {
    out.clear();
    std::vector<Bits> classes;
    std::vector<std::vector<int>> members;
    for_each_bit(cand, [&](int v) {
      std::size_t k = 0;
      while (k < classes.size() && meets(classes[k], v)) ++k;
      if (k == classes.size()) {
        classes.emplace_back(words_, 0);
        members.emplace_back();
      }
      classes[k][static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63);
      members[k].push_back(v);
    });
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int v : members[k]) out.emplace_back(v, static_cast<int>(k) + 1);
  }

  void expand(Bits& cand) {
    if (++nodes_ > static_cast<std::uint64_t>(budget_)) {
      // cur_ is itself independent, so report it before abandoning the search.
      if (static_cast<long long>(cur_.size()) > best_) {
        best_ = static_cast<long long>(cur_.size());
        best_set_ = cur_;
      }
      throw Timeout("independence-number search budget exhausted", best_, upper0_, nodes_);
    }
    std::vector<std::pair<int, int>> seq;
    color(cand, seq);
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
      auto [v, c] = seq[static_cast<std::size_t>(i)];
      if (static_cast<long long>(cur_.size()) + c <= best_) return;
      cand[static_cast<std::size_t>(v >> 6)] &= ~(1ULL << (v & 63));
      Bits next(words_);
      const std::uint64_t* r = row(v);
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = cand[w] & r[w];
        any |= next[w] != 0;
      }
      cur_.push_back(v);
      if (!any) {
        if (static_cast<long long>(cur_.size()) > best_) {
          best_ = static_cast<long long>(cur_.size());
          best_set_ = cur_;
        }
      } else {
        expand(next);
      }
      cur_.pop_back();
    }
  }

  int n_ = 0;
  std::size_t words_ = 0;
  long long budget_ = 0;
  std::vector<int> order_;
  Bits adj_;
  long long best_ = 0;
  long long upper0_ = 0;
  std::vector<int> cur_, best_set_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

AlphaResult alpha_witness(const WindowGraph& wg, long long node_budget) {
  return CliqueSolver(wg, node_budget).run();
}

long long alpha(const WindowGraph& wg, long long node_budget) {
  return alpha_witness(wg, node_budget).value;
}

std::string CapacityEstimate::bound_label() const {
  if (best_p == 1) return std::to_string(best_alpha);
  return std::to_string(best_alpha) + "^(1/" + std::to_string(best_p) + ")";
}

double CapacityEstimate::bound_estimate() const {
  return std::pow(static_cast<double>(best_alpha), 1.0 / best_p);
}

namespace {

// True when a^(1/pa) < b^(1/pb), compared exactly as a^pb vs b^pa.
bool root_less(long long a, int pa, long long b, int pb) {
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(pb));
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(pa));
  return lhs < rhs;
}

template <class G>
CapacityEstimate capacity_impl(const G& g, Window w, int p_max, long long budget) {
  if (p_max < 1) throw BadParams("capacity: p_max must be >= 1");
  CapacityEstimate out;
  out.window = w;
  out.p_max = p_max;
  for (int p = 1; p <= p_max; ++p) {
    if (g.vertex_count() == 0) {
      out.alpha_by_power.push_back(0);
      continue;
    }
    WindowGraph wg(power_distance_table(g, p), w);
    out.alpha_by_power.push_back(alpha(wg, budget));
  }
  out.best_p = 1;
  out.best_alpha = out.alpha_by_power[0];
  for (int p = 2; p <= p_max; ++p) {
    long long a = out.alpha_by_power[static_cast<std::size_t>(p) - 1];
    if (root_less(out.best_alpha, out.best_p, a, p)) {
      out.best_p = p;
      out.best_alpha = a;
    }
  }
  for (int p = 1; p <= p_max; ++p)
    for (int q = p; p + q <= p_max; ++q) {
      SupermultCheck chk;
      chk.p = p;
      chk.q = q;
      chk.alpha_p = out.alpha_by_power[static_cast<std::size_t>(p) - 1];
      chk.alpha_q = out.alpha_by_power[static_cast<std::size_t>(q) - 1];
      chk.alpha_pq = out.alpha_by_power[static_cast<std::size_t>(p + q) - 1];
      chk.holds = chk.alpha_pq >= chk.alpha_p * chk.alpha_q;
      out.supermult.push_back(chk);
    }
  return out;
}

}  // namespace

CapacityEstimate capacity_bound(const Digraph& g, Window w, int p_max, long long node_budget) {
  return capacity_impl(g, w, p_max, node_budget);
}

CapacityEstimate capacity_bound(const Graph& g, Window w, int p_max, long long node_budget) {
  return capacity_impl(g, w, p_max, node_budget);
}

bool CapacityInequalityReport::asserted_hold() const {
  for (const auto& c : lower) {
    if (c.ab_asserted && !c.ab_holds) return false;
    if (c.bc_asserted && !c.bc_holds) return false;
  }
  for (const auto& c : upper) {
    if (c.ab_asserted && !c.ab_holds) return false;
    if (c.bc_asserted && !c.bc_holds) return false;
  }
  return true;
}

bool CapacityInequalityReport::measured_hold() const {
  for (const auto& c : lower)
    if (!c.ab_holds || !c.bc_holds) return false;
  for (const auto& c : upper)
    if (!c.ab_holds || !c.bc_holds) return false;
  return true;
}

CapacityInequalityReport verify_capacity_inequalities(const Digraph& g, int p_max, Dist q,
                                                      long long node_budget) {
  if (p_max < 1) throw BadParams("verify capacity: p_max must be >= 1");
  if (q < 1 || q == kInfDist)
    throw BadParams("verify capacity: threshold must be finite and >= 1");
  if (g.vertex_count() == 0) throw BadParams("verify capacity: digraph must be nonempty");
  CapacityInequalityReport out;
  out.lower_window = Window(q, kInfDist);
  if (q >= 2) out.upper_window = Window(1, q);
  const Graph underlying = underlying_graph(g);
  for (int p = 1; p <= p_max; ++p) {
    const DistanceTable d_graph_power = power_distance_table(underlying, p);
    const DistanceTable d_digraph_power = power_distance_table(g, p);
    const DistanceTable d_pi_power = distance_table(underlying_graph(strong_power(g, p)));
    auto a = [&](const DistanceTable& t, Window w) { return alpha(WindowGraph(t, w), node_budget); };
    {
      CapacityChainCheck chk;
      chk.p = p;
      chk.alpha_a = a(d_graph_power, out.lower_window);
      chk.alpha_b = a(d_pi_power, out.lower_window);
      chk.alpha_c = a(d_digraph_power, out.lower_window);
      chk.ab_holds = chk.alpha_a <= chk.alpha_b;
      chk.bc_holds = chk.alpha_b <= chk.alpha_c;
      chk.ab_asserted = true;  // extra edges only shrink distances
      chk.bc_asserted = true;  // forgetting arc directions only shrinks distances
      out.lower.push_back(chk);
    }
    if (out.upper_window) {
      CapacityChainCheck chk;
      chk.p = p;
      chk.alpha_a = a(d_digraph_power, *out.upper_window);
      chk.alpha_b = a(d_pi_power, *out.upper_window);
      chk.alpha_c = a(d_graph_power, *out.upper_window);
      chk.ab_holds = chk.alpha_a <= chk.alpha_b;
      chk.bc_holds = chk.alpha_b <= chk.alpha_c;
      // Admissible pairs stay non-adjacent, so dropping directions keeps
      // them admissible; the second comparison can genuinely fail because
      // the graph power gains edges inside the window.
      chk.ab_asserted = true;
      chk.bc_asserted = false;
      out.upper.push_back(chk);
    }
  }
  return out;
}

std::vector<GeodesicPowerCheck> verify_geodesic_power_monotonicity(
    const Digraph& src, const Digraph& tgt, const VertexMap& phi, Window w, int p_max,
    long long node_budget) {
  if (p_max < 1) throw BadParams("geodesic power check: p_max must be >= 1");
  if (static_cast<int>(phi.to.size()) != src.vertex_count())
    throw BadParams("geodesic power check: map domain size mismatch");
  if (!check_morphism(src, tgt, phi))
    throw NotAMorphism("geodesic power check: vertex map is not a morphism");
  std::vector<GeodesicPowerCheck> out;
  for (int p = 1; p <= p_max; ++p) {
    MixedRadix src_codec{src.vertex_count(), p};
    MixedRadix tgt_codec{tgt.vertex_count(), p};
    const long long n_src = src_codec.size();
    tgt_codec.size();
    VertexMap phi_p;
    phi_p.to.resize(static_cast<std::size_t>(n_src));
    for (long long id = 0; id < n_src; ++id) {
      auto coords = src_codec.decode(static_cast<int>(id));
      for (int& c : coords) c = phi(c);
      phi_p.to[static_cast<std::size_t>(id)] = tgt_codec.encode(coords);
    }
    const DistanceTable dsrc = power_distance_table(src, p);
    const DistanceTable dtgt = power_distance_table(tgt, p);
    const GeodesicReport rep = geodesic_report_from_tables(dsrc, dtgt, phi_p);
    GeodesicPowerCheck chk;
    chk.p = p;
    chk.power_map_covers = rep.covers(w.upper);
    chk.alpha_src = alpha(WindowGraph(dsrc, w), node_budget);
    chk.alpha_tgt = alpha(WindowGraph(dtgt, w), node_budget);
    chk.holds = chk.alpha_src <= chk.alpha_tgt;
    out.push_back(chk);
  }
  return out;
}

}  // namespace wincx
