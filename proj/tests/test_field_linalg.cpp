#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wincx/errors.hpp"
#include "wincx/field.hpp"
#include "wincx/linalg.hpp"

using namespace wincx;

namespace {

// Random sparse matrix plus its dense mirror for the oracle.
template <class F>
SparseMat<F> from_dense(const F& f, const std::vector<std::vector<long long>>& dense) {
  SparseMat<F> m(static_cast<int>(dense.size()),
                 dense.empty() ? 0 : static_cast<int>(dense[0].size()));
  for (std::size_t r = 0; r < dense.size(); ++r)
    for (std::size_t c = 0; c < dense[r].size(); ++c) {
      if (dense[r][c] == 0) continue;
      if constexpr (std::is_same_v<F, QField>) {
        m.set(static_cast<int>(r), static_cast<int>(c), mpq_class(dense[r][c]));
      } else {
        m.set(static_cast<int>(r), static_cast<int>(c), f.normalize(dense[r][c]));
      }
    }
  return m;
}

std::vector<std::vector<long long>> random_dense(std::mt19937_64& rng, int rows, int cols) {
  std::vector<std::vector<long long>> dense(static_cast<std::size_t>(rows),
                                            std::vector<long long>(static_cast<std::size_t>(cols)));
  for (auto& row : dense)
    for (auto& x : row) x = static_cast<long long>(rng() % 7) - 3;
  return dense;
}

}  // namespace

TEST_SUITE_BEGIN("field-linalg");

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("gf2") == FieldSpec::gf(2));
  CHECK(FieldSpec::parse("GF7") == FieldSpec::gf(7));
  CHECK(FieldSpec::parse("gf2").name() == "gf2");
  CHECK(FieldSpec::rationals().name() == "q");
  CHECK_THROWS_AS(FieldSpec::parse("gf"), BadParams);
  CHECK_THROWS_AS(FieldSpec::parse("gf0"), BadParams);
  CHECK_THROWS_AS(FieldSpec::parse("gf4"), BadParams);   // not prime
  CHECK_THROWS_AS(FieldSpec::parse("zp5"), BadParams);
}

TEST_CASE("prime field arithmetic satisfies the field laws") {
  for (long long p : {2LL, 3LL, 5LL, 7LL, 97LL}) {
    const PField f(p);
    CHECK(f.one() == 1 % p);
    for (long long a = 0; a < p; ++a) {
      CHECK(f.add(f.normalize(a), f.neg(f.normalize(a))) == 0);
      for (long long b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == (a + b) % p);
        CHECK(f.sub(a, b) == ((a - b) % p + p) % p);
        CHECK(f.mul(a, b) == a * b % p);
      }
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.div(f.one(), a) == f.inv(a));
      }
    }
    CHECK(f.normalize(-1) == p - 1);
  }
}

TEST_CASE("rational field uses exact arithmetic") {
  const QField f;
  const mpq_class third(1, 3);
  CHECK(f.mul(third, mpq_class(3)) == 1);
  CHECK(f.add(third, third) == mpq_class(2, 3));
  CHECK(f.is_zero(f.sub(third, third)));
  CHECK(f.inv(mpq_class(7, 2)) == mpq_class(2, 7));
}

TEST_CASE("sparse accumulation merges indices and drops cancellations") {
  const QField f;
  SparseVec<QField> a;
  a.entries = {{0, mpq_class(1)}, {3, mpq_class(2)}};
  SparseVec<QField> b;
  b.entries = {{1, mpq_class(5)}, {3, mpq_class(-1)}};
  add_scaled(f, a, mpq_class(2), b);
  REQUIRE(a.entries.size() == 2);
  CHECK(a.entries[0] == std::pair<int, mpq_class>{0, mpq_class(1)});
  CHECK(a.entries[1] == std::pair<int, mpq_class>{1, mpq_class(10)});  // index 3 cancelled
}

TEST_CASE("matrix rank agrees with dense elimination over both fields") {
  std::mt19937_64 rng(0x5eed2001);
  for (int i = 0; i < 30; ++i) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 7);
    const auto dense = random_dense(rng, rows, cols);
    {
      const QField f;
      std::vector<std::vector<mpq_class>> q(dense.size(), std::vector<mpq_class>(dense[0].size()));
      for (std::size_t r = 0; r < dense.size(); ++r)
        for (std::size_t c = 0; c < dense[0].size(); ++c) q[r][c] = dense[r][c];
      CHECK(matrix_rank(f, from_dense(f, dense)) == oracle::rank_q(std::move(q)));
    }
    for (long long p : {2LL, 3LL, 5LL}) {
      const PField f(p);
      CHECK(matrix_rank(f, from_dense(f, dense)) == oracle::rank_gf(dense, p));
    }
  }
}

TEST_CASE("kernel basis: generators vanish and count matches nullity") {
  std::mt19937_64 rng(0x5eed2002);
  for (int i = 0; i < 20; ++i) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const auto dense = random_dense(rng, rows, cols);
    const QField f;
    const SparseMat<QField> m = from_dense(f, dense);
    const auto kernel = kernel_basis(f, m);
    CHECK(static_cast<int>(kernel.size()) == m.cols - matrix_rank(f, m));
    for (const auto& k : kernel) {
      CHECK_FALSE(k.empty());
      CHECK(apply(f, m, k).empty());
    }
  }
}

TEST_CASE("span basis certificates reproduce inserted vectors") {
  const QField f;
  SpanBasis<QField> basis(f);
  std::vector<SparseVec<QField>> sources;
  std::mt19937_64 rng(0x5eed2003);
  for (int i = 0; i < 12; ++i) {
    SparseVec<QField> v;
    for (int r = 0; r < 5; ++r) {
      const long long x = static_cast<long long>(rng() % 5) - 2;
      if (x != 0) v.entries.emplace_back(r, mpq_class(x));
    }
    sources.push_back(v);
    const auto red = basis.insert(v);
    if (!red.independent) {
      // Dependent vector: the certificate combination over earlier sources
      // must reproduce it exactly.
      SparseVec<QField> rebuilt;
      for (const auto& [idx, c] : red.combo)
        add_scaled(f, rebuilt, c, sources[static_cast<std::size_t>(idx)]);
      CHECK(rebuilt.entries == v.entries);
    }
  }
  CHECK(basis.rank() <= 5);
  CHECK(basis.source_count() == 12);
  // solve() finds combinations for vectors in the span and rejects others.
  SparseVec<QField> inside;
  if (basis.rank() > 0) {
    inside = basis.echelon_vector(0);
    CHECK(basis.contains(inside));
    const auto combo = basis.solve(inside);
    REQUIRE(combo.has_value());
    SparseVec<QField> rebuilt;
    for (const auto& [idx, c] : *combo)
      add_scaled(f, rebuilt, c, sources[static_cast<std::size_t>(idx)]);
    CHECK(rebuilt.entries == inside.entries);
  }
}

TEST_CASE("span basis over gf2 behaves identically") {
  const PField f(2);
  SpanBasis<PField> basis(f);
  SparseVec<PField> e0, e1, sum;
  e0.entries = {{0, 1}};
  e1.entries = {{1, 1}};
  sum.entries = {{0, 1}, {1, 1}};
  CHECK(basis.insert(e0).independent);
  CHECK(basis.insert(e1).independent);
  const auto red = basis.insert(sum);
  CHECK_FALSE(red.independent);
  CHECK(basis.rank() == 2);
}

TEST_SUITE_END();
