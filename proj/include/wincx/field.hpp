#ifndef WINCX_FIELD_HPP
#define WINCX_FIELD_HPP

#include <gmpxx.h>

#include <string>

#include "wincx/errors.hpp"

namespace wincx {

// Exact rational coefficients.  Scalars are always kept in canonical
// (reduced) form by mpq_class.
struct QField {
  using Scalar = mpq_class;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar inv(const Scalar& a) const { return Scalar(1) / a; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  bool eq(const Scalar& a, const Scalar& b) const { return cmp(a, b) == 0; }
  std::string to_string(const Scalar& a) const { return a.get_str(); }
};

// Prime-field coefficients with a runtime modulus; scalars are least
// non-negative residues.
struct PField {
  using Scalar = long long;

  long long p;

  explicit PField(long long prime) : p(prime) {
    if (p < 2) throw BadParams("prime field: modulus must be >= 2");
  }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % p; }
  bool is_zero(Scalar a) const { return a == 0; }
  Scalar normalize(long long a) const {
    long long r = a % p;
    return r < 0 ? r + p : r;
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
  Scalar add(Scalar a, Scalar b) const {
    long long r = a + b;
    return r >= p ? r - p : r;
  }
  Scalar sub(Scalar a, Scalar b) const {
    long long r = a - b;
    return r < 0 ? r + p : r;
  }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p; }
  Scalar inv(Scalar a) const {
    // Extended Euclid; requires gcd(a, p) = 1, guaranteed for prime p.
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw BadParams("prime field: non-invertible element, modulus not prime");
    return t < 0 ? t + p : t;
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  bool eq(Scalar a, Scalar b) const { return a == b; }
  std::string to_string(Scalar a) const { return std::to_string(a); }
};

// Runtime choice of coefficient field, parsed from "q", "gf2", or "gf<p>".
struct FieldSpec {
  bool rational = true;
  long long prime = 0;

  static FieldSpec rationals() { return FieldSpec{true, 0}; }
  static FieldSpec gf(long long p) { return FieldSpec{false, p}; }
  static FieldSpec parse(const std::string& text);

  std::string name() const { return rational ? "q" : "gf" + std::to_string(prime); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.rational == b.rational && (a.rational || a.prime == b.prime);
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

inline FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 2 && (text.rfind("gf", 0) == 0 || text.rfind("GF", 0) == 0)) {
    long long p = 0;
    for (std::size_t i = 2; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9') throw BadParams("coefficient field: expected q, gf2, or gf<p>");
      p = p * 10 + (c - '0');
      if (p > 2000003) throw BadParams("coefficient field: modulus too large");
    }
    if (p < 2) throw BadParams("coefficient field: modulus must be >= 2");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw BadParams("coefficient field: modulus must be prime");
    return gf(p);
  }
  throw BadParams("coefficient field: expected q, gf2, or gf<p>");
}

// Dispatches fn(field_instance) on the runtime field choice.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.rational) return fn(QField{});
  return fn(PField{spec.prime});
}

}  // namespace wincx

#endif
