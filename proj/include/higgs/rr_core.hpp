#pragma once

// Numerical classes (rank, degree) of vector bundles on a genus-g curve and
// the Riemann-Roch arithmetic on them. Degrees are int64 for concrete
// classes or LinearForm for symbolic ones; ranks are always concrete.

#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include "higgs/errors.hpp"
#include "higgs/linear_form.hpp"
#include "higgs/rational.hpp"

namespace higgs {

class Curve {
 public:
  explicit Curve(std::int64_t genus) : genus_(genus) {
    if (genus < 2) throw DomainError("curve genus must be >= 2, got " + std::to_string(genus));
  }
  std::int64_t genus() const { return genus_; }
  /// g - 1, the factor that multiplies every rank in Riemann-Roch.
  std::int64_t g1() const { return genus_ - 1; }
  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  std::int64_t genus_;
};

/// Arithmetic on the degree slot. The int64 specialisation is overflow
/// checked; symbolic forms use their own exact operators.
template <class Deg>
struct DegreeOps {
  static Deg add(const Deg& a, const Deg& b) { return a + b; }
  static Deg sub(const Deg& a, const Deg& b) { return a - b; }
  static Deg neg(const Deg& a) { return -a; }
  static Deg scale(std::int64_t k, const Deg& a) { return Rational(k) * a; }
  static bool is_zero(const Deg& a) { return a.is_zero(); }
};

template <>
struct DegreeOps<std::int64_t> {
  static std::int64_t add(std::int64_t a, std::int64_t b) { return checked::add(a, b); }
  static std::int64_t sub(std::int64_t a, std::int64_t b) { return checked::sub(a, b); }
  static std::int64_t neg(std::int64_t a) { return checked::neg(a); }
  static std::int64_t scale(std::int64_t k, std::int64_t a) { return checked::mul(k, a); }
  static bool is_zero(std::int64_t a) { return a == 0; }
};

template <class Deg>
inline constexpr bool is_concrete_degree_v = std::is_same_v<Deg, std::int64_t>;

template <class Deg = std::int64_t>
struct BasicBundleClass {
  std::int64_t rank = 0;
  Deg degree{};

  friend bool operator==(const BasicBundleClass&, const BasicBundleClass&) = default;
};

using BundleClass = BasicBundleClass<std::int64_t>;
using SymbolicClass = BasicBundleClass<LinearForm>;

/// Validated constructor: rank >= 0, and rank 0 forces degree 0.
template <class Deg>
BasicBundleClass<Deg> make_class(std::int64_t rank, Deg degree) {
  if (rank < 0) throw DomainError("bundle rank must be >= 0, got " + std::to_string(rank));
  if (rank == 0 && !DegreeOps<Deg>::is_zero(degree)) throw DomainError("zero-rank class must have degree 0");
  return {rank, std::move(degree)};
}

inline BundleClass make_class(std::int64_t rank, std::int64_t degree) {
  return make_class<std::int64_t>(rank, degree);
}

inline std::string to_string(const BundleClass& e) {
  return "(" + std::to_string(e.rank) + ", " + std::to_string(e.degree) + ")";
}
inline std::ostream& operator<<(std::ostream& os, const BundleClass& e) { return os << to_string(e); }

inline Rational slope(const BundleClass& e) {
  if (e.rank < 1) throw DomainError("slope of a zero-rank class is undefined");
  return Rational(e.degree, e.rank);
}

/// Direct sum.
template <class Deg>
BasicBundleClass<Deg> operator+(const BasicBundleClass<Deg>& a, const BasicBundleClass<Deg>& b) {
  return {checked::add(a.rank, b.rank), DegreeOps<Deg>::add(a.degree, b.degree)};
}

template <class Deg>
BasicBundleClass<Deg> dual(const BasicBundleClass<Deg>& e) {
  return {e.rank, DegreeOps<Deg>::neg(e.degree)};
}

template <class Deg>
BasicBundleClass<Deg> tensor(const BasicBundleClass<Deg>& e, const BasicBundleClass<Deg>& f) {
  using Ops = DegreeOps<Deg>;
  return {checked::mul(e.rank, f.rank), Ops::add(Ops::scale(e.rank, f.degree), Ops::scale(f.rank, e.degree))};
}

template <class Deg>
BasicBundleClass<Deg> hom(const BasicBundleClass<Deg>& e, const BasicBundleClass<Deg>& f) {
  return tensor(dual(e), f);
}

template <class Deg>
BasicBundleClass<Deg> det(const BasicBundleClass<Deg>& e) {
  return {e.rank == 0 ? 0 : 1, e.degree};
}

/// Symmetric square: rank n(n+1)/2, degree (n+1)d.
template <class Deg>
BasicBundleClass<Deg> sym2(const BasicBundleClass<Deg>& e) {
  std::int64_t n = e.rank;
  std::int64_t r = checked::mul(n, checked::add(n, 1)) / 2;
  return {r, DegreeOps<Deg>::scale(checked::add(n, 1), e.degree)};
}

inline BundleClass trivial_line() { return {1, 0}; }

inline BundleClass canonical(const Curve& c) { return {1, checked::mul(2, c.g1())}; }

/// Class of K^k.
inline BundleClass canonical_power(const Curve& c, std::int64_t k) {
  return {1, checked::mul(k, checked::mul(2, c.g1()))};
}

/// chi(E) = deg E + rk E (1 - g).
template <class Deg>
Deg euler_char(const BasicBundleClass<Deg>& e, const Curve& c) {
  using Ops = DegreeOps<Deg>;
  return Ops::add(e.degree, Ops::scale(checked::mul(e.rank, checked::neg(c.g1())), Deg(1)));
}

/// Distinguishes the two degree-0 / degree-(2g-2) line bundles whose h^0 is
/// known even though their numerical class alone does not force it.
enum class LineTag { Unspecified, Trivial, Canonical };

/// h^0 of a line bundle, only where it is determined: degree > 2g-2 (H^1
/// vanishes), degree < 0, or the explicitly tagged trivial / canonical bundle.
inline std::int64_t h0_line(const BundleClass& e, const Curve& c, LineTag tag = LineTag::Unspecified) {
  if (e.rank != 1) throw DomainError("h0_line: rank must be 1, got " + std::to_string(e.rank));
  const std::int64_t kdeg = 2 * c.g1();
  switch (tag) {
    case LineTag::Trivial:
      if (e.degree != 0) throw DomainError("h0_line: trivial bundle must have degree 0");
      return 1;
    case LineTag::Canonical:
      if (e.degree != kdeg) throw DomainError("h0_line: canonical bundle must have degree 2g-2");
      return c.genus();
    case LineTag::Unspecified:
      break;
  }
  if (e.degree > kdeg) return checked::sub(checked::add(e.degree, 1), c.genus());
  if (e.degree < 0) return 0;
  throw DomainError("h0_line: not determined by numerical class for degree " + std::to_string(e.degree) +
                    " in [0, 2g-2]");
}

}  // namespace higgs
