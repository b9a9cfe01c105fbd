#pragma once

// Mod-2 data of the extremal Sp(4,R) piece: H^1(S; Z/2) as F_2^2g with the
// intersection pairing, total Stiefel-Whitney classes (1, u, v), quadratic
// refinements standing in for a theta characteristic, and the index delta.

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "higgs/errors.hpp"

namespace higgs {

/// Element of H^1 as a bitmask: bit i is a_i, bit g+i is b_i (0 <= i < g).
using H1Class = std::uint64_t;

inline void require_sw_genus(int g) {
  if (g < 1 || g > 31) throw DomainError("mod-2 genus must lie in [1, 31], got " + std::to_string(g));
}

inline std::uint64_t h1_mask(int g) { return (std::uint64_t{1} << (2 * g)) - 1; }
inline std::uint64_t a_part(H1Class u, int g) { return u & ((std::uint64_t{1} << g) - 1); }
inline std::uint64_t b_part(H1Class u, int g) { return (u >> g) & ((std::uint64_t{1} << g) - 1); }

/// Standard symplectic pairing with <a_i, b_j> = delta_ij.
inline int intersection(H1Class u, H1Class v, int g) {
  return std::popcount((a_part(u, g) & b_part(v, g)) ^ (b_part(u, g) & a_part(v, g))) & 1;
}

struct StandardPairing {
  int operator()(H1Class u, H1Class v, int g) const { return intersection(u, v, g); }
};

/// (1, u, v) in the multiplicative group {1} + H^1 + H^2.
struct SWClass {
  H1Class u = 0;
  int v = 0;
  friend bool operator==(const SWClass&, const SWClass&) = default;
};

template <class Pairing = StandardPairing>
SWClass sw_multiply(const SWClass& x, const SWClass& y, int g, Pairing pair = {}) {
  return SWClass{x.u ^ y.u, (x.v ^ y.v ^ pair(x.u, y.u, g)) & 1};
}

/// q(u + u') = q(u) + q(u') + <u, u'>, stored by its values on the basis:
/// q(u) = sum_i u_i q(e_i) + sum_i u_{a_i} u_{b_i}.
class QuadraticRefinement {
 public:
  QuadraticRefinement(int g, std::uint64_t basis_values) : g_(g), basis_(basis_values) {
    require_sw_genus(g);
    if (basis_values & ~h1_mask(g)) throw DomainError("quadratic refinement: basis values exceed 2g bits");
  }

  int genus() const { return g_; }
  std::uint64_t basis_values() const { return basis_; }

  int operator()(H1Class u) const {
    return (std::popcount(u & basis_) + std::popcount(a_part(u, g_) & b_part(u, g_))) & 1;
  }

  /// Value taken on the majority of H^1.
  int arf_majority() const {
    if (g_ > 12) throw DomainError("arf_majority: genus too large for enumeration");
    std::uint64_t ones = 0;
    for (H1Class u = 0; u <= h1_mask(g_); ++u) ones += static_cast<std::uint64_t>((*this)(u));
    return 2 * ones > (std::uint64_t{1} << (2 * g_)) ? 1 : 0;
  }

  /// sum_i q(a_i) q(b_i)
  int arf_formula() const {
    return std::popcount(a_part(basis_, g_) & b_part(basis_, g_)) & 1;
  }

  /// q composed with a linear map given by the images of the basis vectors.
  QuadraticRefinement pulled_back(const std::vector<H1Class>& images) const {
    std::uint64_t vals = 0;
    for (int i = 0; i < 2 * g_; ++i)
      if ((*this)(images.at(i))) vals |= std::uint64_t{1} << i;
    return QuadraticRefinement(g_, vals);
  }

  static std::vector<QuadraticRefinement> all(int g) {
    require_sw_genus(g);
    if (g > 10) throw DomainError("QuadraticRefinement::all: genus too large");
    std::vector<QuadraticRefinement> out;
    for (std::uint64_t b = 0; b <= h1_mask(g); ++b) out.emplace_back(g, b);
    return out;
  }

 private:
  int g_;
  std::uint64_t basis_;
};

/// delta(1, u, v) = q(u) + v
inline int delta(const QuadraticRefinement& q, const SWClass& x) { return (q(x.u) ^ x.v) & 1; }

enum class PrymComponent { Plus, Minus };

inline const char* prym_name(PrymComponent p) { return p == PrymComponent::Plus ? "P+" : "P-"; }

/// Label of the Prym piece for w1 = u != 0 and w2: P+ when delta = 0.
/// The labeling depends on the refinement q chosen for the theta
/// characteristic.
inline PrymComponent prym_component(const QuadraticRefinement& q, H1Class u, int w2) {
  if (u == 0) throw DomainError("prym_component: w1 must be nonzero");
  if (u & ~h1_mask(q.genus())) throw DomainError("prym_component: u exceeds 2g bits");
  if (w2 != 0 && w2 != 1) throw DomainError("prym_component: w2 must be 0 or 1");
  return delta(q, SWClass{u, w2}) == 0 ? PrymComponent::Plus : PrymComponent::Minus;
}

struct HomomorphismReport {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  bool exhaustive = false;
  bool ok() const { return failures == 0; }
};

/// delta(xy) = delta(x) + delta(y) with the product taken through `pair`.
/// Exhaustive over all pairs for g <= 4, otherwise `samples` seeded pairs.
template <class Pairing = StandardPairing>
HomomorphismReport homomorphism_check(const QuadraticRefinement& q, Pairing pair = {}, std::uint64_t seed = 0,
                                      std::uint64_t samples = 100000) {
  const int g = q.genus();
  HomomorphismReport r;
  auto check = [&](const SWClass& x, const SWClass& y) {
    ++r.pairs;
    if (delta(q, sw_multiply(x, y, g, pair)) != (delta(q, x) ^ delta(q, y))) ++r.failures;
  };
  const std::uint64_t elems = std::uint64_t{2} << (2 * g);  // 2^2g classes u, two values of v
  if (g <= 4) {
    r.exhaustive = true;
    for (std::uint64_t i = 0; i < elems; ++i)
      for (std::uint64_t j = 0; j < elems; ++j) check({i >> 1, static_cast<int>(i & 1)}, {j >> 1, static_cast<int>(j & 1)});
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::uint64_t i = rng() % elems, j = rng() % elems;
      check({i >> 1, static_cast<int>(i & 1)}, {j >> 1, static_cast<int>(j & 1)});
    }
  }
  return r;
}

/// Every linear map of F_2^4 preserving the pairing, as basis images.
inline std::vector<std::vector<H1Class>> symplectic_group_genus2() {
  const int g = 2;
  std::vector<std::vector<H1Class>> out;
  for (std::uint32_t m = 0; m < (1u << 16); ++m) {
    std::vector<H1Class> img(4);
    for (int i = 0; i < 4; ++i) img[i] = (m >> (4 * i)) & 0xFu;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      for (int j = 0; j < 4 && ok; ++j)
        if (intersection(img[i], img[j], g) != intersection(H1Class{1} << i, H1Class{1} << j, g)) ok = false;
    if (ok) out.push_back(img);
  }
  return out;
}

}  // namespace higgs
