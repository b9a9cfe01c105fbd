#pragma once

// Morse indices of fixed points by Riemann-Roch, and the half-dimension
// identity for the downward flow in the complex case.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/graded_fixed_point.hpp"
#include "higgs/rr_core.hpp"

namespace higgs {

template <class Deg>
struct MorseContribution {
  std::int64_t k = 0;
  std::int64_t rank_term = 0;  // (g-1) rk U_k
  Deg degree_term{};           // +deg U_k for odd k, -deg U_k for even k
};

template <class Deg = std::int64_t>
struct MorseReport {
  Deg index{};
  std::vector<MorseContribution<Deg>> contributions;
  /// Set only for concrete degrees: index == 0.
  std::optional<bool> minimum_candidate;
  std::string assumption = "H^0 and H^2 of the deformation complex assumed to vanish (smooth point)";

  Deg sum_of_contributions() const {
    using Ops = DegreeOps<Deg>;
    Deg acc{};
    for (const auto& c : contributions) acc = Ops::add(acc, Ops::add(Deg(c.rank_term), c.degree_term));
    return acc;
  }
};

/// index = (g-1) sum_{k>=1} (rk U_2k + rk U_2k+1) + sum_{k>=1} (deg U_2k+1 - deg U_2k)
template <class Deg>
MorseReport<Deg> morse_index(const GradedAdjoint<Deg>& ad, const Curve& c) {
  using Ops = DegreeOps<Deg>;
  MorseReport<Deg> r;
  for (const auto& [k, e] : ad.entries) {
    if (k < 2) continue;
    MorseContribution<Deg> t;
    t.k = k;
    t.rank_term = checked::mul(c.g1(), e.total.rank);
    t.degree_term = (k % 2 == 1) ? e.total.degree : Ops::neg(e.total.degree);
    r.index = Ops::add(r.index, Ops::add(Deg(t.rank_term), t.degree_term));
    r.contributions.push_back(std::move(t));
  }
  if constexpr (is_concrete_degree_v<Deg>) r.minimum_candidate = (r.index == 0);
  return r;
}

template <class Deg>
MorseReport<Deg> morse_index(const GradedBundle<Deg>& e, const Curve& c) {
  return morse_index(adjoint_decomposition(e), c);
}

template <class Deg = std::int64_t>
struct LaumonReport {
  Deg computed{};
  std::int64_t expected = 0;
  bool deg_u0_zero = false;
  bool rank_identity = false;  // rk U_0 + 2 sum_{m>=1} rk U_m == dim g

  bool ok() const {
    if (!deg_u0_zero || !rank_identity) return false;
    if constexpr (is_concrete_degree_v<Deg>) return computed == expected;
    else return computed == Deg(expected);
  }
};

/// (g-1)(rk U_0 + 2 sum_{m>=1} rk U_m) - deg U_0 against (n^2-1)(g-1).
template <class Deg>
LaumonReport<Deg> laumon_halfdim(const GradedAdjoint<Deg>& ad, const Curve& c, const GroupType& group) {
  using Ops = DegreeOps<Deg>;
  if (!group.is_complex()) throw DomainError("laumon_halfdim applies to complex groups only, got " + group.name());
  std::int64_t ranks = ad.rank(0);
  for (const auto& [k, e] : ad.entries)
    if (k >= 1) ranks = checked::add(ranks, checked::mul(2, e.total.rank));
  LaumonReport<Deg> r;
  r.computed = Ops::sub(Deg(checked::mul(c.g1(), ranks)), ad.degree(0));
  r.expected = checked::mul(group.complex_dimension(), c.g1());
  r.deg_u0_zero = Ops::is_zero(ad.degree(0));
  r.rank_identity = ranks == group.complex_dimension();
  return r;
}

/// Complex dimension of the moduli space: dim g (g-1) for the real forms,
/// twice that for complex groups.
inline std::int64_t moduli_dim(const GroupType& group, const Curve& c) {
  std::int64_t d = checked::mul(group.complex_dimension(), c.g1());
  return group.is_complex() ? checked::mul(2, d) : d;
}

}  // namespace higgs
