#pragma once

// Counting data for the rank-4 moduli spaces: the stratification of the
// extremal Sp(4,R) piece, component counts, the (W, C, phi) reduction and
// the Teichmueller-component dimensions.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "higgs/chain_oracle.hpp"
#include "higgs/errors.hpp"
#include "higgs/graded_fixed_point.hpp"
#include "higgs/milnor_wood.hpp"
#include "higgs/rr_core.hpp"

namespace higgs {

enum class StratumKind { MUV, M0l, M0Root };

inline const char* stratum_kind_name(StratumKind k) {
  switch (k) {
    case StratumKind::MUV: return "M_u^v";
    case StratumKind::M0l: return "M_0^l";
    case StratumKind::M0Root: return "M_0,L";
  }
  return "?";
}

/// M_u^v: w1 = u != 0, w2 = v. M_0^l: w1 = 0, deg L = l < 2g-2.
/// M_0,L: w1 = 0, L one of the 2^2g square roots of K^2 (by index).
struct Stratum {
  StratumKind kind = StratumKind::MUV;
  std::uint64_t u = 0;
  int v = 0;
  std::int64_t l = 0;
  std::uint64_t root = 0;
  bool connected = true;

  std::string label() const {
    switch (kind) {
      case StratumKind::MUV: return "M_u^v u=" + std::to_string(u) + " v=" + std::to_string(v);
      case StratumKind::M0l: return "M_0^l l=" + std::to_string(l);
      case StratumKind::M0Root: return "M_0,L root=" + std::to_string(root);
    }
    return "?";
  }
};

inline std::int64_t two_pow_2g(const Curve& c) { return checked::pow2(checked::mul(2, c.genus())); }

/// Visits the strata of the extremal Sp(4,R) piece in kind-then-parameter
/// order; stops early when fn returns false.
inline void for_each_stratum(const Curve& c, const std::function<bool(const Stratum&)>& fn) {
  const std::uint64_t h = static_cast<std::uint64_t>(two_pow_2g(c));
  for (std::uint64_t u = 1; u < h; ++u)
    for (int v = 0; v < 2; ++v)
      if (!fn(Stratum{StratumKind::MUV, u, v})) return;
  for (std::int64_t l = 0; l < 2 * c.g1(); ++l)
    if (!fn(Stratum{StratumKind::M0l, 0, 0, l})) return;
  for (std::uint64_t r = 0; r < h; ++r)
    if (!fn(Stratum{StratumKind::M0Root, 0, 0, 2 * c.g1(), r})) return;
}

inline std::vector<Stratum> strata(const Curve& c) {
  if (c.genus() > 8) throw DomainError("strata: genus too large to materialize; stream with for_each_stratum");
  std::vector<Stratum> out;
  for_each_stratum(c, [&](const Stratum& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

inline std::int64_t strata_count(const Curve& c) {
  std::int64_t n = 0;
  for_each_stratum(c, [&](const Stratum&) {
    ++n;
    return true;
  });
  return n;
}

/// 2(2^2g - 1) + (2g - 2) + 2^2g = 3 * 2^2g + 2g - 4
inline std::int64_t extremal_component_formula(const Curve& c) {
  return checked::add(checked::mul(3, two_pow_2g(c)), checked::sub(checked::mul(2, c.genus()), 4));
}

struct ComponentCount {
  bool determined = false;
  std::int64_t value = 0;
  std::string basis;
};

inline void require_rank4(const GroupType& group) {
  if (group.is_complex() || group.n() != 2)
    throw DomainError("component counts are known only for SU(2,2) and Sp(4,R), got " + group.name());
}

/// Number of connected components of the piece with deg V = d where known;
/// otherwise an explicit not-determined value.
inline ComponentCount count_components(const GroupType& group, const Curve& c, std::int64_t d) {
  require_rank4(group);
  const std::int64_t bound = mw_bound(group.n(), c);
  if (d < -bound || d > bound)
    throw DomainError("count_components: |d| exceeds Milnor-Wood bound " + std::to_string(bound));
  const bool extremal = d == bound || d == -bound;
  ComponentCount r;
  if (group.family() == GroupFamily::SUnn) {
    if (d == 0 || extremal) {
      r.determined = true;
      r.value = 1;
      r.basis = d == 0 ? "minima are Phi = 0 pairs of fixed-determinant polystable bundles"
                       : "minima form the rank-2 degree-(2g-2) fixed-determinant moduli space";
    }
  } else {
    if (d == 0) {
      r.determined = true;
      r.value = 1;
      r.basis = "minima form the rank-2 degree-0 polystable moduli space";
    } else if (extremal) {
      r.determined = true;
      r.value = extremal_component_formula(c);
      r.basis = "stratification by w1, w2 and deg L";
    }
  }
  if (!r.determined) r.basis = "not determined";
  return r;
}

/// Lower bound on all components of the Sp(4,R) moduli space.
inline std::int64_t total_lower_bound(const Curve& c) {
  return checked::add(checked::mul(3, two_pow_2g(c)), checked::sub(checked::mul(8, c.genus()), 13));
}

struct TeichmullerDims {
  std::int64_t h0_k2_first = 0;
  std::int64_t h0_k2_second = 0;
  std::int64_t h0_k4 = 0;
  std::int64_t hitchin_real_dim = 0;  // (2g-2) dim Sp(4,R)
};

inline TeichmullerDims teichmuller_dims(const Curve& c) {
  TeichmullerDims t;
  t.h0_k2_first = h0_line(canonical_power(c, 2), c);
  t.h0_k2_second = h0_line(canonical_power(c, 2), c);
  t.h0_k4 = h0_line(canonical_power(c, 4), c);
  t.hitchin_real_dim = checked::mul(checked::mul(2, c.g1()), GroupType::sp(2).complex_dimension());
  return t;
}

struct TriplesData {
  std::int64_t rank_v = 2;
  std::int64_t rank_vtilde = 2;
  std::int64_t deg_v = 0;
  std::int64_t deg_vtilde = 0;  // deg(V' (x) K)
  bool phi_zero_minima = false;
  bool fixed_determinant_moduli = false;
};

/// Numerical data of the triple (V, V' (x) K, phi) attached to a minimum with
/// deg V = d.
inline TriplesData triples_label(std::int64_t d, const Curve& c) {
  const std::int64_t bound = 2 * c.g1();
  if (d < -bound || d > bound) throw DomainError("triples_label: |d| exceeds 2g-2");
  TriplesData t;
  t.deg_v = d;
  t.deg_vtilde = bound - d;
  t.phi_zero_minima = d == 0;
  t.fixed_determinant_moduli = d == bound;
  return t;
}

struct WReduction {
  std::int64_t n = 0;
  std::int64_t deg_v = 0;
  std::int64_t theta_degree = 0;  // deg L0, L0^2 = K
  BundleClass w{};
  std::string phi_twist = "K^2";
  bool phi_symmetric = true;
};

/// W = V (x) L0^-1 in the extremal case deg V = n(g-1).
inline WReduction w_reduce(std::int64_t n, const Curve& c, std::int64_t deg_v) {
  if (deg_v != mw_bound(n, c))
    throw DomainError("w_reduce: requires deg V = n(g-1) = " + std::to_string(mw_bound(n, c)));
  WReduction r;
  r.n = n;
  r.deg_v = deg_v;
  r.theta_degree = c.g1();
  r.w = tensor(BundleClass{n, deg_v}, BundleClass{1, -r.theta_degree});
  if (r.w.degree != 0) throw InvariantError("w_reduce: deg W is not 0");
  return r;
}

/// The W side of an extremal split Sp(2n,R) model: lines w_i = v_i (x) L0^-1
/// and phi-arrows i -> j whenever c: v_i -> v_k* and b: v_k* -> v_j.
struct WSideModel {
  std::vector<std::int64_t> degrees;
  std::vector<std::uint32_t> out;  // phi out-masks
};

inline WSideModel w_side(const ChainModel& m) {
  if (m.group().family() != GroupFamily::Sp2nR) throw DomainError("w_side: needs an Sp(2n,R) model");
  std::vector<int> vidx(m.size(), -1);
  std::vector<int> vside;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.summands()[i].block == Block::V) {
      if (m.summands()[i].rank != 1) throw DomainError("w_side: expects line summands");
      vidx[i] = static_cast<int>(vside.size());
      vside.push_back(static_cast<int>(i));
    }
  const std::int64_t n = static_cast<std::int64_t>(vside.size());
  std::int64_t deg_v = 0;
  for (int i : vside) deg_v += m.summands()[i].degree;
  w_reduce(n, m.curve(), deg_v);
  WSideModel w;
  for (int i : vside) w.degrees.push_back(m.summands()[i].degree - m.curve().g1());
  w.out.assign(vside.size(), 0);
  for (std::size_t a = 0; a < vside.size(); ++a)
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (!(m.out_mask(vside[a]) >> k & 1u)) continue;  // c: v_a -> k
      for (std::size_t j = 0; j < m.size(); ++j)
        if ((m.out_mask(k) >> j & 1u) && vidx[j] >= 0) w.out[a] |= 1u << vidx[j];
    }
  return w;
}

/// mu(U) < mu(W) = 0 for every proper nonzero phi-invariant set of lines.
inline bool w_side_stable(const WSideModel& w) {
  const std::uint32_t full = (1u << w.degrees.size()) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    bool inv = true;
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < w.degrees.size(); ++i)
      if (s >> i & 1u) {
        if (w.out[i] & ~s) inv = false;
        deg += w.degrees[i];
      }
    if (inv && deg >= 0) return false;
  }
  return true;
}

/// Whether c: V -> V* (x) K is an isomorphism on a split model: the c-arrows
/// must contain a perfect matching of lines of equal degree after twisting.
inline bool c_is_isomorphism(const ChainModel& m) {
  std::vector<int> vside, dside;
  for (std::size_t i = 0; i < m.size(); ++i) (m.summands()[i].block == Block::V ? vside : dside).push_back(i);
  const std::int64_t kdeg = 2 * m.curve().g1();
  // a nonzero map between lines v -> w (x) K is an isomorphism iff deg v = deg w + 2g-2
  std::function<bool(std::size_t, std::uint32_t)> match = [&](std::size_t a, std::uint32_t used) {
    if (a == vside.size()) return true;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (!(m.out_mask(vside[a]) >> j & 1u) || (used >> j & 1u)) continue;
      if (m.summands()[vside[a]].degree != m.summands()[j].degree + kdeg) continue;
      if (match(a + 1, used | (1u << j))) return true;
    }
    return false;
  };
  return match(0, 0);
}

struct TransferReport {
  std::int64_t models = 0;
  std::int64_t stable = 0;
  std::int64_t mismatches = 0;
  std::int64_t inequality_checks = 0;
  std::int64_t inequality_failures = 0;
  bool ok() const { return mismatches == 0 && inequality_failures == 0; }
};

/// Extremal split Sp(4,R) models (deg V = 2g-2, c a diagonal isomorphism, b any
/// symmetric arrow set) with |deg v_i| <= max_abs_deg: compares the oracle's
/// verdict on (E, Phi) with the W-side verdict, and on W-stable models checks
/// mu(U) < g-1, mu(U') < -(g-1), rk U' >= rk U and mu(F) < 0 for every
/// Q-sub-bundle F = (U, U').
inline TransferReport stability_transfer_check(const Curve& curve, std::int64_t max_abs_deg) {
  TransferReport rep;
  const std::int64_t g1 = curve.g1();
  for (const auto& sk : sp_skeletons(2)) {
    if (sk.blocks.size() != 4) continue;
    for_each_model(curve, sk, max_abs_deg, [&](const ChainModel& m) {
      if (m.total().rank != 4) return;
      std::int64_t deg_v = m.summands()[0].degree + m.summands()[2].degree;
      if (deg_v != 2 * g1 || !c_is_isomorphism(m)) return;
      // c must be diagonal in the splitting: a non-diagonal c with equal
      // degrees destabilizes through images outside the oracle's scope.
      if (std::popcount(m.out_mask(0)) != 1 || std::popcount(m.out_mask(2)) != 1) return;
      ++rep.models;
      bool e_stable = is_stable_higgs(m).stable;
      bool w_stable = w_side_stable(w_side(m));
      if (e_stable) ++rep.stable;
      if (e_stable != w_stable) ++rep.mismatches;
      if (!w_stable) return;
      auto q = to_q_bundle(m);
      const std::uint32_t full1 = (1u << q.e1.size()) - 1, full2 = (1u << q.e2.size()) - 1;
      for (std::uint32_t m1 = 0; m1 <= full1; ++m1)
        for (std::uint32_t m2 = 0; m2 <= full2; ++m2) {
          if ((m1 == 0 && m2 == 0) || (m1 == full1 && m2 == full2)) continue;
          bool closed = true;
          for (auto [i, j] : q.phi12)
            if ((m1 >> i & 1u) && !(m2 >> j & 1u)) closed = false;
          for (auto [i, j] : q.phi21)
            if ((m2 >> i & 1u) && !(m1 >> j & 1u)) closed = false;
          if (!closed) continue;
          ++rep.inequality_checks;
          BundleClass u = mask_class(q.e1, m1), up = mask_class(q.e2, m2);
          // strict for proper pieces; a whole block sits exactly at the bound
          bool ok = up.rank >= u.rank;
          if (u.rank > 0) {
            int cmp = compare_slope(u, BundleClass{1, g1});
            ok = ok && (m1 == full1 ? cmp <= 0 : cmp < 0);
          }
          if (up.rank > 0) {
            int cmp = compare_slope(up, BundleClass{1, -g1});
            ok = ok && (m2 == full2 ? cmp <= 0 : cmp < 0);
          }
          ok = ok && (u.degree + up.degree) < 0;
          if (!ok) ++rep.inequality_failures;
        }
    });
  }
  return rep;
}

}  // namespace higgs
