#pragma once

// Brute-force stability oracle on fully split configurations: a list of
// summands ("atoms", usually lines) and the Higgs-field arrows between them.
// Every verdict is restricted to summand-respecting sub-objects, plus the
// diagonal sub-lines used to exercise the quiver lemma.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/graded_fixed_point.hpp"
#include "higgs/parallel.hpp"
#include "higgs/rational.hpp"
#include "higgs/rr_core.hpp"

namespace higgs {

inline constexpr const char* kOracleScope = "summand-respecting sub-objects of a split model";

struct ChainSummand {
  std::optional<Weight> weight;
  std::int64_t rank = 1;
  std::int64_t degree = 0;
  Block block = Block::None;
  int partner = -1;  // Sp(2n,R): index of the dual summand
};

struct ChainArrow {
  int source = 0;
  int target = 0;
  friend auto operator<=>(const ChainArrow&, const ChainArrow&) = default;
};

/// sign(mu(a) - mu(b)) without division.
inline int compare_slope(const BundleClass& a, const BundleClass& b) {
  if (a.rank < 1 || b.rank < 1) throw DomainError("compare_slope: zero-rank class");
  __int128 l = static_cast<__int128>(a.degree) * b.rank;
  __int128 r = static_cast<__int128>(b.degree) * a.rank;
  return (l > r) - (l < r);
}

class ChainModel {
 public:
  static constexpr std::size_t kMaxSummands = 16;

  /// Validates the model. With enforce_group_ranks = false a two-block model
  /// may have any block split (a general two-vertex quiver bundle).
  static ChainModel make(Curve curve, GroupType group, std::vector<ChainSummand> summands,
                         std::vector<ChainArrow> arrows, bool enforce_group_ranks = true) {
    ChainModel m(curve, group, std::move(summands), std::move(arrows), enforce_group_ranks);
    auto problems = m.violations();
    if (!problems.empty()) {
      std::string msg = "invalid chain model:";
      for (const auto& p : problems) msg += " " + p + ";";
      throw InvariantError(msg);
    }
    return m;
  }

  const Curve& curve() const { return curve_; }
  const GroupType& group() const { return group_; }
  const std::vector<ChainSummand>& summands() const { return summands_; }
  const std::vector<ChainArrow>& arrows() const { return arrows_; }
  bool enforces_group_ranks() const { return enforce_; }
  std::size_t size() const { return summands_.size(); }
  std::uint32_t full_mask() const { return static_cast<std::uint32_t>((std::uint64_t{1} << size()) - 1); }
  std::uint32_t out_mask(std::size_t i) const { return out_[i]; }

  /// First vertex of the two-vertex quiver: the V block.
  bool in_first_block(std::size_t i) const { return summands_[i].block == Block::V; }
  bool in_second_block(std::size_t i) const {
    return summands_[i].block == Block::Vprime || summands_[i].block == Block::Vdual;
  }

  BundleClass class_of(std::uint32_t mask) const {
    BundleClass c{};
    for (std::size_t i = 0; i < size(); ++i)
      if (mask >> i & 1u) c = c + BundleClass{summands_[i].rank, summands_[i].degree};
    return c;
  }
  BundleClass total() const { return class_of(full_mask()); }

  bool invariant(std::uint32_t mask) const {
    for (std::size_t i = 0; i < size(); ++i)
      if ((mask >> i & 1u) && (out_[i] & ~mask)) return false;
    return true;
  }

 private:
  ChainModel(Curve curve, GroupType group, std::vector<ChainSummand> summands, std::vector<ChainArrow> arrows,
             bool enforce)
      : curve_(curve), group_(group), summands_(std::move(summands)), arrows_(std::move(arrows)), enforce_(enforce) {
    std::sort(arrows_.begin(), arrows_.end());
    out_.assign(summands_.size(), 0);
    for (const auto& a : arrows_)
      if (a.source >= 0 && a.target >= 0 && static_cast<std::size_t>(a.source) < summands_.size() &&
          static_cast<std::size_t>(a.target) < summands_.size())
        out_[a.source] |= 1u << a.target;
  }

  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    const std::size_t s = summands_.size();
    if (s == 0 || s > kMaxSummands) {
      out.push_back("summand count must be in [1, 16]");
      return out;
    }
    std::int64_t total_deg = 0, rank_first = 0, rank_second = 0, rank_all = 0;
    for (std::size_t i = 0; i < s; ++i) {
      const auto& x = summands_[i];
      if (x.rank < 1) out.push_back("summand " + std::to_string(i) + " has rank < 1");
      total_deg = checked::add(total_deg, x.degree);
      rank_all += x.rank;
      switch (group_.family()) {
        case GroupFamily::SUnn:
          if (x.block != Block::V && x.block != Block::Vprime) out.push_back("SU summand must be in V or V'");
          break;
        case GroupFamily::Sp2nR:
          if (x.block != Block::V && x.block != Block::Vdual) out.push_back("Sp summand must be in V or V*");
          break;
        case GroupFamily::SLnC:
          if (x.block != Block::None) out.push_back("SL summand carries no block");
          break;
      }
      if (in_first_block(i)) rank_first += x.rank;
      if (in_second_block(i)) rank_second += x.rank;
    }
    if (total_deg != 0) out.push_back("total degree is not 0");
    if (enforce_) {
      const std::int64_t n = group_.n();
      if (group_.is_two_block() && (rank_first != n || rank_second != n))
        out.push_back("both blocks must have rank " + std::to_string(n));
      if (group_.is_complex() && rank_all != n) out.push_back("total rank must be " + std::to_string(n));
    }

    std::set<ChainArrow> seen;
    for (const auto& a : arrows_) {
      if (a.source < 0 || a.target < 0 || static_cast<std::size_t>(a.source) >= s ||
          static_cast<std::size_t>(a.target) >= s) {
        out.push_back("arrow endpoint out of range");
        continue;
      }
      if (a.source == a.target) out.push_back("arrow from a summand to itself");
      if (!seen.insert(a).second) out.push_back("duplicate arrow");
      const auto& src = summands_[a.source];
      const auto& dst = summands_[a.target];
      if (group_.is_two_block() && src.block == dst.block)
        out.push_back("arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) + " stays inside a block");
      if (src.weight && dst.weight && dst.weight->twice_m - src.weight->twice_m != 2)
        out.push_back("arrow " + std::to_string(a.source) + "->" + std::to_string(a.target) +
                      " does not raise the weight by 1");
    }

    if (group_.family() == GroupFamily::Sp2nR) {
      for (std::size_t i = 0; i < s; ++i) {
        const auto& x = summands_[i];
        if (x.partner < 0 || static_cast<std::size_t>(x.partner) >= s) {
          out.push_back("Sp summand " + std::to_string(i) + " has no dual partner");
          continue;
        }
        const auto& y = summands_[x.partner];
        if (y.partner != static_cast<int>(i)) out.push_back("partner relation is not an involution");
        if (y.rank != x.rank || y.degree != -x.degree) out.push_back("partner class is not the dual class");
        if (y.block == x.block) out.push_back("partners must lie in opposite blocks");
        if (x.weight.has_value() != y.weight.has_value() || (x.weight && y.weight->twice_m != -x.weight->twice_m))
          out.push_back("partner weights are not opposite");
      }
      if (out.empty())
        for (const auto& a : arrows_) {
          ChainArrow mirror{summands_[a.target].partner, summands_[a.source].partner};
          if (!seen.count(mirror)) out.push_back("Higgs field is not symmetric under the dual pairing");
        }
    }
    return out;
  }

  Curve curve_;
  GroupType group_;
  std::vector<ChainSummand> summands_;
  std::vector<ChainArrow> arrows_;
  bool enforce_;
  std::vector<std::uint32_t> out_;
};

/// A summand-respecting sub-object (a set of summands), or a diagonal
/// sub-line of a (+) b together with a set of summands receiving every arrow
/// out of a and b.
struct SubObject {
  std::uint32_t mask = 0;
  int diag_a = -1;
  int diag_b = -1;

  bool diagonal() const { return diag_a >= 0; }
  friend bool operator==(const SubObject&, const SubObject&) = default;
};

inline BundleClass class_of(const ChainModel& m, const SubObject& s) {
  BundleClass c = m.class_of(s.mask);
  if (s.diagonal())
    c = c + BundleClass{1, std::min(m.summands()[s.diag_a].degree, m.summands()[s.diag_b].degree)};
  return c;
}

/// All masks closed under arrows, in increasing order (including 0 and full).
inline std::vector<std::uint32_t> invariant_masks(const ChainModel& m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask <= m.full_mask(); ++mask)
    if (m.invariant(mask)) out.push_back(mask);
  return out;
}

/// Classes of the proper nonzero invariant summand sets, deduplicated.
inline std::vector<BundleClass> invariant_subobjects(const ChainModel& m) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<BundleClass> out;
  for (auto mask : invariant_masks(m)) {
    if (mask == 0 || mask == m.full_mask()) continue;
    auto c = m.class_of(mask);
    if (seen.insert({c.rank, c.degree}).second) out.push_back(c);
  }
  return out;
}

namespace detail {

inline bool diagonal_allowed(const ChainModel& m, std::uint32_t universe, std::size_t a, std::size_t b,
                             std::uint32_t rest) {
  const auto& sa = m.summands()[a];
  const auto& sb = m.summands()[b];
  if (sa.rank != 1 || sb.rank != 1) return false;
  if (!m.in_first_block(a) || !m.in_second_block(b)) return false;
  std::uint32_t ends = (1u << a) | (1u << b);
  if ((universe & ends) != ends || (rest & ends) || (rest & ~universe)) return false;
  if (!m.invariant(rest)) return false;
  return ((m.out_mask(a) | m.out_mask(b)) & ~rest) == 0;
}

/// Visits every proper nonzero Higgs sub-object of the sub-model `universe`
/// (an invariant, arrow-closed set of summands).
inline void for_each_higgs_subobject(const ChainModel& m, std::uint32_t universe, bool with_diagonals,
                                     const std::function<void(const SubObject&)>& fn) {
  for (std::uint32_t sub = universe;; sub = (sub - 1) & universe) {
    if (sub != 0 && sub != universe && m.invariant(sub)) fn(SubObject{sub});
    if (sub == 0) break;
  }
  if (!with_diagonals || !m.group().is_two_block()) return;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (!(universe >> a & 1u) || !(universe >> b & 1u)) continue;
      std::uint32_t pool = universe & ~((1u << a) | (1u << b));
      for (std::uint32_t rest = pool;; rest = (rest - 1) & pool) {
        if (diagonal_allowed(m, universe, a, b, rest))
          fn(SubObject{rest, static_cast<int>(a), static_cast<int>(b)});
        if (rest == 0) break;
      }
    }
}

}  // namespace detail

struct StabilityReport {
  bool stable = false;
  bool semistable = false;
  bool polystable = false;
  /// A sub-object of maximal slope among those with slope >= mu(E).
  std::optional<SubObject> witness;
  BundleClass witness_class{};
  /// For polystable, non-stable models: the stable pieces.
  std::vector<std::uint32_t> components;
  std::int64_t subobjects_checked = 0;
  std::string scope = kOracleScope;
};

namespace detail {

inline StabilityReport higgs_stability_within(const ChainModel& m, std::uint32_t universe, bool with_diagonals) {
  StabilityReport r;
  const BundleClass whole = m.class_of(universe);
  bool any_equal = false, any_above = false;
  for_each_higgs_subobject(m, universe, with_diagonals, [&](const SubObject& s) {
    ++r.subobjects_checked;
    BundleClass c = class_of(m, s);
    int cmp = compare_slope(c, whole);
    if (cmp < 0) return;
    (cmp > 0 ? any_above : any_equal) = true;
    if (!r.witness || compare_slope(c, r.witness_class) > 0) {
      r.witness = s;
      r.witness_class = c;
    }
  });
  r.stable = !any_equal && !any_above;
  r.semistable = !any_above;
  r.polystable = r.stable;
  return r;
}

/// Connected components of the undirected arrow graph restricted to mask.
inline std::vector<std::uint32_t> arrow_components(const ChainModel& m, std::uint32_t mask) {
  std::vector<std::uint32_t> comps;
  std::uint32_t left = mask;
  while (left) {
    std::uint32_t comp = left & (~left + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& a : m.arrows()) {
        std::uint32_t s = 1u << a.source, t = 1u << a.target;
        if ((comp & s) && !(comp & t) && (mask & t)) comp |= t, grew = true;
        if ((comp & t) && !(comp & s) && (mask & s)) comp |= s, grew = true;
      }
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

}  // namespace detail

/// Slope stability of (E, Phi) over all proper nonzero invariant sub-objects.
/// At slope equality the model is reported polystable when it splits into
/// arrow-connected pieces of slope mu(E) that are each stable.
inline StabilityReport is_stable_higgs(const ChainModel& m) {
  auto r = detail::higgs_stability_within(m, m.full_mask(), true);
  if (r.stable || !r.semistable) return r;
  auto comps = detail::arrow_components(m, m.full_mask());
  if (comps.size() < 2) return r;
  for (auto c : comps) {
    if (compare_slope(m.class_of(c), m.total()) != 0) return r;
    if (!detail::higgs_stability_within(m, c, true).stable) return r;
  }
  r.polystable = true;
  r.components = comps;
  return r;
}

/// Two-vertex quiver bundle: E1 = V block, E2 = the other block, with the
/// maps phi12: E1 -> E2 (x) K and phi21: E2 -> E1 (x) K.
struct QBundleModel {
  std::vector<BundleClass> e1, e2;
  std::vector<std::pair<int, int>> phi12;  // (index in e1, index in e2)
  std::vector<std::pair<int, int>> phi21;  // (index in e2, index in e1)
  Rational tau1, tau2;
};

inline QBundleModel to_q_bundle(const ChainModel& m) {
  if (!m.group().is_two_block()) throw DomainError("to_q_bundle: model has no two-block structure");
  QBundleModel q;
  std::vector<int> pos(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    BundleClass c{m.summands()[i].rank, m.summands()[i].degree};
    auto& side = m.in_first_block(i) ? q.e1 : q.e2;
    pos[i] = static_cast<int>(side.size());
    side.push_back(c);
  }
  for (const auto& a : m.arrows()) {
    if (m.in_first_block(a.source)) q.phi12.emplace_back(pos[a.source], pos[a.target]);
    else q.phi21.emplace_back(pos[a.source], pos[a.target]);
  }
  q.tau1 = q.tau2 = slope(m.total());
  return q;
}

inline BundleClass mask_class(const std::vector<BundleClass>& side, std::uint32_t mask) {
  BundleClass c{};
  for (std::size_t i = 0; i < side.size(); ++i)
    if (mask >> i & 1u) c = c + side[i];
  return c;
}

/// sum_i (deg F_i - tau_i rk F_i)
inline Rational tau_functional(const QBundleModel& q, std::uint32_t m1, std::uint32_t m2) {
  BundleClass f1 = mask_class(q.e1, m1), f2 = mask_class(q.e2, m2);
  return Rational(f1.degree) - q.tau1 * Rational(f1.rank) + Rational(f2.degree) - q.tau2 * Rational(f2.rank);
}

struct QStabilityReport {
  bool stable = false;
  bool semistable = false;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
  Rational witness_value;
  std::int64_t subobjects_checked = 0;
  std::string scope = kOracleScope;
};

/// tau-stability over all Q-sub-bundles (F1, F2) closed under both maps.
inline QStabilityReport is_stable_q(const QBundleModel& q) {
  if (q.e1.size() + q.e2.size() > ChainModel::kMaxSummands) throw DomainError("is_stable_q: model too large");
  QStabilityReport r;
  const std::uint32_t full1 = (1u << q.e1.size()) - 1, full2 = (1u << q.e2.size()) - 1;
  bool any_zero = false, any_pos = false;
  for (std::uint32_t m1 = 0; m1 <= full1; ++m1)
    for (std::uint32_t m2 = 0; m2 <= full2; ++m2) {
      if ((m1 == 0 && m2 == 0) || (m1 == full1 && m2 == full2)) continue;
      bool closed = true;
      for (auto [i, j] : q.phi12)
        if ((m1 >> i & 1u) && !(m2 >> j & 1u)) closed = false;
      for (auto [i, j] : q.phi21)
        if ((m2 >> i & 1u) && !(m1 >> j & 1u)) closed = false;
      if (!closed) continue;
      ++r.subobjects_checked;
      Rational v = tau_functional(q, m1, m2);
      if (v.sign() < 0) continue;
      (v.sign() > 0 ? any_pos : any_zero) = true;
      if (!r.witness || v > r.witness_value) {
        r.witness = std::make_pair(m1, m2);
        r.witness_value = v;
      }
    }
  r.stable = !any_zero && !any_pos;
  r.semistable = !any_pos;
  return r;
}

/// The lemma's construction: F = F' + theta F', G = F' cap theta F' where
/// theta acts by +1 on E1 and -1 on E2. At summand level F' = S gives
/// F = G = S; a diagonal line over (a, b) with rest M gives F = M + a + b and
/// G = M.
struct FGSplit {
  SubObject fprime_obj;
  std::uint32_t f_mask = 0;
  std::uint32_t g_mask = 0;
  BundleClass fprime{}, f{}, g{};
  bool convex_degree = false;  // 2 deg F' <= deg F + deg G
  bool rank_sum = false;       // 2 rk F' = rk F + rk G
  bool max_slope = false;      // max(mu F, mu G) >= mu F'
  bool f_invariant = false;
  bool g_invariant = false;

  bool ok() const { return convex_degree && rank_sum && max_slope && f_invariant && g_invariant; }
};

inline FGSplit quiver_FG_split(const ChainModel& m, const SubObject& sub) {
  if (!m.group().is_two_block()) throw DomainError("quiver_FG_split: model has no two-block structure");
  FGSplit r;
  r.fprime_obj = sub;
  if (sub.diagonal()) {
    if (sub.diag_a < 0 || sub.diag_b < 0 || static_cast<std::size_t>(sub.diag_a) >= m.size() ||
        static_cast<std::size_t>(sub.diag_b) >= m.size() ||
        !detail::diagonal_allowed(m, m.full_mask(), sub.diag_a, sub.diag_b, sub.mask))
      throw DomainError("quiver_FG_split: diagonal sub-object is not invariant");
    r.f_mask = sub.mask | (1u << sub.diag_a) | (1u << sub.diag_b);
    r.g_mask = sub.mask;
  } else {
    if (!m.invariant(sub.mask)) throw DomainError("quiver_FG_split: sub-object is not invariant");
    r.f_mask = r.g_mask = sub.mask;
  }
  r.fprime = class_of(m, sub);
  r.f = m.class_of(r.f_mask);
  r.g = m.class_of(r.g_mask);
  r.convex_degree = 2 * r.fprime.degree <= r.f.degree + r.g.degree;
  r.rank_sum = 2 * r.fprime.rank == r.f.rank + r.g.rank;
  if (r.fprime.rank == 0) {
    r.max_slope = true;
  } else {
    bool f_ge = r.f.rank > 0 && compare_slope(r.f, r.fprime) >= 0;
    bool g_ge = r.g.rank > 0 && compare_slope(r.g, r.fprime) >= 0;
    r.max_slope = f_ge || g_ge;
  }
  r.f_invariant = m.invariant(r.f_mask);
  r.g_invariant = m.invariant(r.g_mask);
  return r;
}

struct QuiverEquivalenceReport {
  std::int64_t models = 0;
  std::int64_t stable_models = 0;
  std::int64_t diagonal_subobjects = 0;
  std::int64_t certificates_checked = 0;
  std::int64_t certificate_failures = 0;
  std::int64_t counterexamples = 0;
  std::vector<ChainModel> first_counterexamples;  // at most 5

  bool ok() const { return counterexamples == 0 && certificate_failures == 0; }
  void merge(const QuiverEquivalenceReport& o) {
    models += o.models;
    stable_models += o.stable_models;
    diagonal_subobjects += o.diagonal_subobjects;
    certificates_checked += o.certificates_checked;
    certificate_failures += o.certificate_failures;
    counterexamples += o.counterexamples;
    for (const auto& c : o.first_counterexamples)
      if (first_counterexamples.size() < 5) first_counterexamples.push_back(c);
  }
};

/// Checks Higgs-stable <=> Q-stable on one model and validates the F/G
/// certificate on every invariant sub-object.
inline void check_quiver_model(const ChainModel& m, QuiverEquivalenceReport& rep) {
  ++rep.models;
  auto h = is_stable_higgs(m);
  auto q = is_stable_q(to_q_bundle(m));
  if (h.stable) ++rep.stable_models;
  if (h.stable != q.stable) {
    ++rep.counterexamples;
    if (rep.first_counterexamples.size() < 5) rep.first_counterexamples.push_back(m);
  }
  detail::for_each_higgs_subobject(m, m.full_mask(), true, [&](const SubObject& s) {
    if (s.diagonal()) ++rep.diagonal_subobjects;
    ++rep.certificates_checked;
    if (!quiver_FG_split(m, s).ok()) ++rep.certificate_failures;
  });
}

/// Block layout and arrows of a split model, degrees left free.
struct ModelSkeleton {
  GroupType group = GroupType::su(1);
  std::vector<Block> blocks;
  std::vector<int> partners;     // Sp only
  std::vector<ChainArrow> arrows;
};

/// Every two-block layout with 1..max_lines lines (any block split) and
/// every subset of cross-block arrows.
inline std::vector<ModelSkeleton> two_block_skeletons(std::size_t max_lines) {
  std::vector<ModelSkeleton> out;
  for (std::size_t s = 1; s <= max_lines; ++s)
    for (std::uint32_t split = 0; split < (1u << s); ++split) {
      std::vector<Block> blocks(s);
      for (std::size_t i = 0; i < s; ++i) blocks[i] = (split >> i & 1u) ? Block::Vprime : Block::V;
      std::vector<ChainArrow> cross;
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
          if (blocks[i] != blocks[j]) cross.push_back({static_cast<int>(i), static_cast<int>(j)});
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cross.size()); ++pick) {
        ModelSkeleton k;
        k.blocks = blocks;
        for (std::size_t a = 0; a < cross.size(); ++a)
          if (pick >> a & 1u) k.arrows.push_back(cross[a]);
        out.push_back(std::move(k));
      }
    }
  return out;
}

/// Sp(2n,R)-shaped layouts: k V-lines v_i at index 2i, their duals at 2i+1,
/// and every symmetric choice of c-arrows (v_i -> v_j*) and b-arrows
/// (v_i* -> v_j).
inline std::vector<ModelSkeleton> sp_skeletons(std::size_t max_v_lines) {
  std::vector<ModelSkeleton> out;
  for (std::size_t k = 1; k <= max_v_lines; ++k) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    const std::size_t np = pairs.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << (2 * np)); ++pick) {
      ModelSkeleton sk;
      sk.group = GroupType::sp(static_cast<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i) {
        sk.blocks.push_back(Block::V);
        sk.blocks.push_back(Block::Vdual);
        sk.partners.push_back(static_cast<int>(2 * i + 1));
        sk.partners.push_back(static_cast<int>(2 * i));
      }
      std::set<ChainArrow> arrows;
      for (std::size_t p = 0; p < np; ++p) {
        auto [i, j] = pairs[p];
        if (pick >> p & 1u) {  // c: v_i -> v_j*, v_j -> v_i*
          arrows.insert({2 * i, 2 * j + 1});
          arrows.insert({2 * j, 2 * i + 1});
        }
        if (pick >> (np + p) & 1u) {  // b: v_i* -> v_j, v_j* -> v_i
          arrows.insert({2 * i + 1, 2 * j});
          arrows.insert({2 * j + 1, 2 * i});
        }
      }
      sk.arrows.assign(arrows.begin(), arrows.end());
      out.push_back(std::move(sk));
    }
  }
  return out;
}

/// Calls fn on every model over the skeleton with line degrees in
/// [-max_abs_deg, max_abs_deg] and total degree 0 (Sp: V-line degrees free,
/// duals negated).
inline void for_each_model(const Curve& curve, const ModelSkeleton& sk, std::int64_t max_abs_deg,
                           const std::function<void(const ChainModel&)>& fn) {
  const std::size_t s = sk.blocks.size();
  const bool sp = sk.group.family() == GroupFamily::Sp2nR;
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < s; ++i)
    if (!sp || sk.blocks[i] == Block::V) free_idx.push_back(i);
  if (!sp) free_idx.pop_back();  // last degree fixed by total 0
  std::vector<std::int64_t> deg(s, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == free_idx.size()) {
      if (sp) {
        for (std::size_t i = 0; i < s; ++i)
          if (sk.blocks[i] == Block::Vdual) deg[i] = -deg[sk.partners[i]];
      } else {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i + 1 < s; ++i) sum += deg[i];
        deg[s - 1] = -sum;
        if (deg[s - 1] < -max_abs_deg || deg[s - 1] > max_abs_deg) return;
      }
      std::vector<ChainSummand> sums(s);
      for (std::size_t i = 0; i < s; ++i) {
        sums[i].degree = deg[i];
        sums[i].block = sk.blocks[i];
        if (sp) sums[i].partner = sk.partners[i];
      }
      fn(ChainModel::make(curve, sk.group, std::move(sums), sk.arrows, sp));
      return;
    }
    for (std::int64_t d = -max_abs_deg; d <= max_abs_deg; ++d) {
      deg[free_idx[pos]] = d;
      rec(pos + 1);
    }
  };
  rec(0);
}

/// Exhaustive equivalence run over skeletons, parallel over skeletons and
/// merged in skeleton order.
inline QuiverEquivalenceReport check_quiver_equivalence(const Curve& curve, const std::vector<ModelSkeleton>& skeletons,
                                                        std::int64_t max_abs_deg) {
  auto parts = parallel_map(skeletons.size(), [&](std::size_t i) {
    QuiverEquivalenceReport r;
    for_each_model(curve, skeletons[i], max_abs_deg, [&](const ChainModel& m) { check_quiver_model(m, r); });
    return r;
  });
  QuiverEquivalenceReport total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

struct PhiNormReport {
  /// ||phi_i||^2 for the map from weight level i to level i+1.
  std::vector<Rational> norms;
  Rational top_residual;  // must be 0: nothing leaves the top level
  bool feasible = true;
  bool phi_forced_zero = false;  // every increment vanishes
  std::vector<std::string> reasons;
};

/// ||phi_i||^2 = ||phi_{i-1}||^2 + deg U_i - mu(E) rk U_i with the norm below
/// the lowest level equal to 0; U_i is the sum of summands at the i-th weight.
inline PhiNormReport phi_norm_sequence(const ChainModel& m) {
  std::map<Weight, std::uint32_t> levels;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.summands()[i].weight) throw DomainError("phi_norm_sequence: summand without weight");
    levels[*m.summands()[i].weight] |= 1u << i;
  }
  std::vector<std::pair<Weight, std::uint32_t>> lv(levels.begin(), levels.end());
  for (std::size_t i = 1; i < lv.size(); ++i)
    if (lv[i].first.twice_m - lv[i - 1].first.twice_m != 2)
      throw DomainError("phi_norm_sequence: weight levels are not consecutive");
  const Rational mu = slope(m.total());
  PhiNormReport r;
  Rational acc;
  bool all_zero = true;
  for (std::size_t i = 0; i < lv.size(); ++i) {
    BundleClass u = m.class_of(lv[i].second);
    Rational inc = Rational(u.degree) - mu * Rational(u.rank);
    if (!inc.is_zero()) all_zero = false;
    acc += inc;
    if (i + 1 == lv.size()) {
      r.top_residual = acc;
      break;
    }
    r.norms.push_back(acc);
    bool has_arrow = false;
    for (std::size_t s = 0; s < m.size(); ++s)
      if ((lv[i].second >> s & 1u) && (m.out_mask(s) & lv[i + 1].second)) has_arrow = true;
    const std::string at = " at weight " + lv[i].first.str();
    if (acc.sign() < 0) r.reasons.push_back("negative squared norm" + at);
    if (acc.sign() > 0 && !has_arrow) r.reasons.push_back("positive norm with no arrow" + at);
    if (acc.is_zero() && has_arrow) r.reasons.push_back("arrow present but norm forced to 0" + at);
  }
  if (!r.top_residual.is_zero()) r.reasons.push_back("nonzero norm leaving the top level");
  r.feasible = r.reasons.empty();
  r.phi_forced_zero = all_zero;
  return r;
}

/// The split model of a graded bundle: one atom per summand of E (ranks kept)
/// and an arrow between every pair of consecutive weights.
inline ChainModel chain_model_of(const GradedBundle<std::int64_t>& e, const Curve& curve) {
  const auto& full = e.full();
  std::vector<ChainSummand> sums(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    sums[i].weight = full[i].weight;
    sums[i].rank = full[i].cls.rank;
    sums[i].degree = full[i].cls.degree;
    sums[i].block = full[i].block;
  }
  if (e.group().family() == GroupFamily::Sp2nR)
    for (std::size_t i = 0; i < full.size(); ++i)
      for (std::size_t j = 0; j < full.size(); ++j)
        if (i != j && full[i].origin == full[j].origin) sums[i].partner = static_cast<int>(j);
  std::vector<ChainArrow> arrows;
  for (std::size_t i = 0; i + 1 < full.size(); ++i)
    arrows.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return ChainModel::make(curve, e.group(), std::move(sums), std::move(arrows));
}

}  // namespace higgs
