#pragma once

// Fixed points of the circle action as graded bundles E = (+)_m F_m, and the
// induced weight decomposition of the adjoint bundle Ad P = (+)_k U_k.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/rational.hpp"
#include "higgs/rr_core.hpp"

namespace higgs {

/// Eigenvalue m of the infinitesimal gauge transformation, stored as 2m so
/// half-integral weights stay exact.
struct Weight {
  std::int64_t twice_m = 0;

  static constexpr Weight from_twice(std::int64_t t) { return Weight{t}; }
  static constexpr Weight integral(std::int64_t m) { return Weight{2 * m}; }

  Rational value() const { return Rational(twice_m, 2); }
  std::string str() const { return value().str(); }
  Weight negated() const { return Weight{checked::neg(twice_m)}; }

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

enum class GroupFamily { SUnn, Sp2nR, SLnC };

/// SU(n,n), Sp(2n,R) or SL(n,C).
class GroupType {
 public:
  static GroupType su(std::int64_t n) { return GroupType(GroupFamily::SUnn, n, 1); }
  static GroupType sp(std::int64_t n) { return GroupType(GroupFamily::Sp2nR, n, 1); }
  static GroupType sl(std::int64_t n) { return GroupType(GroupFamily::SLnC, n, 2); }

  GroupFamily family() const { return family_; }
  std::int64_t n() const { return n_; }
  bool is_complex() const { return family_ == GroupFamily::SLnC; }
  bool is_two_block() const { return !is_complex(); }

  /// Rank of the bundle E of the standard representation.
  std::int64_t standard_rank() const { return family_ == GroupFamily::SLnC ? n_ : 2 * n_; }

  /// dim_C of the complexified Lie algebra.
  std::int64_t complex_dimension() const {
    switch (family_) {
      case GroupFamily::SUnn: return checked::sub(checked::mul(4, checked::mul(n_, n_)), 1);
      case GroupFamily::Sp2nR: return checked::mul(n_, checked::add(checked::mul(2, n_), 1));
      case GroupFamily::SLnC: return checked::sub(checked::mul(n_, n_), 1);
    }
    return 0;
  }

  std::string name() const {
    const std::string k = std::to_string(n_);
    switch (family_) {
      case GroupFamily::SUnn: return "SU(" + k + "," + k + ")";
      case GroupFamily::Sp2nR: return "Sp(" + std::to_string(2 * n_) + ",R)";
      case GroupFamily::SLnC: return "SL(" + k + ",C)";
    }
    return "?";
  }

  friend bool operator==(const GroupType&, const GroupType&) = default;

 private:
  GroupType(GroupFamily f, std::int64_t n, std::int64_t min_n) : family_(f), n_(n) {
    if (n < min_n) throw DomainError("group parameter n=" + std::to_string(n) + " too small");
  }

  GroupFamily family_;
  std::int64_t n_;
};

/// Which block of the two-block splitting a summand lives in.
/// V / Vprime for SU(n,n) (E = V + V'), V / Vdual for Sp(2n,R) (E = V + V*),
/// None for SL(n,C).
enum class Block { None, V, Vprime, Vdual };

inline const char* block_name(Block b) {
  switch (b) {
    case Block::None: return "-";
    case Block::V: return "V";
    case Block::Vprime: return "V'";
    case Block::Vdual: return "V*";
  }
  return "?";
}

template <class Deg>
struct GradedSummand {
  Weight weight;
  BasicBundleClass<Deg> cls;
  Block block = Block::None;
};

/// A summand of the full bundle E. For Sp(2n,R) the V* side is derived from
/// the stored V side; `origin` is the stored index it came from.
template <class Deg>
struct FullSummand : GradedSummand<Deg> {
  std::size_t origin = 0;
  bool derived = false;
};

template <class Deg = std::int64_t>
class GradedBundle {
 public:
  /// Validates every structural invariant and throws InvariantError listing
  /// the violations. For Sp(2n,R) only V-side summands are passed in.
  static GradedBundle make(GroupType group, std::vector<GradedSummand<Deg>> summands) {
    GradedBundle b(group, std::move(summands));
    auto problems = b.violations();
    if (!problems.empty()) {
      std::string msg = "invalid graded bundle for " + group.name() + ":";
      for (const auto& p : problems) msg += " " + p + ";";
      throw InvariantError(msg);
    }
    return b;
  }

  const GroupType& group() const { return group_; }
  const std::vector<GradedSummand<Deg>>& summands() const { return summands_; }
  const std::vector<FullSummand<Deg>>& full() const { return full_; }

  /// Class of the sum of all full summands in the given block.
  BasicBundleClass<Deg> block_class(Block b) const {
    BasicBundleClass<Deg> acc{};
    for (const auto& s : full_)
      if (s.block == b) acc = acc + s.cls;
    return acc;
  }

  BasicBundleClass<Deg> total_class() const {
    BasicBundleClass<Deg> acc{};
    for (const auto& s : full_) acc = acc + s.cls;
    return acc;
  }

  /// Index into full() of the summand with the given weight, or -1.
  int full_index_of(Weight w) const {
    for (std::size_t i = 0; i < full_.size(); ++i)
      if (full_[i].weight == w) return static_cast<int>(i);
    return -1;
  }

  std::string summand_label(std::size_t full_index) const {
    const auto& s = full_.at(full_index);
    return "F[" + s.weight.str() + "]";
  }

 private:
  GradedBundle(GroupType group, std::vector<GradedSummand<Deg>> summands)
      : group_(group), summands_(std::move(summands)) {
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      FullSummand<Deg> f;
      static_cast<GradedSummand<Deg>&>(f) = summands_[i];
      f.origin = i;
      full_.push_back(f);
      if (group_.family() == GroupFamily::Sp2nR) {
        FullSummand<Deg> d;
        d.weight = summands_[i].weight.negated();
        d.cls = dual(summands_[i].cls);
        d.block = Block::Vdual;
        d.origin = i;
        d.derived = true;
        full_.push_back(d);
      }
    }
    std::stable_sort(full_.begin(), full_.end(),
                     [](const auto& a, const auto& b) { return a.weight < b.weight; });
  }

  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    if (summands_.empty()) {
      out.push_back("no summands");
      return out;
    }
    for (const auto& s : summands_)
      if (s.cls.rank < 1) out.push_back("summand at weight " + s.weight.str() + " has rank < 1");
    for (std::size_t i = 1; i < summands_.size(); ++i)
      if (!(summands_[i - 1].weight < summands_[i].weight)) out.push_back("weights not strictly increasing");

    std::int64_t rank_v = 0, rank_other = 0;
    for (const auto& s : summands_) {
      switch (group_.family()) {
        case GroupFamily::SUnn:
          if (s.block == Block::V) rank_v += s.cls.rank;
          else if (s.block == Block::Vprime) rank_other += s.cls.rank;
          else out.push_back("SU(n,n) summand must be tagged V or V'");
          break;
        case GroupFamily::Sp2nR:
          if (s.block != Block::V) out.push_back("Sp(2n,R) stores only V-side summands");
          rank_v += s.cls.rank;
          break;
        case GroupFamily::SLnC:
          if (s.block != Block::None) out.push_back("SL(n,C) summands carry no block tag");
          rank_v += s.cls.rank;
          break;
      }
    }
    const std::int64_t n = group_.n();
    if (group_.family() == GroupFamily::SUnn && (rank_v != n || rank_other != n))
      out.push_back("V and V' must both have rank " + std::to_string(n));
    if (group_.family() != GroupFamily::SUnn && rank_v != n)
      out.push_back("stored ranks must sum to " + std::to_string(n));

    for (std::size_t i = 1; i < full_.size(); ++i) {
      const auto& a = full_[i - 1];
      const auto& b = full_[i];
      if (a.weight == b.weight) {
        out.push_back("weight " + a.weight.str() + " carries both blocks (mixed weight space)");
        continue;
      }
      if (b.weight.twice_m - a.weight.twice_m != 2)
        out.push_back("weights " + a.weight.str() + " and " + b.weight.str() + " do not differ by 1");
      if (group_.is_two_block() && a.block == b.block)
        out.push_back("block tags do not alternate at weights " + a.weight.str() + ", " + b.weight.str());
    }

    if (group_.is_two_block()) {
      std::int64_t trace2 = 0;
      for (const auto& s : full_) trace2 = checked::add(trace2, checked::mul(s.weight.twice_m, s.cls.rank));
      if (trace2 != 0) out.push_back("trace of psi is not zero");
    }
    if constexpr (is_concrete_degree_v<Deg>) {
      if (total_class().degree != 0) out.push_back("total degree of E is not 0");
    }
    return out;
  }

  GroupType group_;
  std::vector<GradedSummand<Deg>> summands_;
  std::vector<FullSummand<Deg>> full_;
};

enum class PieceKind { Hom, SymSquare, SymSquareDual, TraceCorrection };

/// One summand of some U_k. For Hom, `first`/`second` are source/target
/// indices into GradedBundle::full(); for the symmetric squares they are the
/// full indices of the two V-side (resp. V*-side) factors; sign is -1 only
/// for the trace deduction.
template <class Deg>
struct AdjointPiece {
  PieceKind kind;
  int first = -1;
  int second = -1;
  BasicBundleClass<Deg> cls;
  int sign = 1;
};

template <class Deg>
struct AdjointEntry {
  BasicBundleClass<Deg> total{};
  std::vector<AdjointPiece<Deg>> pieces;
};

template <class Deg = std::int64_t>
struct GradedAdjoint {
  GroupType group = GroupType::sl(2);
  std::map<std::int64_t, AdjointEntry<Deg>> entries;

  std::int64_t rank(std::int64_t k) const {
    auto it = entries.find(k);
    return it == entries.end() ? 0 : it->second.total.rank;
  }
  Deg degree(std::int64_t k) const {
    auto it = entries.find(k);
    return it == entries.end() ? Deg{} : it->second.total.degree;
  }
  /// Even weights: the complexified compact part.
  std::vector<std::int64_t> compact_weights() const { return weights_with_parity(0); }
  /// Odd weights: the non-compact part, where the Higgs field lives.
  std::vector<std::int64_t> noncompact_weights() const { return weights_with_parity(1); }

 private:
  std::vector<std::int64_t> weights_with_parity(int parity) const {
    std::vector<std::int64_t> out;
    for (const auto& [k, e] : entries)
      if (((k % 2) + 2) % 2 == parity) out.push_back(k);
    return out;
  }
};

namespace detail {

inline std::int64_t half_exact(std::int64_t twice) {
  if (twice % 2 != 0) throw InvariantError("adjoint weight is not integral");
  return twice / 2;
}

template <class Deg>
void add_piece(GradedAdjoint<Deg>& ad, std::int64_t k, AdjointPiece<Deg> p) {
  auto& e = ad.entries[k];
  if (p.sign > 0) {
    e.total = e.total + p.cls;
  } else {
    e.total = {checked::sub(e.total.rank, p.cls.rank), DegreeOps<Deg>::sub(e.total.degree, p.cls.degree)};
  }
  e.pieces.push_back(std::move(p));
}

}  // namespace detail

/// Weight decomposition of the adjoint bundle.
///   SU(n,n), SL(n,C): U_k = (+)_{m'-m=k} Hom(F_m, F_m'), minus one trivial
///   line in U_0 for the trace.
///   Sp(2n,R): End(V) + S^2 V + S^2 V* with V = (+)_i F_{m_i}.
template <class Deg>
GradedAdjoint<Deg> adjoint_decomposition(const GradedBundle<Deg>& e) {
  GradedAdjoint<Deg> ad;
  ad.group = e.group();
  const auto& full = e.full();

  if (e.group().family() != GroupFamily::Sp2nR) {
    for (std::size_t i = 0; i < full.size(); ++i)
      for (std::size_t j = 0; j < full.size(); ++j) {
        std::int64_t k = detail::half_exact(full[j].weight.twice_m - full[i].weight.twice_m);
        detail::add_piece(ad, k,
                          AdjointPiece<Deg>{PieceKind::Hom, static_cast<int>(i), static_cast<int>(j),
                                            hom(full[i].cls, full[j].cls), 1});
      }
    detail::add_piece(ad, 0, AdjointPiece<Deg>{PieceKind::TraceCorrection, -1, -1, {1, Deg{}}, -1});
  } else {
    std::vector<int> vside, vdual;
    for (std::size_t i = 0; i < full.size(); ++i) (full[i].derived ? vdual : vside).push_back(static_cast<int>(i));
    // End(V)
    for (int i : vside)
      for (int j : vside) {
        std::int64_t k = detail::half_exact(full[j].weight.twice_m - full[i].weight.twice_m);
        detail::add_piece(ad, k, AdjointPiece<Deg>{PieceKind::Hom, i, j, hom(full[i].cls, full[j].cls), 1});
      }
    // S^2 V and S^2 V*: diagonal terms through sym2, off-diagonal through tensor.
    auto squares = [&](const std::vector<int>& side, PieceKind kind) {
      for (std::size_t a = 0; a < side.size(); ++a)
        for (std::size_t b = a; b < side.size(); ++b) {
          int i = side[a], j = side[b];
          std::int64_t k = detail::half_exact(full[i].weight.twice_m + full[j].weight.twice_m);
          auto cls = (a == b) ? sym2(full[i].cls) : tensor(full[i].cls, full[j].cls);
          detail::add_piece(ad, k, AdjointPiece<Deg>{kind, i, j, cls, 1});
        }
    };
    squares(vside, PieceKind::SymSquare);
    squares(vdual, PieceKind::SymSquareDual);
  }

  for (auto it = ad.entries.begin(); it != ad.entries.end();) {
    if (it->second.total.rank < 0) throw InvariantError("negative rank in adjoint entry");
    it = (it->second.total.rank == 0) ? ad.entries.erase(it) : std::next(it);
  }
  return ad;
}

template <class Deg>
std::string piece_label(const GradedBundle<Deg>& e, const AdjointPiece<Deg>& p) {
  switch (p.kind) {
    case PieceKind::Hom: return "Hom(" + e.summand_label(p.first) + "," + e.summand_label(p.second) + ")";
    case PieceKind::SymSquare:
    case PieceKind::SymSquareDual:
      if (p.first == p.second) return "S2(" + e.summand_label(p.first) + ")";
      return e.summand_label(p.first) + "(x)" + e.summand_label(p.second);
    case PieceKind::TraceCorrection: return "-O";
  }
  return "?";
}

template <class Deg>
struct AdjointCheck {
  std::int64_t rank_sum = 0;
  std::int64_t expected_rank = 0;
  Deg degree_sum{};
  bool rank_ok = false;
  bool degree_ok = false;
  bool duality_ok = false;
  std::vector<std::string> failures;

  bool ok() const { return rank_ok && degree_ok && duality_ok; }
};

/// Total rank = dim g_C, total degree 0, and rank(U_k) = rank(U_-k),
/// deg(U_k) = -deg(U_-k) (Killing-form duality).
template <class Deg>
AdjointCheck<Deg> total_rank_degree_check(const GradedAdjoint<Deg>& ad) {
  using Ops = DegreeOps<Deg>;
  AdjointCheck<Deg> r;
  r.expected_rank = ad.group.complex_dimension();
  for (const auto& [k, e] : ad.entries) {
    r.rank_sum = checked::add(r.rank_sum, e.total.rank);
    r.degree_sum = Ops::add(r.degree_sum, e.total.degree);
  }
  r.rank_ok = r.rank_sum == r.expected_rank;
  if (!r.rank_ok)
    r.failures.push_back("adjoint rank " + std::to_string(r.rank_sum) + " != dim " + std::to_string(r.expected_rank));
  r.degree_ok = Ops::is_zero(r.degree_sum);
  if (!r.degree_ok) r.failures.push_back("adjoint total degree is not 0");
  r.duality_ok = true;
  for (const auto& [k, e] : ad.entries) {
    if (ad.rank(-k) != e.total.rank || !Ops::is_zero(Ops::add(e.total.degree, ad.degree(-k)))) {
      r.duality_ok = false;
      r.failures.push_back("U_" + std::to_string(k) + " is not dual to U_" + std::to_string(-k));
    }
  }
  return r;
}

/// Negate every weight and dualize every summand. For Sp(2n,R) this swaps the
/// roles of V and V*; U_k is carried to an isomorphic U_k.
template <class Deg>
GradedBundle<Deg> dual_fixed_point(const GradedBundle<Deg>& e) {
  std::vector<GradedSummand<Deg>> out;
  if (e.group().family() == GroupFamily::Sp2nR) {
    for (const auto& f : e.full())
      if (f.derived) out.push_back({f.weight, f.cls, Block::V});
  } else {
    for (const auto& s : e.summands()) out.push_back({s.weight.negated(), dual(s.cls), s.block});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return GradedBundle<Deg>::make(e.group(), std::move(out));
}

}  // namespace higgs
