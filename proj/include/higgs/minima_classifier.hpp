#pragma once

// Case analysis of the local minima of ||Phi||^2 among stable fixed points
// of rank-4 groups: enumerate the admissible gradings, attach the degree
// constraints forced by stability, and decide whether Morse index 0 is
// attainable by exact integer feasibility.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "higgs/chain_oracle.hpp"
#include "higgs/errors.hpp"
#include "higgs/fourier_motzkin.hpp"
#include "higgs/graded_fixed_point.hpp"
#include "higgs/linear_form.hpp"
#include "higgs/milnor_wood.hpp"
#include "higgs/morse_engine.hpp"
#include "higgs/parallel.hpp"

namespace higgs {

struct FixedPointType {
  GroupType group = GroupType::su(2);
  std::vector<std::int64_t> rank_vector;  // ranks of E by increasing weight
  std::vector<Weight> weights;            // empty for impossible types
  std::vector<Block> blocks;
  std::string label;
  bool type_impossible = false;
  std::string impossibility_reason;
  bool needs_review = false;
  /// Symbolic bundle; degree of stored summand i is the variable x_i.
  std::optional<GradedBundle<LinearForm>> bundle;
  std::vector<std::string> var_names;

  std::string rank_vector_str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rank_vector.size(); ++i) s += (i ? "," : "") + std::to_string(rank_vector[i]);
    return s + ")";
  }
};

namespace detail {

inline void compositions(std::int64_t total, std::vector<std::int64_t>& cur,
                         std::vector<std::vector<std::int64_t>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t p = 1; p <= total; ++p) {
    cur.push_back(p);
    compositions(total - p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::int64_t>> compositions_of(std::int64_t total) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  compositions(total, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Trace-zero twice-weights for consecutive levels, or nullopt when the
/// lowest weight is not half-integral.
inline std::optional<std::vector<Weight>> trace_zero_weights(const std::vector<std::int64_t>& r) {
  std::int64_t rank = 0, moment = 0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    rank += r[j];
    moment += static_cast<std::int64_t>(j) * r[j];
  }
  // sum_j (m0 + j) r_j = 0  =>  2 m0 = -2 moment / rank
  if ((2 * moment) % rank != 0) return std::nullopt;
  std::int64_t t0 = -(2 * moment) / rank;
  std::vector<Weight> w;
  for (std::size_t j = 0; j < r.size(); ++j) w.push_back(Weight{t0 + 2 * static_cast<std::int64_t>(j)});
  return w;
}

inline std::string weight_list(const std::vector<Weight>& ws) {
  std::string s = "[";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + ws[i].str();
  return s + "]";
}

inline FixedPointType symbolic_type(GroupType group, const std::vector<std::int64_t>& r,
                                    const std::vector<Weight>& w, const std::vector<Block>& blocks) {
  FixedPointType t;
  t.group = group;
  t.rank_vector = r;
  t.weights = w;
  t.blocks = blocks;
  std::vector<GradedSummand<LinearForm>> stored;
  std::vector<Weight> vweights;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (group.family() == GroupFamily::Sp2nR && blocks[j] != Block::V) continue;
    std::size_t var = stored.size();
    stored.push_back({w[j], {r[j], LinearForm::variable(var)}, blocks[j]});
    t.var_names.push_back("deg F[" + w[j].str() + "]");
    if (blocks[j] == Block::V) vweights.push_back(w[j]);
  }
  t.bundle = GradedBundle<LinearForm>::make(group, std::move(stored));
  if (group.family() == GroupFamily::Sp2nR) {
    t.label = "V at " + weight_list(vweights);
  } else {
    t.label = std::string(blocks.front() == Block::V ? "V" : "V'") + " lowest";
  }
  return t;
}

/// Shapes the case analysis is expected to produce.
inline bool in_expected_list(const FixedPointType& t) {
  auto tw = [&] {
    std::vector<std::int64_t> v;
    for (std::size_t j = 0; j < t.weights.size(); ++j)
      if (t.blocks[j] == Block::V) v.push_back(t.weights[j].twice_m);
    return v;
  }();
  const auto& r = t.rank_vector;
  if (t.group.family() == GroupFamily::SUnn)
    return r == std::vector<std::int64_t>{2, 2} || r == std::vector<std::int64_t>{1, 2, 1} ||
           r == std::vector<std::int64_t>{1, 1, 1, 1};
  if (r == std::vector<std::int64_t>{2, 2}) return true;
  return r == std::vector<std::int64_t>{1, 1, 1, 1} &&
         (tw == std::vector<std::int64_t>{-3, 1} || tw == std::vector<std::int64_t>{-1, 3});
}

}  // namespace detail

/// Candidate fixed-point types of a rank-4 group, sorted by rank vector.
/// SU(2,2): gradings whose weight spaces lie in V or V' and alternate; a rank
/// vector admitting a balanced split only without alternation is reported
/// type-impossible. Sp(4,R): gradings whose V* side is the dual of the V side;
/// a palindromic rank vector with a self-dual middle level is type-impossible.
inline std::vector<FixedPointType> enumerate_types(const GroupType& group, const Curve& curve, std::int64_t d) {
  if (group.is_complex() || group.n() != 2)
    throw DomainError("enumerate_types: only SU(2,2) and Sp(4,R) are classified, got " + group.name());
  const std::int64_t bound = mw_bound(group.n(), curve);
  if (d < -bound || d > bound)
    throw DomainError("enumerate_types: |d|=" + std::to_string(d < 0 ? -d : d) + " exceeds Milnor-Wood bound " +
                      std::to_string(bound));
  const std::int64_t n = group.n();
  std::vector<FixedPointType> out;
  for (const auto& r : detail::compositions_of(2 * n)) {
    if (r.size() < 2) continue;  // psi central: Phi = 0, handled with the reducible data
    const std::size_t L = r.size();
    if (group.family() == GroupFamily::SUnn) {
      auto w = detail::trace_zero_weights(r);
      bool any_alternating = false;
      for (Block first : {Block::V, Block::Vprime}) {
        std::vector<Block> blocks(L);
        std::int64_t rv = 0;
        for (std::size_t j = 0; j < L; ++j) {
          bool same = j % 2 == 0;
          blocks[j] = same ? first : (first == Block::V ? Block::Vprime : Block::V);
          if (blocks[j] == Block::V) rv += r[j];
        }
        if (rv != n || !w) continue;
        any_alternating = true;
        out.push_back(detail::symbolic_type(group, r, *w, blocks));
      }
      if (any_alternating) continue;
      bool balanced = false;
      for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
        std::int64_t rv = 0;
        for (std::size_t j = 0; j < L; ++j)
          if (mask >> j & 1u) rv += r[j];
        if (rv == n) balanced = true;
      }
      if (!balanced) continue;
      FixedPointType t;
      t.group = group;
      t.rank_vector = r;
      t.label = "no alternating split";
      t.type_impossible = true;
      t.impossibility_reason =
          "V and V' cannot alternate along the weights, so Phi vanishes on an extreme summand and (E,Phi) is reducible";
      out.push_back(std::move(t));
    } else {
      if (!std::equal(r.begin(), r.end(), r.rbegin())) continue;
      auto w = detail::trace_zero_weights(r);
      if (L % 2 == 1 || !w) {
        FixedPointType t;
        t.group = group;
        t.rank_vector = r;
        t.label = "self-dual middle weight";
        t.type_impossible = true;
        t.impossibility_reason = "the weight-0 space would meet both V and V*";
        out.push_back(std::move(t));
        continue;
      }
      for (Block first : {Block::V, Block::Vdual}) {
        std::vector<Block> blocks(L);
        for (std::size_t j = 0; j < L; ++j)
          blocks[j] = (j % 2 == 0) ? first : (first == Block::V ? Block::Vdual : Block::V);
        out.push_back(detail::symbolic_type(group, r, *w, blocks));
      }
    }
  }
  for (auto& t : out)
    if (!t.type_impossible) t.needs_review = !detail::in_expected_list(t);
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.rank_vector < b.rank_vector; });
  return out;
}

enum class Verdict { MinimumFeasible, NeverMinimum, TypeImpossible, NeedsExplicitBound };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::MinimumFeasible: return "minimum-feasible";
    case Verdict::NeverMinimum: return "never-minimum";
    case Verdict::TypeImpossible: return "type-impossible";
    case Verdict::NeedsExplicitBound: return "needs-explicit-bound";
  }
  return "?";
}

struct TypeVerdict {
  FixedPointType type;
  Verdict verdict = Verdict::TypeImpossible;
  std::int64_t d = 0;
  LinearForm index;
  std::vector<std::string> constraints;
  /// Integer points exist for the stability constraints alone.
  bool stable_feasible = false;
  std::vector<std::int64_t> witness;  // stored-summand degrees
  bool witness_oracle_stable = false;
  std::optional<FarkasCertificate> certificate;
  std::string reason;
};

/// Degree constraints of a type at deg V = d: total degree 0, deg V = d,
/// every proper weight tail of negative slope, and for consecutive line
/// summands a nonzero map L -> L' (x) K (deg L' - deg L + 2g - 2 >= 0).
inline LinearSystem type_constraints(const FixedPointType& t, const Curve& curve, std::int64_t d) {
  if (!t.bundle) throw DomainError("type_constraints: type is impossible");
  const auto& e = *t.bundle;
  LinearSystem sys(t.var_names.size(), t.var_names);
  if (e.group().family() == GroupFamily::SUnn) sys.add_eq(e.total_class().degree, "deg E = 0");
  sys.add_eq(e.block_class(Block::V).degree - LinearForm(d), "deg V = d");
  const auto& full = e.full();
  const auto whole = e.total_class();
  for (std::size_t k = 1; k < full.size(); ++k) {
    BasicBundleClass<LinearForm> tail{};
    for (std::size_t j = k; j < full.size(); ++j) tail = tail + full[j].cls;
    // mu(tail) < mu(E)  <=>  deg(tail) rk(E) - deg(E) rk(tail) < 0
    LinearForm f = Rational(whole.rank) * tail.degree - Rational(tail.rank) * whole.degree;
    sys.add_lt(f, "weight tail from " + full[k].weight.str() + " has slope < mu(E)");
  }
  const std::int64_t kdeg = 2 * curve.g1();
  for (std::size_t j = 0; j + 1 < full.size(); ++j) {
    if (full[j].cls.rank != 1 || full[j + 1].cls.rank != 1) continue;
    sys.add_ge(full[j + 1].cls.degree - full[j].cls.degree + LinearForm(kdeg),
               "nonzero map F[" + full[j].weight.str() + "] -> F[" + full[j + 1].weight.str() + "] (x) K");
  }
  return sys;
}

inline GradedBundle<std::int64_t> concrete_bundle(const FixedPointType& t, const std::vector<std::int64_t>& x) {
  std::vector<GradedSummand<std::int64_t>> out;
  for (const auto& s : t.bundle->summands()) {
    Rational v = s.cls.degree.evaluate(x);
    if (!v.is_integer()) throw InvariantError("non-integral summand degree");
    out.push_back({s.weight, {s.cls.rank, v.num()}, s.block});
  }
  return GradedBundle<std::int64_t>::make(t.group, std::move(out));
}

/// Verdict for one type at deg V = d. Index <= 0 infeasible gives
/// never-minimum (with a Farkas certificate when the rational relaxation is
/// empty); otherwise index-0 points are scanned until one is confirmed
/// stable by the chain oracle.
inline TypeVerdict classify(const FixedPointType& t, const Curve& curve, std::int64_t d) {
  TypeVerdict v;
  v.type = t;
  v.d = d;
  if (t.type_impossible) {
    v.verdict = Verdict::TypeImpossible;
    v.reason = t.impossibility_reason;
    return v;
  }
  v.index = morse_index(*t.bundle, curve).index;
  LinearSystem base = type_constraints(t, curve, d);
  v.constraints = base.labels();
  auto base_res = integer_feasibility(base);
  v.stable_feasible = base_res.status == Feasibility::Feasible;
  if (base_res.status == Feasibility::Infeasible) {
    v.verdict = Verdict::NeverMinimum;
    v.certificate = base_res.certificate;
    v.reason = "stability constraints alone are infeasible at this d";
    return v;
  }

  LinearSystem le = base;
  le.add_le(v.index, "Morse index <= 0");
  auto le_res = integer_feasibility(le);
  if (le_res.status == Feasibility::NeedsExplicitBound) {
    v.verdict = Verdict::NeedsExplicitBound;
    v.reason = le_res.note;
    return v;
  }
  if (le_res.status == Feasibility::Infeasible) {
    v.verdict = Verdict::NeverMinimum;
    v.certificate = le_res.certificate;
    v.reason = le_res.certificate ? "index <= 0 contradicts the constraints (Farkas certificate)"
                                  : "index <= 0 has no integer point";
    return v;
  }

  LinearSystem eq = base;
  eq.add_eq(v.index, "Morse index = 0");
  bool saw_point = false;
  auto scan = for_each_integer_point(eq, [&](const std::vector<std::int64_t>& x) {
    saw_point = true;
    auto e = concrete_bundle(t, x);
    if (morse_index(e, curve).index != 0) throw InvariantError("index form disagrees with concrete index");
    if (!is_stable_higgs(chain_model_of(e, curve)).stable) return true;
    v.witness = x;
    v.witness_oracle_stable = true;
    return false;
  });
  if (v.witness_oracle_stable) {
    v.verdict = Verdict::MinimumFeasible;
    v.reason = "index 0 attained by an oracle-stable split model";
  } else if (!scan.completed) {
    v.verdict = Verdict::NeedsExplicitBound;
    v.reason = "index-0 scan did not terminate within bounds";
  } else {
    v.verdict = Verdict::NeverMinimum;
    v.reason = saw_point ? "every index-0 point fails the stability oracle"
                         : "index <= 0 is attained only at negative index";
  }
  return v;
}

struct ReducibleMinimum {
  std::string key;
  std::string statement;
};

/// Reducible local minima, entered as stated data (their proofs use
/// deformations outside numerical-class scope). Sign of d selects the
/// orientation via the outer automorphism exchanging V with its partner.
inline std::vector<ReducibleMinimum> reducible_minima(const GroupType& group, std::int64_t d) {
  const bool sp = group.family() == GroupFamily::Sp2nR;
  const std::string other = sp ? "L_i^-1" : "L_i'";
  std::vector<ReducibleMinimum> out;
  if (d == 0) {
    out.push_back({"phi-zero", sp ? "Phi = 0 and deg V = 0" : "Phi = 0 and deg V = deg V' = 0"});
    return out;
  }
  std::string sum = "direct sum of rank-2 pieces E_i = L_i + " + other + " with deg L_i >= 0, Phi_i: L_i -> " +
                    other + " (x) K, deg L_i > 0 when Phi_i != 0, deg L_1 + deg L_2 = |d|";
  if (d < 0) sum += " (after exchanging V with " + std::string(sp ? "V*" : "V'") + ")";
  out.push_back({"rank2-direct-sum", sum});
  return out;
}

struct MinimaCensus {
  GroupType group = GroupType::su(2);
  std::int64_t genus = 2;
  std::int64_t d = 0;
  std::vector<TypeVerdict> types;
  std::vector<ReducibleMinimum> reducible;

  std::vector<const TypeVerdict*> minima() const {
    std::vector<const TypeVerdict*> out;
    for (const auto& t : types)
      if (t.verdict == Verdict::MinimumFeasible) out.push_back(&t);
    return out;
  }
};

inline MinimaCensus minima_census_at(const GroupType& group, const Curve& curve, std::int64_t d) {
  MinimaCensus c;
  c.group = group;
  c.genus = curve.genus();
  c.d = d;
  for (const auto& t : enumerate_types(group, curve, d)) c.types.push_back(classify(t, curve, d));
  c.reducible = reducible_minima(group, d);
  return c;
}

/// One census per d in the Milnor-Wood range, in increasing d.
inline std::vector<MinimaCensus> minima_census(const GroupType& group, const Curve& curve) {
  const std::int64_t bound = mw_bound(group.n(), curve);
  auto parts = parallel_map(static_cast<std::size_t>(2 * bound + 1), [&](std::size_t i) {
    return minima_census_at(group, curve, static_cast<std::int64_t>(i) - bound);
  });
  return parts;
}

}  // namespace higgs
