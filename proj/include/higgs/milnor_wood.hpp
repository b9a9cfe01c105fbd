#pragma once

// The Milnor-Wood bound |d| <= n(g-1) and the inequality chain behind it.
// For SU(n,n) the Cayley map c goes V -> V' (x) K, for Sp(2n,R) it goes
// V -> V* (x) K; the arithmetic is identical.

#include <cstdint>
#include <string>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/graded_fixed_point.hpp"
#include "higgs/parallel.hpp"
#include "higgs/rr_core.hpp"

namespace higgs {

inline std::int64_t mw_bound(std::int64_t n, const Curve& c) {
  if (n < 1) throw DomainError("mw_bound: n must be >= 1");
  return checked::mul(n, c.g1());
}

struct MWScenario {
  std::int64_t n = 1;
  std::int64_t genus = 2;
  std::int64_t d = 0;           // deg V
  std::int64_t deg_U = 0;       // kernel of c
  std::int64_t deg_Uprime = 0;  // image side
  std::int64_t rk_c = 0;
  GroupFamily family = GroupFamily::Sp2nR;
};

struct MWChainReport {
  MWScenario scenario;
  bool ineq_one = false;   // deg U' <= 0
  bool ineq_two = false;   // d + deg U <= 0
  bool deg_line = false;   // deg U' - d + deg U + (2g-2) rk c >= 0
  bool hypotheses_hold = false;
  /// Meaningful only when hypotheses_hold.
  bool conclusion = false;        // d <= (g-1) rk c
  bool bound_conclusion = false;  // d <= n(g-1)
  std::vector<std::string> failed;
  std::string target_label;
};

/// Checks the three hypotheses and, when they hold, the conclusion they
/// force. A hypothesis-satisfying tuple that breaks the conclusion throws
/// InvariantError.
inline MWChainReport verify_chain(const MWScenario& s) {
  Curve curve(s.genus);
  if (s.n < 1) throw DomainError("verify_chain: n must be >= 1");
  if (s.rk_c < 0 || s.rk_c > s.n) throw DomainError("verify_chain: rk_c must lie in [0, n]");
  if (s.d <= 0) throw DomainError("verify_chain: requires d > 0; apply the outer automorphism for d < 0");
  if (s.family == GroupFamily::SLnC) throw DomainError("verify_chain: no Milnor-Wood chain for complex groups");

  MWChainReport r;
  r.scenario = s;
  r.target_label = s.family == GroupFamily::SUnn ? "c: V -> V' (x) K" : "c: V -> V* (x) K";
  r.ineq_one = s.deg_Uprime <= 0;
  r.ineq_two = checked::add(s.d, s.deg_U) <= 0;
  std::int64_t line = checked::add(checked::sub(s.deg_Uprime, s.d), s.deg_U);
  line = checked::add(line, checked::mul(checked::mul(2, curve.g1()), s.rk_c));
  r.deg_line = line >= 0;
  if (!r.ineq_one) r.failed.push_back("deg U' <= 0");
  if (!r.ineq_two) r.failed.push_back("d + deg U <= 0");
  if (!r.deg_line) r.failed.push_back("deg U' - d + deg U + (2g-2) rk c >= 0");
  r.hypotheses_hold = r.failed.empty();
  if (r.hypotheses_hold) {
    r.conclusion = s.d <= checked::mul(curve.g1(), s.rk_c);
    r.bound_conclusion = s.d <= mw_bound(s.n, curve);
    if (!r.conclusion || !r.bound_conclusion)
      throw InvariantError("Milnor-Wood chain: hypotheses hold but d=" + std::to_string(s.d) + " > (g-1) rk c");
  }
  return r;
}

struct MWSearchBox {
  std::int64_t max_n = 3;
  std::int64_t min_genus = 2;
  std::int64_t max_genus = 5;
  std::int64_t max_abs_deg = 20;
  std::int64_t max_d = 40;
};

struct MWSoundnessReport {
  std::int64_t tuples = 0;
  std::int64_t satisfying = 0;
  std::int64_t violations = 0;
  std::int64_t max_satisfying_d = 0;  // largest d seen with all hypotheses true
};

/// Exhaustive sweep: every tuple with d in [1, max_d] meeting the hypotheses
/// must satisfy d <= (g-1) rk c. Parallel over (n, g), merged in order.
inline MWSoundnessReport mw_soundness(const MWSearchBox& box = {}) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t n = 1; n <= box.max_n; ++n)
    for (std::int64_t g = box.min_genus; g <= box.max_genus; ++g) cells.emplace_back(n, g);
  auto parts = parallel_map(cells.size(), [&](std::size_t i) {
    auto [n, g] = cells[i];
    MWSoundnessReport r;
    for (std::int64_t d = 1; d <= box.max_d; ++d)
      for (std::int64_t u = -box.max_abs_deg; u <= box.max_abs_deg; ++u)
        for (std::int64_t up = -box.max_abs_deg; up <= box.max_abs_deg; ++up)
          for (std::int64_t rk = 0; rk <= n; ++rk) {
            ++r.tuples;
            bool hyp = up <= 0 && d + u <= 0 && up - d + u + 2 * (g - 1) * rk >= 0;
            if (!hyp) continue;
            ++r.satisfying;
            r.max_satisfying_d = std::max(r.max_satisfying_d, d);
            if (d > (g - 1) * rk) ++r.violations;
          }
    return r;
  });
  MWSoundnessReport total;
  for (const auto& p : parts) {
    total.tuples += p.tuples;
    total.satisfying += p.satisfying;
    total.violations += p.violations;
    total.max_satisfying_d = std::max(total.max_satisfying_d, p.max_satisfying_d);
  }
  return total;
}

/// All (deg U, deg U', rk c) in the box meeting the hypotheses for fixed
/// (n, g, d), in lexicographic order.
inline std::vector<MWScenario> mw_witnesses(std::int64_t n, const Curve& c, std::int64_t d, std::int64_t max_abs_deg) {
  std::vector<MWScenario> out;
  for (std::int64_t u = -max_abs_deg; u <= max_abs_deg; ++u)
    for (std::int64_t up = -max_abs_deg; up <= max_abs_deg; ++up)
      for (std::int64_t rk = 0; rk <= n; ++rk) {
        MWScenario s{n, c.genus(), d, u, up, rk};
        if (d > 0 && verify_chain(s).hypotheses_hold) out.push_back(s);
      }
  return out;
}

struct ExtremalReport {
  std::int64_t n = 0;
  std::int64_t genus = 0;
  std::int64_t d = 0;
  bool rank_full = false;      // d > (n-1)(g-1) forces rk c = n
  bool c_isomorphism = false;  // d = n(g-1)
};

inline ExtremalReport extremal_consequences(std::int64_t n, const Curve& c, std::int64_t d) {
  if (d < 0 || d > mw_bound(n, c))
    throw DomainError("extremal_consequences: d=" + std::to_string(d) + " outside [0, n(g-1)]");
  ExtremalReport r{n, c.genus(), d};
  r.rank_full = d > checked::mul(n - 1, c.g1());
  r.c_isomorphism = d == mw_bound(n, c);
  return r;
}

}  // namespace higgs
