// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "higgs/higgs.hpp"

using namespace higgs;
using Clock = std::chrono::steady_clock;
using Sum = GradedSummand<std::int64_t>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* what, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  bool in_time = limit_s <= 0 || s < limit_s;
  bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("criterion %2d: %s  %s  [%s; %.3f s%s]\n", id, ok ? "PASS" : "FAIL", what, o.detail.c_str(), s,
              in_time ? "" : ", over time limit");
  std::fflush(stdout);
}

std::string str(std::int64_t v) { return std::to_string(v); }

bool has_minimum(const MinimaCensus& c, const std::vector<std::int64_t>& r, const std::string& label) {
  for (const auto* t : c.minima())
    if (t->type.rank_vector == r && t->type.label == label) return true;
  return false;
}

}  // namespace

int main() {
  run(1, "component count 3*2^2g + 2g - 4 at d = 2g-2, g = 2..6", 1.0, [] {
    // Values as listed in the requirements; g = 4, 5 are off by 4 and 32
    // from the formula itself (see the decisions ledger), so the check is
    // against the formula evaluated independently.
    const std::int64_t listed[] = {48, 194, 776, 3110, 12296};
    Outcome o;
    std::string listed_note;
    for (std::int64_t g = 2; g <= 6; ++g) {
      Curve c(g);
      const std::int64_t formula = 3 * (std::int64_t{1} << (2 * g)) + 2 * g - 4;
      auto r = count_components(GroupType::sp(2), c, 2 * (g - 1));
      if (!r.determined || r.value != formula) o.pass = false;
      if (formula != listed[g - 2]) listed_note += " g=" + str(g) + " listed " + str(listed[g - 2]);
      o.detail += (g > 2 ? "," : "") + str(r.value);
    }
    if (!listed_note.empty()) o.detail += "; formula differs from listed values:" + listed_note;
    std::int64_t census = 0;
    for_each_stratum(Curve(2), [&](const Stratum&) { return ++census, true; });
    if (census != 48) o.pass = false;
    o.detail += "; g=2 strata " + str(census);
    return o;
  });

  run(2, "stratum census equals formula, g = 2..10", 1.0, [] {
    Outcome o;
    for (std::int64_t g = 2; g <= 10; ++g) {
      Curve c(g);
      std::int64_t n = 0;
      for_each_stratum(c, [&](const Stratum&) { return ++n, true; });
      std::int64_t p = std::int64_t{1} << (2 * g);
      if (n != 2 * (p - 1) + (2 * g - 2) + p || n != extremal_component_formula(c)) o.pass = false;
      if (g == 10) o.detail = "g=10: " + str(n);
    }
    return o;
  });

  run(3, "minima census, SU(2,2) and Sp(4,R), g = 2..4, every d", 30.0, [] {
    Outcome o;
    std::int64_t censuses = 0, minima = 0;
    for (std::int64_t g = 2; g <= 4; ++g) {
      Curve c(g);
      const std::int64_t top = 2 * (g - 1);
      for (const auto& cen : minima_census(GroupType::su(2), c)) {
        ++censuses;
        std::size_t want = cen.d == 0 ? 0 : 1;
        bool ok = cen.minima().size() == want;
        if (cen.d > 0) ok = ok && has_minimum(cen, {2, 2}, "V lowest");
        if (cen.d < 0) ok = ok && has_minimum(cen, {2, 2}, "V' lowest");
        if (!ok) o.pass = false, o.detail += " SU g=" + str(g) + " d=" + str(cen.d);
        minima += static_cast<std::int64_t>(cen.minima().size());
      }
      for (const auto& cen : minima_census(GroupType::sp(2), c)) {
        ++censuses;
        std::size_t want = cen.d == 0 ? 0 : (cen.d == top || cen.d == -top ? 2 : 1);
        bool ok = cen.minima().size() == want;
        if (cen.d > 0) ok = ok && has_minimum(cen, {2, 2}, "V at [-1/2]");
        if (cen.d < 0) ok = ok && has_minimum(cen, {2, 2}, "V at [1/2]");
        if (cen.d == top) ok = ok && has_minimum(cen, {1, 1, 1, 1}, "V at [-3/2,1/2]");
        if (cen.d == -top) ok = ok && has_minimum(cen, {1, 1, 1, 1}, "V at [-1/2,3/2]");
        for (const auto& t : cen.types)
          if (t.verdict == Verdict::NeedsExplicitBound || t.type.needs_review) ok = false;
        if (!ok) o.pass = false, o.detail += " Sp g=" + str(g) + " d=" + str(cen.d);
        minima += static_cast<std::int64_t>(cen.minima().size());
      }
    }
    o.detail = str(censuses) + " censuses, " + str(minima) + " minimum-feasible types" + o.detail;
    return o;
  });

  run(4, "Morse index equals the three closed forms, 1000 samples per case per g = 2..5", 0, [] {
    Outcome o;
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<std::int64_t> deg(-50, 50);
    std::bernoulli_distribution coin(0.5);
    std::int64_t checked = 0;
    for (std::int64_t g = 2; g <= 5; ++g) {
      Curve c(g);
      for (int i = 0; i < 1000; ++i) {
        // SU(2,2), (1,1,1,1)
        std::int64_t x = deg(rng), y = deg(rng), z = deg(rng);
        Block b0 = coin(rng) ? Block::V : Block::Vprime, b1 = b0 == Block::V ? Block::Vprime : Block::V;
        auto e1 = GradedBundle<std::int64_t>::make(GroupType::su(2), {Sum{Weight{-3}, {1, x}, b0}, Sum{Weight{-1}, {1, y}, b1},
                                                                      Sum{Weight{1}, {1, z}, b0},
                                                                      Sum{Weight{3}, {1, -(x + y + z)}, b1}});
        if (morse_index(e1, c).index != 3 * (g - 1) + y - z) o.pass = false;
        // SU(2,2), (1,2,1)
        std::int64_t f0 = deg(rng), f1 = deg(rng);
        auto e2 = GradedBundle<std::int64_t>::make(GroupType::su(2), {Sum{Weight{-2}, {1, -(f0 + f1)}, b0},
                                                                      Sum{Weight{0}, {2, f0}, b1}, Sum{Weight{2}, {1, f1}, b0}});
        if (morse_index(e2, c).index != (g - 1) - (2 * f1 + f0)) o.pass = false;
        // Sp(4,R), V = F_{m1} + F_{m2}
        std::int64_t a = deg(rng), b = deg(rng);
        auto lo = GradedBundle<std::int64_t>::make(GroupType::sp(2), {Sum{Weight{-3}, {1, a}, Block::V},
                                                                      Sum{Weight{1}, {1, b}, Block::V}});
        auto hi = GradedBundle<std::int64_t>::make(GroupType::sp(2), {Sum{Weight{-1}, {1, a}, Block::V},
                                                                      Sum{Weight{3}, {1, b}, Block::V}});
        if (morse_index(lo, c).index != 2 * (g - 1) - (a + b)) o.pass = false;
        if (morse_index(hi, c).index != 2 * (g - 1) + (a + b)) o.pass = false;
        checked += 4;
      }
    }
    o.detail = str(checked) + " evaluations";
    return o;
  });

  run(5, "Higgs stability <=> Q-stability, <= 4 lines, degrees [-6,6], g = 2", 300.0, [] {
    Curve c(2);
    auto sks = two_block_skeletons(4);
    for (const auto& s : sp_skeletons(2)) sks.push_back(s);
    auto r = check_quiver_equivalence(c, sks, 6);
    Outcome o;
    o.pass = r.ok() && r.models > 0;
    o.detail = str(r.models) + " models, " + str(r.stable_models) + " stable, " + str(r.counterexamples) +
               " counterexamples, " + str(r.certificates_checked) + " certificates, " + str(r.certificate_failures) +
               " certificate failures";
    return o;
  });

  run(6, "Milnor-Wood chain soundness, n <= 3, g <= 5, |deg| <= 20", 0, [] {
    auto r = mw_soundness(MWSearchBox{});
    Outcome o;
    o.pass = r.violations == 0 && r.satisfying > 0;
    o.detail = str(r.tuples) + " tuples, " + str(r.satisfying) + " satisfy hypotheses, " + str(r.violations) +
               " violations";
    return o;
  });

  run(7, "Laumon half-dimension on every SL(n,C) type, n = 2..4, g = 2..5", 0, [] {
    Outcome o;
    std::int64_t types = 0;
    for (std::int64_t n = 2; n <= 4; ++n)
      for (std::int64_t g = 2; g <= 5; ++g) {
        Curve c(g);
        for (const auto& e : sl_fixed_point_types(n)) {
          auto ad = adjoint_decomposition(e);
          auto r = laumon_halfdim(ad, c, GroupType::sl(n));
          std::int64_t ranks = 0;
          for (const auto& [k, en] : ad.entries) ranks += en.total.rank;
          if (!r.ok() || r.computed != LinearForm((n * n - 1) * (g - 1)) || ranks != n * n - 1) o.pass = false;
          ++types;
        }
      }
    o.detail = str(types) + " (type, genus) pairs";
    return o;
  });

  run(8, "adjoint duality on 10^4 random graded bundles", 0, [] {
    Outcome o;
    std::mt19937_64 rng(8);
    const GroupType groups[] = {GroupType::su(2), GroupType::sp(2), GroupType::sl(2), GroupType::su(3),
                                GroupType::sp(3), GroupType::sl(4)};
    std::int64_t bad = 0;
    for (int i = 0; i < 10000; ++i) {
      auto e = random_graded_bundle(groups[i % 6], rng);
      auto ad = adjoint_decomposition(e);
      bool ok = total_rank_degree_check(ad).ok();
      for (const auto& [k, en] : ad.entries)
        if (ad.rank(-k) != en.total.rank || ad.degree(-k) != -en.total.degree) ok = false;
      if (!ok) ++bad;
    }
    o.pass = bad == 0;
    o.detail = "10000 bundles, " + str(bad) + " failures";
    return o;
  });

  run(9, "delta homomorphism, w2 relation and Prym separation, g = 2, 3", 0, [] {
    Outcome o;
    std::uint64_t pairs = 0;
    for (int g = 2; g <= 3; ++g)
      for (const auto& q : QuadraticRefinement::all(g)) {
        auto h = homomorphism_check(q);
        pairs += h.pairs;
        if (!h.ok() || !h.exhaustive) o.pass = false;
        for (H1Class u = 0; u <= h1_mask(g); ++u)
          for (int v = 0; v <= 1; ++v)
            if (delta(q, SWClass{u, v}) != ((q(u) + v) & 1)) o.pass = false;
        for (H1Class u = 1; u <= h1_mask(g); ++u)
          if (prym_component(q, u, 0) == prym_component(q, u, 1)) o.pass = false;
      }
    o.detail = str(static_cast<std::int64_t>(pairs)) + " products checked";
    return o;
  });

  run(10, "moduli and Teichmuller dimensions, g = 2..6", 0, [] {
    Outcome o;
    for (std::int64_t g = 2; g <= 6; ++g) {
      Curve c(g);
      auto t = teichmuller_dims(c);
      if (moduli_dim(GroupType::sp(2), c) != 10 * (g - 1) || moduli_dim(GroupType::su(2), c) != 15 * (g - 1) ||
          t.h0_k2_first != 3 * g - 3 || t.h0_k2_second != 3 * g - 3 || t.h0_k4 != 7 * g - 7 ||
          t.hitchin_real_dim != 20 * (g - 2 + 1))
        o.pass = false;
    }
    o.detail = "g=6: Sp " + str(moduli_dim(GroupType::sp(2), Curve(6))) + ", SU " +
               str(moduli_dim(GroupType::su(2), Curve(6))) + ", Hitchin " +
               str(teichmuller_dims(Curve(6)).hitchin_real_dim);
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
