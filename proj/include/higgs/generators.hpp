#pragma once

// Fixed-point generators: every SL(n,C) weight type with symbolic degrees,
// and seeded random concrete graded bundles for all three families.

#include <cstdint>
#include <random>
#include <vector>

#include "higgs/graded_fixed_point.hpp"
#include "higgs/linear_form.hpp"
#include "higgs/minima_classifier.hpp"

namespace higgs {

/// One type per ordered rank vector of n with at least two levels, weights
/// 0, 1, ... (an overall shift is central for SL and ignored) and a free
/// degree variable per level.
inline std::vector<GradedBundle<LinearForm>> sl_fixed_point_types(std::int64_t n) {
  GroupType g = GroupType::sl(n);
  std::vector<GradedBundle<LinearForm>> out;
  for (const auto& r : detail::compositions_of(n)) {
    if (r.size() < 2) continue;
    std::vector<GradedSummand<LinearForm>> s;
    for (std::size_t j = 0; j < r.size(); ++j)
      s.push_back({Weight{2 * static_cast<std::int64_t>(j)}, {r[j], LinearForm::variable(j)}, Block::None});
    out.push_back(GradedBundle<LinearForm>::make(g, std::move(s)));
  }
  return out;
}

namespace detail {

inline std::vector<std::int64_t> random_composition(std::int64_t total, std::mt19937_64& rng) {
  std::vector<std::int64_t> r;
  std::bernoulli_distribution cut(0.5);
  std::int64_t cur = 1;
  for (std::int64_t i = 1; i < total; ++i) {
    if (cut(rng)) {
      r.push_back(cur);
      cur = 1;
    } else {
      ++cur;
    }
  }
  r.push_back(cur);
  return r;
}

/// `count` integers in [-bound, bound] adjusted so they sum to `target`.
inline std::vector<std::int64_t> random_degrees(std::size_t count, std::int64_t bound, std::int64_t target,
                                                std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> out(count);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i + 1 < count; ++i) sum += out[i] = d(rng);
  out.back() = target - sum;
  return out;
}

}  // namespace detail

/// Uniform-ish random concrete fixed point of `group` with |degrees| of the
/// free summands at most `max_abs_deg`. Rejection sampling on rank vectors.
inline GradedBundle<std::int64_t> random_graded_bundle(const GroupType& group, std::mt19937_64& rng,
                                                       std::int64_t max_abs_deg = 10) {
  const std::int64_t n = group.n();
  switch (group.family()) {
    case GroupFamily::SLnC: {
      auto r = detail::random_composition(n, rng);
      std::uniform_int_distribution<std::int64_t> shift(-3, 3);
      std::int64_t t0 = shift(rng);
      auto deg = detail::random_degrees(r.size(), max_abs_deg, 0, rng);
      std::vector<GradedSummand<std::int64_t>> s;
      for (std::size_t j = 0; j < r.size(); ++j)
        s.push_back({Weight{t0 + 2 * static_cast<std::int64_t>(j)}, make_class(r[j], deg[j]), Block::None});
      return GradedBundle<std::int64_t>::make(group, std::move(s));
    }
    case GroupFamily::SUnn: {
      std::bernoulli_distribution coin(0.5);
      for (;;) {
        auto r = detail::random_composition(2 * n, rng);
        Block first = coin(rng) ? Block::V : Block::Vprime;
        std::int64_t rv = 0;
        for (std::size_t j = 0; j < r.size(); ++j)
          if ((j % 2 == 0) == (first == Block::V)) rv += r[j];
        if (rv != n) continue;
        auto w = detail::trace_zero_weights(r);
        if (!w) continue;
        auto deg = detail::random_degrees(r.size(), max_abs_deg, 0, rng);
        std::vector<GradedSummand<std::int64_t>> s;
        for (std::size_t j = 0; j < r.size(); ++j) {
          Block b = (j % 2 == 0) ? first : (first == Block::V ? Block::Vprime : Block::V);
          s.push_back({(*w)[j], make_class(r[j], deg[j]), b});
        }
        return GradedBundle<std::int64_t>::make(group, std::move(s));
      }
    }
    case GroupFamily::Sp2nR: {
      // Palindromic rank vector of even length with alternating blocks; the
      // mirror of a V level is the dual V* level.
      std::bernoulli_distribution coin(0.5);
      auto half = detail::random_composition(n, rng);
      std::vector<std::int64_t> r(half.rbegin(), half.rend());
      r.insert(r.end(), half.begin(), half.end());
      const std::size_t L = r.size();
      Block first = coin(rng) ? Block::V : Block::Vdual;
      std::uniform_int_distribution<std::int64_t> d(-max_abs_deg, max_abs_deg);
      std::vector<GradedSummand<std::int64_t>> s;
      for (std::size_t j = 0; j < L; ++j) {
        bool is_v = (j % 2 == 0) == (first == Block::V);
        if (!is_v) continue;
        Weight w{2 * static_cast<std::int64_t>(j) - static_cast<std::int64_t>(L - 1)};
        s.push_back({w, make_class(r[j], d(rng)), Block::V});
      }
      return GradedBundle<std::int64_t>::make(group, std::move(s));
    }
  }
  throw DomainError("random_graded_bundle: unknown group");
}

}  // namespace higgs
