#pragma once

// Small-scale integer feasibility for linear systems over the integers:
// Fourier-Motzkin elimination over the rationals with a Farkas certificate,
// then bounded integer-point search driven by projected variable bounds.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/linear_form.hpp"
#include "higgs/rational.hpp"

namespace higgs {

/// Row a.x <= b, together with its Farkas multipliers over the input rows.
struct LinearRow {
  std::vector<Rational> a;
  Rational b;
  std::vector<Rational> lambda;
};

struct FarkasCertificate {
  /// Nonnegative multipliers, one per input row, with lambda^T A = 0 and
  /// lambda^T b < 0.
  std::vector<Rational> lambda;
  Rational combined_rhs;
};

enum class Feasibility { Feasible, Infeasible, NeedsExplicitBound };

inline const char* feasibility_name(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::NeedsExplicitBound: return "needs explicit bound";
  }
  return "?";
}

struct FeasibilityResult {
  Feasibility status = Feasibility::Infeasible;
  std::vector<std::int64_t> witness;
  /// Present when the rational relaxation is already empty.
  std::optional<FarkasCertificate> certificate;
  std::int64_t nodes = 0;
  std::string note;
};

/// Integer linear system in named variables. Every row is stored as
/// a.x <= b with primitive integer a and rounded-down b, which is valid
/// because all variables are integers.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t nvars, std::vector<std::string> names = {})
      : nvars_(nvars), names_(std::move(names)) {
    while (names_.size() < nvars_) names_.push_back("x" + std::to_string(names_.size()));
  }

  std::size_t num_vars() const { return nvars_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<LinearRow>& rows() const { return rows_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// f(x) <= 0
  void add_le(const LinearForm& f, std::string label) { push(f, false, std::move(label)); }
  /// f(x) < 0, tightened to f(x) <= -1 after scaling to integers.
  void add_lt(const LinearForm& f, std::string label) { push(f, true, std::move(label)); }
  void add_ge(const LinearForm& f, std::string label) { push(-f, false, std::move(label)); }
  void add_gt(const LinearForm& f, std::string label) { push(-f, true, std::move(label)); }
  /// f(x) = 0, as two opposite rows.
  void add_eq(const LinearForm& f, const std::string& label) {
    push(f, false, label + " (<=)");
    push(-f, false, label + " (>=)");
  }

  bool satisfied_by(const std::vector<std::int64_t>& x) const {
    for (const auto& r : rows_) {
      Rational lhs;
      for (std::size_t j = 0; j < nvars_; ++j) lhs += r.a[j] * Rational(x.at(j));
      if (lhs > r.b) return false;
    }
    return true;
  }

 private:
  void push(const LinearForm& f, bool strict, std::string label) {
    if (f.arity() > nvars_) throw DomainError("constraint uses variable beyond system size");
    std::vector<Rational> a(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) a[j] = f.coefficient(j);
    Rational b = -f.constant();
    // scale to primitive integer coefficients
    std::int64_t den_lcm = 1;
    for (const auto& c : a) den_lcm = std::lcm(den_lcm, c.den());
    std::int64_t g = 0;
    for (auto& c : a) {
      c *= Rational(den_lcm);
      g = std::gcd(g, c.num());
    }
    b *= Rational(den_lcm);
    if (g == 0) {
      // constant row: 0 <= b (or 0 < b)
      if (strict) b = Rational(b.ceil() - 1);
    } else {
      for (auto& c : a) c /= Rational(g);
      b /= Rational(g);
      b = strict ? Rational(b.ceil() - 1) : Rational(b.floor());
    }
    LinearRow row{std::move(a), b, {}};
    rows_.push_back(std::move(row));
    labels_.push_back(std::move(label));
  }

  std::size_t nvars_;
  std::vector<std::string> names_;
  std::vector<LinearRow> rows_;
  std::vector<std::string> labels_;
};

namespace fm {

inline std::vector<LinearRow> with_identity_multipliers(const std::vector<LinearRow>& rows) {
  std::vector<LinearRow> out = rows;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].lambda.assign(rows.size(), Rational{});
    out[i].lambda[i] = 1;
  }
  return out;
}

inline LinearRow combine(const LinearRow& p, const Rational& sp, const LinearRow& q, const Rational& sq) {
  LinearRow r;
  r.a.resize(p.a.size());
  for (std::size_t j = 0; j < p.a.size(); ++j) r.a[j] = p.a[j] * sp + q.a[j] * sq;
  r.b = p.b * sp + q.b * sq;
  r.lambda.resize(p.lambda.size());
  for (std::size_t i = 0; i < p.lambda.size(); ++i) r.lambda[i] = p.lambda[i] * sp + q.lambda[i] * sq;
  return r;
}

/// Scale so the first nonzero coefficient has magnitude 1, then keep only
/// the tightest row for each direction.
inline void normalize_and_dedup(std::vector<LinearRow>& rows) {
  std::map<std::vector<std::pair<std::int64_t, std::int64_t>>, std::size_t> seen;
  std::vector<LinearRow> out;
  for (auto& r : rows) {
    Rational lead;
    for (const auto& c : r.a)
      if (!c.is_zero()) {
        lead = c.sign() < 0 ? -c : c;
        break;
      }
    if (!lead.is_zero() && lead != Rational(1)) {
      Rational inv = Rational(1) / lead;
      for (auto& c : r.a) c *= inv;
      r.b *= inv;
      for (auto& l : r.lambda) l *= inv;
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> key;
    for (const auto& c : r.a) key.emplace_back(c.num(), c.den());
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, out.size());
      out.push_back(std::move(r));
    } else if (r.b < out[it->second].b) {
      out[it->second] = std::move(r);
    }
  }
  rows = std::move(out);
}

inline std::vector<LinearRow> eliminate(const std::vector<LinearRow>& rows, std::size_t j) {
  std::vector<LinearRow> pos, neg, out;
  for (const auto& r : rows) {
    int s = r.a[j].sign();
    if (s > 0) pos.push_back(r);
    else if (s < 0) neg.push_back(r);
    else out.push_back(r);
  }
  for (const auto& p : pos)
    for (const auto& q : neg) {
      LinearRow r = combine(p, Rational(1) / p.a[j], q, Rational(1) / (-q.a[j]));
      r.a[j] = Rational{};
      out.push_back(std::move(r));
    }
  normalize_and_dedup(out);
  return out;
}

inline std::optional<FarkasCertificate> contradiction(const std::vector<LinearRow>& rows) {
  for (const auto& r : rows) {
    bool zero = std::all_of(r.a.begin(), r.a.end(), [](const Rational& c) { return c.is_zero(); });
    if (zero && r.b.sign() < 0) return FarkasCertificate{r.lambda, r.b};
  }
  return std::nullopt;
}

struct Interval {
  std::optional<Rational> lo, hi;
  bool empty = false;
};

/// Projection of the rational solution set onto coordinate j.
inline Interval project(std::vector<LinearRow> rows, std::size_t j, const std::vector<bool>& active) {
  for (std::size_t k = 0; k < active.size(); ++k)
    if (k != j && active[k]) rows = eliminate(rows, k);
  Interval iv;
  for (const auto& r : rows) {
    const Rational& c = r.a[j];
    if (c.is_zero()) {
      if (r.b.sign() < 0) iv.empty = true;
      continue;
    }
    Rational v = r.b / c;
    if (c.sign() > 0) {
      if (!iv.hi || v < *iv.hi) iv.hi = v;
    } else {
      if (!iv.lo || v > *iv.lo) iv.lo = v;
    }
  }
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) iv.empty = true;
  return iv;
}

}  // namespace fm

/// Checks a Farkas certificate directly against the system's rows.
inline bool verify_certificate(const LinearSystem& sys, const FarkasCertificate& cert) {
  const auto& rows = sys.rows();
  if (cert.lambda.size() != rows.size()) return false;
  std::vector<Rational> combo(sys.num_vars());
  Rational rhs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (cert.lambda[i].sign() < 0) return false;
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += cert.lambda[i] * rows[i].a[j];
    rhs += cert.lambda[i] * rows[i].b;
  }
  return std::all_of(combo.begin(), combo.end(), [](const Rational& c) { return c.is_zero(); }) && rhs.sign() < 0;
}

/// Rational infeasibility by full elimination; nullopt when the relaxation
/// is nonempty.
inline std::optional<FarkasCertificate> rational_infeasibility(const LinearSystem& sys) {
  auto rows = fm::with_identity_multipliers(sys.rows());
  if (auto c = fm::contradiction(rows)) return c;
  for (std::size_t j = 0; j < sys.num_vars(); ++j) {
    rows = fm::eliminate(rows, j);
    if (auto c = fm::contradiction(rows)) return c;
  }
  return std::nullopt;
}

struct IntegerScan {
  bool completed = false;   // every integer point was visited (or fn stopped early)
  bool stopped = false;     // fn asked to stop
  bool unbounded = false;
  bool limit_hit = false;
  std::int64_t nodes = 0;
};

/// Visits integer points of the system in lexicographic order, fixing one
/// variable at a time inside its projected bounds. fn returns false to stop.
/// An unbounded projection aborts the scan and is reported, never truncated.
inline IntegerScan for_each_integer_point(const LinearSystem& sys,
                                          const std::function<bool(const std::vector<std::int64_t>&)>& fn,
                                          std::int64_t node_limit = 2'000'000) {
  IntegerScan scan;
  const std::size_t n = sys.num_vars();
  std::vector<std::int64_t> x(n, 0);
  std::vector<bool> active(n, true);

  std::function<void(const std::vector<LinearRow>&, std::size_t)> rec = [&](const std::vector<LinearRow>& rows,
                                                                             std::size_t j) {
    if (scan.stopped || scan.unbounded || scan.limit_hit) return;
    if (++scan.nodes > node_limit) {
      scan.limit_hit = true;
      return;
    }
    if (j == n) {
      for (const auto& r : rows)
        if (r.b.sign() < 0) return;
      if (!sys.satisfied_by(x)) throw InvariantError("integer scan produced a non-solution");
      if (!fn(x)) scan.stopped = true;
      return;
    }
    fm::Interval iv = fm::project(rows, j, active);
    if (iv.empty) return;
    if (!iv.lo || !iv.hi) {
      scan.unbounded = true;
      return;
    }
    active[j] = false;
    for (std::int64_t v = iv.lo->ceil(); v <= iv.hi->floor(); ++v) {
      std::vector<LinearRow> sub = rows;
      for (auto& r : sub) {
        r.b -= r.a[j] * Rational(v);
        r.a[j] = Rational{};
      }
      x[j] = v;
      rec(sub, j + 1);
      if (scan.stopped || scan.unbounded || scan.limit_hit) break;
    }
    active[j] = true;
  };

  auto rows = sys.rows();
  for (auto& r : rows) r.lambda.clear();
  rec(rows, 0);
  scan.completed = !scan.unbounded && !scan.limit_hit;
  return scan;
}

/// Decides integer feasibility: the rational relaxation first (with a
/// Farkas certificate when empty), then a bounded integer scan.
inline FeasibilityResult integer_feasibility(const LinearSystem& sys, std::int64_t node_limit = 2'000'000) {
  FeasibilityResult res;
  if (auto cert = rational_infeasibility(sys)) {
    res.status = Feasibility::Infeasible;
    res.certificate = std::move(cert);
    res.note = "rational relaxation empty";
    return res;
  }
  std::vector<std::int64_t> found;
  auto scan = for_each_integer_point(
      sys,
      [&](const std::vector<std::int64_t>& x) {
        found = x;
        return false;
      },
      node_limit);
  res.nodes = scan.nodes;
  if (scan.stopped) {
    res.status = Feasibility::Feasible;
    res.witness = std::move(found);
  } else if (scan.unbounded) {
    res.status = Feasibility::NeedsExplicitBound;
    res.note = "projected bound on a variable is infinite";
  } else if (scan.limit_hit) {
    res.status = Feasibility::NeedsExplicitBound;
    res.note = "search node limit reached";
  } else {
    res.status = Feasibility::Infeasible;
    res.note = "rational relaxation nonempty but contains no integer point";
  }
  return res;
}

}  // namespace higgs
