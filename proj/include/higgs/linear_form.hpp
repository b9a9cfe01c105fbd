#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "higgs/rational.hpp"

namespace higgs {

/// Affine form c + sum_i a_i x_i over exact rationals. Used as a symbolic
/// degree so the same bundle-class machinery can run on unknown summand
/// degrees and produce closed-form index expressions.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(std::int64_t c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  LinearForm(Rational c) : constant_(c) {}      // NOLINT(google-explicit-constructor)

  static LinearForm variable(std::size_t index, Rational coeff = 1) {
    LinearForm f;
    f.coeffs_.assign(index + 1, Rational{});
    f.coeffs_[index] = coeff;
    f.trim();
    return f;
  }

  const Rational& constant() const { return constant_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }
  /// One past the highest variable index with a nonzero coefficient.
  std::size_t arity() const { return coeffs_.size(); }
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }

  Rational evaluate(std::span<const std::int64_t> values) const {
    Rational r = constant_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      if (i >= values.size()) throw DomainError("LinearForm::evaluate: missing value for x" + std::to_string(i));
      r += coeffs_[i] * Rational(values[i]);
    }
    return r;
  }

  friend LinearForm operator+(LinearForm a, const LinearForm& b) {
    if (a.coeffs_.size() < b.coeffs_.size()) a.coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    a.constant_ += b.constant_;
    a.trim();
    return a;
  }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) { return a + (-b); }
  LinearForm operator-() const {
    LinearForm r = *this;
    for (auto& c : r.coeffs_) c = -c;
    r.constant_ = -r.constant_;
    return r;
  }
  friend LinearForm operator*(LinearForm a, const Rational& s) {
    for (auto& c : a.coeffs_) c *= s;
    a.constant_ *= s;
    a.trim();
    return a;
  }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return std::move(a) * s; }
  LinearForm& operator+=(const LinearForm& o) { return *this = *this + o; }
  LinearForm& operator-=(const LinearForm& o) { return *this = *this - o; }

  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;

  /// Render with the given variable names (x<i> when names run out).
  std::string str(const std::vector<std::string>& names = {}) const {
    std::string out;
    auto term = [&](const Rational& c, const std::string& var) {
      if (c.is_zero()) return;
      Rational mag = c.sign() < 0 ? -c : c;
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      if (var.empty()) {
        out += mag.str();
      } else {
        if (mag != Rational(1)) out += mag.str() + "*";
        out += var;
      }
    };
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      term(coeffs_[i], i < names.size() ? names[i] : "x" + std::to_string(i));
    term(constant_, "");
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
  Rational constant_;
};

}  // namespace higgs
