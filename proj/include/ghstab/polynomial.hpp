#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghstab/rational.hpp"

namespace ghstab {

/// Real polynomial a_0 + a_1 s + ... + a_n s^n with exact rational coefficients,
/// stored in ascending order of powers. The leading coefficient is never zero.
class Polynomial {
 public:
  /// Throws EmptyCoefficients or ZeroLeadingCoefficient.
  explicit Polynomial(std::vector<Rational> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  /// Coefficient of s^i, zero outside 0..n.
  Rational coeff(long i) const;
  const Rational& leading() const { return coeffs_.back(); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Membership in R_n^+ (every coefficient strictly positive).
  bool is_positive() const;

  /// Same polynomial with every coefficient negated.
  Polynomial negated() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Polynomial make_polynomial(std::vector<Rational> coeffs);

/// Canonical text form: whitespace-separated coefficients, ascending powers.
std::string to_string(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text);

/// f*(s) = s^n f(1/s): coefficients reversed. Trailing zeros of the reversed
/// sequence (a_0 = 0 in f) are dropped so the result is a valid polynomial.
Polynomial reversal(const Polynomial& f);

/// f ∘ g: coefficientwise product a_i b_i up to m = deg g. Throws DegreeOrder
/// when deg g > deg f.
Polynomial hadamard_product(const Polynomial& f, const Polynomial& g);

/// The n - m + 1 consecutive coefficient windows f_j = a_j + ... + a_{j+m} s^m.
/// Requires 1 <= m <= deg f (BadWindowDegree) and f positive (NotPositive).
std::vector<Polynomial> windows(const Polynomial& f, std::size_t m);

/// Generalized Hadamard product f • g = {F_j = f_j ∘ g}.
struct GeneralizedProduct {
  Polynomial f;
  Polynomial g;
  std::vector<Polynomial> windows;
  std::vector<Polynomial> elements;
};

GeneralizedProduct generalized_hadamard(const Polynomial& f, const Polynomial& g);

inline constexpr long kDefaultPowerPrecision = 128;

/// p-th Hadamard power a_i^p. Integer exponents are exact; other exponents are
/// evaluated with `precision_bits` of mantissa and the rounded binary values
/// are taken as exact rationals.
Polynomial hadamard_power(const Polynomial& f, const Rational& p, long precision_bits = kDefaultPowerPrecision);

/// λ_i(f) = a_{i-2} a_{i+1} / (a_i a_{i-1}) for i = 2..n-1.
class LambdaVector {
 public:
  explicit LambdaVector(std::vector<Rational> values) : values_(std::move(values)) {}

  /// λ_i for 2 <= i <= n-1.
  const Rational& at(std::size_t i) const { return values_.at(i - 2); }
  std::span<const Rational> values() const& { return values_; }
  std::span<const Rational> values() const&& = delete;  // would dangle
  std::size_t size() const { return values_.size(); }
  Rational max() const;
  Rational sum() const;

 private:
  std::vector<Rational> values_;
};

/// Throws DegreeTooSmall for n < 3 and NotPositive outside R_n^+.
LambdaVector lambdas(const Polynomial& f);

/// p(s) + s^k f(s). Throws DegreeOverlap unless deg p < k.
Polynomial prepend(const Polynomial& p, std::size_t k, const Polynomial& f);

/// 1 + s + ... + s^m, the identity under ∘ for degree-m operands.
Polynomial all_ones(std::size_t m);

}  // namespace ghstab
