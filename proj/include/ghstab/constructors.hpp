#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ghstab/classify.hpp"
#include "ghstab/polynomial.hpp"

namespace ghstab {

/// Stable extension f(s) + s^{n+1}(a_{n+1} + ... + a_N s^{N-n-1}).
struct ExtensionCertificate {
  Polynomial base;
  std::vector<Rational> appended;  // a_{n+1}..a_N
  Rational epsilon;
  Polynomial result;
  /// Δ_1..Δ_k of the intermediate polynomial after each appended coefficient.
  std::vector<std::vector<Rational>> step_witnesses;
};

struct ExtensionStep {
  Rational coefficient;
  Polynomial extended;
  std::vector<Rational> minors;
};

inline constexpr int kExtensionHalvings = 256;

/// Smallest k >= 1 with f + (ε/2^k) s^{n+1} stable. Throws NotStableInput,
/// NonPositiveParameter or SearchBudgetExhausted.
ExtensionStep extend_one(const Polynomial& f, const Rational& epsilon);

/// Repeated extend_one up to degree N. Throws BadDegree unless N > deg f.
ExtensionCertificate extend_stable(const Polynomial& f, std::size_t target_degree, const Rational& epsilon);

/// Recomputes every step of the certificate from scratch.
bool verify(const ExtensionCertificate& certificate);

struct PrependResult {
  Polynomial p;         // degree k - 1, coefficients in (0, ε)
  Polynomial combined;  // p(s) + s^k f(s), stable
  ExtensionCertificate certificate;  // extension of f* behind p
};

/// Extends f* by k coefficients and reverses back.
PrependResult prepend_stable(const Polynomial& f, std::size_t k, const Rational& epsilon);

/// Degree-m polynomial with λ_i = ε for every i, from b_{k+2} = ε b_{k+1} b_k / b_{k-1}.
Polynomial lambda_uniform(std::size_t m, const Rational& epsilon,
                          const std::array<Rational, 3>& seeds = {Rational(1), Rational(1), Rational(1)});

struct Enclosure {
  double lo;
  double hi;
  double mid() const { return (lo + hi) / 2; }
};

/// p* = log α* / log max λ_i(f), enclosed with directed rounding. Throws
/// DegreeTooSmall, NotPositive, NotInW.
Enclosure p_star(const Polynomial& f);

struct FactorizationTest {
  bool sufficient = false;
  /// (f^[1/2], f^[1/2]) when sufficient.
  std::optional<std::pair<Polynomial, Polynomial>> witness;
};

/// max λ_i(f) < γ*. A false result does not rule out a Hadamard factorization.
FactorizationTest factorization_sufficient(const Polynomial& f, long precision_bits = kDefaultPowerPrecision);

enum class StabilizationMethod { LambdaUniform, HadamardFactorized };

std::string_view to_string(StabilizationMethod m) noexcept;

struct StabilizationResult {
  Polynomial g;
  GeneralizedProduct product;
  StabilizationMethod method;
  /// ε for LambdaUniform, the integer exponent p for HadamardFactorized.
  Rational parameter;
  /// Hadamard factors of g (f_j^[p]); empty for LambdaUniform.
  std::vector<Polynomial> factors;
  std::vector<StabilityReport> verification;
};

/// Finds stable g of degree m with every element of f • g stable, for any
/// positive f. Throws NotPositive, BadDegree, VerificationFailed.
StabilizationResult stabilize(const Polynomial& f, std::size_t m, const AnalysisOptions& options = {});

/// Same, for f in W_n, with g = f_0^[p] ∘ ... ∘ f_{n-m}^[p] and p the smallest
/// integer above p*. Throws NotInW, BadDegree, VerificationFailed.
StabilizationResult stabilize_factorized(const Polynomial& f, std::size_t m, const AnalysisOptions& options = {});

}  // namespace ghstab
