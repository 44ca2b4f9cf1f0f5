#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "ghstab/constants.hpp"
#include "ghstab/polynomial.hpp"
#include "ghstab/roots.hpp"

namespace ghstab {

enum class Verdict { Stable, QuasiStable, Unstable };

std::string_view to_string(Verdict v) noexcept;
Verdict parse_verdict(std::string_view text);

inline constexpr double kDefaultQuasiTolerance = 1e-9;

struct AnalysisOptions {
  double tolerance = kDefaultQuasiTolerance;
  long root_precision = kDefaultRootPrecision;
};

struct QuasiStability {
  Verdict verdict;
  /// Roots with |Re| <= tolerance; only filled when the oracle ran.
  std::vector<std::complex<double>> boundary_roots;
  bool oracle_ran = false;
};

/// Stable by Routh–Hurwitz; otherwise QuasiStable when every oracle root has
/// Re < tolerance and at least one lies within [-tolerance, tolerance].
QuasiStability is_quasi_stable(const Polynomial& f, const AnalysisOptions& options = {});

// Class memberships. Degrees 1 and 2 follow the convention W = W^α = V = H.
bool in_w(const Polynomial& f);
/// W^α with an exact rational threshold.
bool in_w_alpha(const Polynomial& f, const Rational& alpha);
/// W^α* or W^β*, decided against the certified enclosure.
bool in_w_constant(const Polynomial& f, ConstantTag tag);
bool in_v(const Polynomial& f);

struct Memberships {
  bool r_plus = false;
  bool w = false;
  bool w_alpha_star = false;
  bool w_beta_star = false;
  bool v = false;
};

struct StabilityReport {
  Polynomial polynomial;
  Verdict verdict;
  std::vector<Rational> minors;
  std::optional<LambdaVector> lambdas;
  Memberships memberships;
  std::vector<std::complex<double>> boundary_roots;
  bool oracle_ran = false;
};

/// Full report for any non-constant polynomial; memberships other than R_n^+
/// are false outside R_n^+ (after sign normalization).
StabilityReport analyze(const Polynomial& f, const AnalysisOptions& options = {});

/// As analyze, restricted to positive polynomials (NotPositive otherwise).
StabilityReport classify(const Polynomial& f, const AnalysisOptions& options = {});

}  // namespace ghstab
