#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "ghstab/polynomial.hpp"

namespace ghstab {

/// Deterministic generator; only raw 64-bit engine outputs are used so streams
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::initializer_list<std::uint64_t> key);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (engine_() >> 63) != 0; }
  /// k / denominator with k uniform in [lo, hi].
  Rational ratio(long lo, long hi, long denominator) { return make_rational(uniform(lo, hi), denominator); }

 private:
  std::mt19937_64 engine_;
};

/// Product of factors (s + r) and (s^2 + 2ζωs + ω^2) with r, ζ, ω > 0, times a
/// positive scale; Hurwitz stable by construction.
Polynomial random_stable(std::size_t n, Rng& rng);
Polynomial random_stable(std::size_t n, std::uint64_t seed);

/// Coefficients uniform in {1/10, ..., 10}; usually not stable for larger n.
Polynomial random_positive(std::size_t n, Rng& rng);

/// Positive polynomial with a_0, a_1, a_2 = seeds and the given λ_2..λ_{n-1}.
Polynomial from_lambdas(const Rational& a0, const Rational& a1, const Rational& a2, const std::vector<Rational>& lambdas);

/// Member of W_n^bound: every λ_i drawn from (0.05, 0.99)·bound. For n < 3 a
/// random positive polynomial.
Polynomial random_w_member(std::size_t n, const Rational& bound, Rng& rng);

/// Member of V_n: Σ λ_i < 1. For n < 3 a random positive polynomial.
Polynomial random_v_member(std::size_t n, Rng& rng);

}  // namespace ghstab
