#pragma once

#include <string_view>

#include "ghstab/rational.hpp"

namespace ghstab {

/// α*: real root of α(1+α)^2 = 1.  β* = √α*.  γ*: real root of γ(γ-1)^2 = 1 - 4γ.
enum class ConstantTag { AlphaStar, BetaStar, GammaStar };

std::string_view to_string(ConstantTag tag) noexcept;

/// Rational enclosure [lo, hi] of an irrational constant. The defining residual
/// is strictly negative at lo and strictly positive at hi.
struct CertifiedConstant {
  ConstantTag tag;
  Rational lo;
  Rational hi;
  /// max(|residual(lo)|, |residual(hi)|).
  Rational residual_bound;

  Rational width() const { return hi - lo; }
  bool contains(double x) const { return Rational(x) >= lo && Rational(x) <= hi; }
};

/// Defining residual, increasing on the bracketing interval:
/// α(1+α)^2 - 1, β^2(1+β^2)^2 - 1, γ(γ-1)^2 - (1-4γ).
Rational constant_residual(ConstantTag tag, const Rational& x);

/// Enclosure of width at most `width` by exact bisection on [0, 1].
CertifiedConstant compute_constant(ConstantTag tag, const Rational& width);

/// Memoized enclosure of width <= 1e-12.
const CertifiedConstant& certified_constant(ConstantTag tag);

/// Memoized enclosure of width <= 1e-30, used when the coarse one cannot
/// separate a comparison.
const CertifiedConstant& refined_constant(ConstantTag tag);

/// True when x < constant, false when x > constant. Decided from the coarse
/// enclosure, then the refined one; throws EnclosureTooWide if x still falls
/// inside.
bool less_than_constant(const Rational& x, ConstantTag tag);

}  // namespace ghstab
