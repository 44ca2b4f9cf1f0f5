#pragma once

#include <complex>
#include <vector>

#include "ghstab/bigfloat.hpp"
#include "ghstab/polynomial.hpp"

namespace ghstab {

inline constexpr long kDefaultRootPrecision = 128;

/// All n complex zeros of f, computed by Aberth–Ehrlich simultaneous iteration
/// at `precision_bits` of working precision. Starting points lie on circles
/// whose radii come from the Newton polygon of |a_i|. A root is accepted once
/// |f(z)| is within a small multiple of the Horner rounding bound. Throws
/// DegreeZero, or NoConvergence when the iteration budget runs out.
std::vector<BigComplex> roots_oracle(const Polynomial& f, long precision_bits = kDefaultRootPrecision);

std::vector<std::complex<double>> to_complex_double(const std::vector<BigComplex>& roots);

/// Largest real part among the roots.
double max_real_part(const std::vector<BigComplex>& roots);

/// Coefficients of a_n ∏(s - z_k), ascending, evaluated at the roots' precision.
std::vector<BigComplex> expand_roots(const std::vector<BigComplex>& roots, const Rational& leading);

}  // namespace ghstab
