#pragma once

#include <cstddef>
#include <vector>

#include "ghstab/polynomial.hpp"

namespace ghstab {

/// n×n Hurwitz matrix of a degree-n polynomial. Entry (i, j), 1-indexed,
/// is a_{n-2i+j} with a_k = 0 outside 0..n; the first row starts a_{n-1}, a_n.
class HurwitzMatrix {
 public:
  explicit HurwitzMatrix(const Polynomial& f);

  std::size_t size() const { return n_; }
  /// 0-indexed access.
  const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  const Polynomial& source() const { return source_; }

 private:
  Polynomial source_;
  std::size_t n_;
  std::vector<Rational> entries_;
};

/// Throws DegreeZero for constant polynomials.
HurwitzMatrix hurwitz_matrix(const Polynomial& f);

/// Δ_1..Δ_n, exact. The coefficients are scaled to integers and the minors are
/// read off the pivots of fraction-free (Bareiss) elimination.
std::vector<Rational> leading_principal_minors(const Polynomial& f);

/// Determinant of a square integer matrix (row-major) by Bareiss elimination
/// with row pivoting.
Integer bareiss_determinant(std::vector<Integer> matrix, std::size_t n);

/// Routh–Hurwitz decision: all coefficients of one strict sign and
/// Δ_1..Δ_{n-1} > 0 after normalizing the sign. Throws DegreeZero.
bool is_hurwitz_stable(const Polynomial& f);

/// f when its coefficients are all non-positive is replaced by -f; otherwise
/// returned unchanged.
Polynomial sign_normalized(const Polynomial& f);

}  // namespace ghstab
