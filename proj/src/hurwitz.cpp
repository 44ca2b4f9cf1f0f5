#include "ghstab/hurwitz.hpp"

#include <algorithm>

#include "ghstab/error.hpp"

namespace ghstab {

namespace {

void require_nonconstant(const Polynomial& f) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "constant polynomial has no Hurwitz matrix");
}

// Leading principal k×k block of a row-major n×n matrix.
std::vector<Integer> leading_block(const std::vector<Integer>& m, std::size_t n, std::size_t k) {
  std::vector<Integer> block(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) block[i * k + j] = m[i * n + j];
  }
  return block;
}

}  // namespace

HurwitzMatrix::HurwitzMatrix(const Polynomial& f) : source_(f), n_(f.degree()), entries_(n_ * n_) {
  require_nonconstant(f);
  const long n = static_cast<long>(n_);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      entries_[static_cast<std::size_t>((i - 1) * n + (j - 1))] = f.coeff(n - 2 * i + j);
    }
  }
}

HurwitzMatrix hurwitz_matrix(const Polynomial& f) { return HurwitzMatrix(f); }

Integer bareiss_determinant(std::vector<Integer> m, std::size_t n) {
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap_row * n + j]);
      sign = -sign;
    }
    const Integer pivot = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = pivot;
  }
  return sign * m[n * n - 1];
}

std::vector<Rational> leading_principal_minors(const Polynomial& f) {
  require_nonconstant(f);
  const std::size_t n = f.degree();

  // Scale by the lcm of denominators: Δ_k(c·f) = c^k Δ_k(f).
  Integer scale = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a.get_den_mpz_t());

  const HurwitzMatrix h(f);
  std::vector<Integer> original(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational scaled = h(i, j) * scale;
      original[i * n + j] = scaled.get_num();
    }
  }

  std::vector<Integer> integer_minors;
  integer_minors.reserve(n);
  std::vector<Integer> m = original;
  Integer previous = 1;
  std::size_t k = 0;
  for (; k < n; ++k) {
    const Integer pivot = m[k * n + k];
    integer_minors.push_back(pivot);
    if (pivot == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = pivot;
  }
  // A vanishing leading minor stops the pivot chain; the rest are computed
  // one by one with pivoting.
  for (std::size_t size = k + 2; size <= n; ++size) {
    integer_minors.push_back(bareiss_determinant(leading_block(original, n, size), size));
  }

  std::vector<Rational> minors(n);
  Integer scale_power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    scale_power *= scale;
    minors[i] = Rational(integer_minors[i], scale_power);
    minors[i].canonicalize();
  }
  return minors;
}

Polynomial sign_normalized(const Polynomial& f) {
  const bool non_positive = std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Rational& a) { return a <= 0; });
  return non_positive ? f.negated() : f;
}

bool is_hurwitz_stable(const Polynomial& f) {
  require_nonconstant(f);
  const Polynomial g = sign_normalized(f);
  if (!g.is_positive()) return false;
  const auto minors = leading_principal_minors(g);
  return std::all_of(minors.begin(), minors.end() - 1, [](const Rational& d) { return d > 0; });
}

}  // namespace ghstab
