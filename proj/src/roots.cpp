#include "ghstab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ghstab/error.hpp"

namespace ghstab {

namespace {

struct Evaluation {
  BigComplex value;
  BigComplex derivative;
  BigFloat magnitude_bound;  // Σ |a_i| |z|^i
};

Evaluation horner(const std::vector<BigFloat>& a, const BigComplex& z) {
  const mpfr_prec_t prec = z.precision();
  BigComplex p(a.back(), BigFloat(prec));
  BigComplex dp(prec);
  const BigFloat r = abs(z);
  BigFloat bound = abs(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z;
    p.re += a[i];
    bound = bound * r + abs(a[i]);
  }
  return {std::move(p), std::move(dp), std::move(bound)};
}

// Upper convex hull of (i, log2|a_i|) over the nonzero coefficients.
std::vector<std::size_t> newton_polygon(const std::vector<double>& log_mag) {
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < log_mag.size(); ++i) {
    if (std::isinf(log_mag[i])) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross = (static_cast<double>(b) - a) * (log_mag[i] - log_mag[a]) -
                           (log_mag[b] - log_mag[a]) * (static_cast<double>(i) - a);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  return hull;
}

std::vector<BigComplex> initial_points(const std::vector<BigFloat>& a, mpfr_prec_t prec) {
  const std::size_t n = a.size() - 1;
  std::vector<double> log_mag(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    BigFloat m = abs(a[i]);
    mpfr_log2(m.get(), m.get(), MPFR_RNDN);
    log_mag[i] = m.to_double();
  }
  const auto hull = newton_polygon(log_mag);

  std::vector<BigComplex> z;
  z.reserve(n);
  constexpr double kOffset = 0.7;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t lo = hull[h];
    const std::size_t hi = hull[h + 1];
    const std::size_t count = hi - lo;
    const double log_radius = (log_mag[lo] - log_mag[hi]) / static_cast<double>(count);
    BigFloat radius(log_radius, prec);
    mpfr_exp2(radius.get(), radius.get(), MPFR_RNDN);
    for (std::size_t k = 0; k < count; ++k) {
      const double angle = 2 * std::numbers::pi * (static_cast<double>(k) / count) +
                           2 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(n) + kOffset;
      z.emplace_back(radius * BigFloat(std::cos(angle), prec), radius * BigFloat(std::sin(angle), prec));
    }
  }
  return z;
}

}  // namespace

std::vector<BigComplex> roots_oracle(const Polynomial& f, long precision_bits) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "constant polynomial has no roots");
  const auto prec = static_cast<mpfr_prec_t>(std::max<long>(precision_bits, 32));

  // Zero roots from vanishing low-order coefficients.
  std::size_t zeros = 0;
  while (f[zeros] == 0) ++zeros;
  std::vector<BigFloat> a;
  for (std::size_t i = zeros; i <= f.degree(); ++i) a.emplace_back(f[i], prec);

  std::vector<BigComplex> roots;
  for (std::size_t i = 0; i < zeros; ++i) roots.emplace_back(prec);
  const std::size_t n = a.size() - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.emplace_back(-(a[0] / a[1]), BigFloat(prec));
    return roots;
  }

  std::vector<BigComplex> z = initial_points(a, prec);
  std::vector<bool> done(n, false);
  BigFloat tolerance(1.0, prec);
  mpfr_mul_2si(tolerance.get(), tolerance.get(), -static_cast<long>(prec) + 3, MPFR_RNDN);
  tolerance *= BigFloat(static_cast<double>(n), prec);

  const std::size_t budget = 200 + 50 * n;
  for (std::size_t iter = 0; iter < budget; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Evaluation e = horner(a, z[i]);
      if (abs(e.value) <= tolerance * e.magnitude_bound) {
        done[i] = true;
        continue;
      }
      all_done = false;
      const BigComplex newton = e.value / e.derivative;
      BigComplex repulsion(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        BigComplex one(BigFloat(1.0, prec), BigFloat(prec));
        repulsion += one / (z[i] - z[j]);
      }
      BigComplex one(BigFloat(1.0, prec), BigFloat(prec));
      const BigComplex step = newton / (one - newton * repulsion);
      z[i] -= step;
    }
    if (all_done) {
      for (auto& root : z) roots.push_back(std::move(root));
      return roots;
    }
  }
  throw Error(ErrorCode::NoConvergence, "Aberth iteration did not converge for " + to_string(f));
}

std::vector<std::complex<double>> to_complex_double(const std::vector<BigComplex>& roots) {
  std::vector<std::complex<double>> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.emplace_back(r.re.to_double(), r.im.to_double());
  return out;
}

double max_real_part(const std::vector<BigComplex>& roots) {
  double best = -HUGE_VAL;
  for (const auto& r : roots) best = std::max(best, r.re.to_double());
  return best;
}

std::vector<BigComplex> expand_roots(const std::vector<BigComplex>& roots, const Rational& leading) {
  const mpfr_prec_t prec = roots.empty() ? 128 : roots.front().precision();
  std::vector<BigComplex> c;
  c.emplace_back(BigFloat(leading, prec), BigFloat(prec));
  for (const auto& r : roots) {
    // c(s) <- c(s) * (s - r)
    c.emplace_back(prec);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = BigComplex(BigFloat(prec), BigFloat(prec)) - r * c[0];
  }
  return c;
}

}  // namespace ghstab
