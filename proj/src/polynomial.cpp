#include "ghstab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ghstab/bigfloat.hpp"
#include "ghstab/error.hpp"

namespace ghstab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::EmptyCoefficients, "polynomial needs at least one coefficient");
  if (coeffs_.back() == 0) throw Error(ErrorCode::ZeroLeadingCoefficient, "leading coefficient is zero");
}

Rational Polynomial::coeff(long i) const {
  if (i < 0 || i > static_cast<long>(degree())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool Polynomial::is_positive() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& a) { return a > 0; });
}

Polynomial Polynomial::negated() const {
  std::vector<Rational> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](const Rational& a) { return Rational(-a); });
  return Polynomial(std::move(c));
}

Polynomial make_polynomial(std::vector<Rational> coeffs) { return Polynomial(std::move(coeffs)); }

std::string to_string(const Polynomial& f) {
  std::string out;
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    if (i) out += ' ';
    out += to_string(f[i]);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Rational> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_rational(token));
  return Polynomial(std::move(coeffs));
}

Polynomial reversal(const Polynomial& f) {
  std::vector<Rational> c(f.coeffs().rbegin(), f.coeffs().rend());
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return Polynomial(std::move(c));
}

Polynomial hadamard_product(const Polynomial& f, const Polynomial& g) {
  if (g.degree() > f.degree()) {
    throw Error(ErrorCode::DegreeOrder, "deg g = " + std::to_string(g.degree()) + " exceeds deg f = " +
                                            std::to_string(f.degree()));
  }
  std::vector<Rational> c(g.degree() + 1);
  for (std::size_t i = 0; i <= g.degree(); ++i) c[i] = f[i] * g[i];
  return Polynomial(std::move(c));
}

std::vector<Polynomial> windows(const Polynomial& f, std::size_t m) {
  const std::size_t n = f.degree();
  if (m < 1 || m > n) {
    throw Error(ErrorCode::BadWindowDegree,
                "window degree " + std::to_string(m) + " outside 1.." + std::to_string(n));
  }
  if (!f.is_positive()) throw Error(ErrorCode::NotPositive, "windows need a positive polynomial");
  std::vector<Polynomial> out;
  out.reserve(n - m + 1);
  for (std::size_t j = 0; j + m <= n; ++j) {
    out.emplace_back(std::vector<Rational>(f.coeffs().begin() + j, f.coeffs().begin() + j + m + 1));
  }
  return out;
}

GeneralizedProduct generalized_hadamard(const Polynomial& f, const Polynomial& g) {
  if (g.degree() > f.degree()) {
    throw Error(ErrorCode::DegreeOrder, "deg g = " + std::to_string(g.degree()) + " exceeds deg f = " +
                                            std::to_string(f.degree()));
  }
  if (!g.is_positive()) throw Error(ErrorCode::NotPositive, "g must be positive");
  GeneralizedProduct out{f, g, windows(f, g.degree()), {}};
  out.elements.reserve(out.windows.size());
  for (const auto& w : out.windows) out.elements.push_back(hadamard_product(w, g));
  return out;
}

Polynomial hadamard_power(const Polynomial& f, const Rational& p, long precision_bits) {
  if (p <= 0) throw Error(ErrorCode::NonPositiveExponent, "exponent " + to_string(p) + " is not positive");
  if (!f.is_positive()) throw Error(ErrorCode::NotPositive, "Hadamard power needs a positive polynomial");

  std::vector<Rational> c(f.degree() + 1);
  if (p.get_den() == 1 && p.get_num().fits_ulong_p()) {
    const unsigned long e = p.get_num().get_ui();
    for (std::size_t i = 0; i <= f.degree(); ++i) c[i] = pow(f[i], e);
    return Polynomial(std::move(c));
  }

  if (precision_bits < MPFR_PREC_MIN) {
    throw Error(ErrorCode::NonPositiveParameter, "power precision must be at least " + std::to_string(MPFR_PREC_MIN));
  }
  const auto prec = static_cast<mpfr_prec_t>(precision_bits);
  const BigFloat exponent(p, prec);
  for (std::size_t i = 0; i <= f.degree(); ++i) {
    BigFloat a(f[i], prec);
    mpfr_pow(a.get(), a.get(), exponent.get(), MPFR_RNDN);
    c[i] = a.to_rational();
  }
  return Polynomial(std::move(c));
}

Rational LambdaVector::max() const { return *std::max_element(values_.begin(), values_.end()); }

Rational LambdaVector::sum() const {
  Rational total = 0;
  for (const auto& v : values_) total += v;
  return total;
}

LambdaVector lambdas(const Polynomial& f) {
  const std::size_t n = f.degree();
  if (n < 3) throw Error(ErrorCode::DegreeTooSmall, "λ-ratios need degree >= 3, got " + std::to_string(n));
  if (!f.is_positive()) throw Error(ErrorCode::NotPositive, "λ-ratios need a positive polynomial");
  std::vector<Rational> values;
  values.reserve(n - 2);
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    values.emplace_back((f[i - 2] * f[i + 1]) / (f[i] * f[i - 1]));
  }
  return LambdaVector(std::move(values));
}

Polynomial prepend(const Polynomial& p, std::size_t k, const Polynomial& f) {
  if (k < 1 || p.degree() >= k) {
    throw Error(ErrorCode::DegreeOverlap,
                "deg p = " + std::to_string(p.degree()) + " must be below k = " + std::to_string(k));
  }
  std::vector<Rational> c(k + f.degree() + 1);
  for (std::size_t i = 0; i <= p.degree(); ++i) c[i] = p[i];
  for (std::size_t i = 0; i <= f.degree(); ++i) c[k + i] = f[i];
  return Polynomial(std::move(c));
}

Polynomial all_ones(std::size_t m) { return Polynomial(std::vector<Rational>(m + 1, Rational(1))); }

}  // namespace ghstab
