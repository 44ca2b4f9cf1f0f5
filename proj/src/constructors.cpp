#include "ghstab/constructors.hpp"

#include <cmath>

#include "ghstab/bigfloat.hpp"
#include "ghstab/error.hpp"
#include "ghstab/hurwitz.hpp"

namespace ghstab {

namespace {

bool positive_and_stable(const Polynomial& f) { return f.degree() >= 1 && f.is_positive() && is_hurwitz_stable(f); }

void require_stable(const Polynomial& f) {
  if (!positive_and_stable(f)) throw Error(ErrorCode::NotStableInput, to_string(f) + " is not a positive stable polynomial");
}

void require_positive_epsilon(const Rational& epsilon) {
  if (epsilon <= 0) throw Error(ErrorCode::NonPositiveParameter, "epsilon must be positive, got " + to_string(epsilon));
}

Polynomial with_appended(const Polynomial& f, const Rational& c) {
  std::vector<Rational> coeffs(f.coeffs().begin(), f.coeffs().end());
  coeffs.push_back(c);
  return Polynomial(std::move(coeffs));
}

void check_degree_range(const Polynomial& f, std::size_t m) {
  if (m < 1 || m > f.degree()) {
    throw Error(ErrorCode::BadDegree,
                "stabilizer degree " + std::to_string(m) + " outside 1.." + std::to_string(f.degree()));
  }
}

[[noreturn]] void verification_failed(const std::string& what) { throw Error(ErrorCode::VerificationFailed, what); }

std::vector<StabilityReport> verify_product(const Polynomial& g, const GeneralizedProduct& product,
                                            const AnalysisOptions& options) {
  if (!is_hurwitz_stable(g)) verification_failed("g = " + to_string(g) + " is not stable");
  std::vector<StabilityReport> reports;
  reports.reserve(product.elements.size());
  for (std::size_t j = 0; j < product.elements.size(); ++j) {
    reports.push_back(analyze(product.elements[j], options));
    if (reports.back().verdict != Verdict::Stable) {
      verification_failed("F_" + std::to_string(j) + " = " + to_string(product.elements[j]) + " is not stable");
    }
  }
  return reports;
}

// |log x| for 0 < x < 1, enclosed as [lo, hi] at the given precision.
std::pair<BigFloat, BigFloat> abs_log_enclosure(const Rational& x, mpfr_prec_t prec) {
  BigFloat down(x, prec, MPFR_RNDD);
  BigFloat up(x, prec, MPFR_RNDU);
  mpfr_log(down.get(), down.get(), MPFR_RNDD);  // <= log x
  mpfr_log(up.get(), up.get(), MPFR_RNDU);      // >= log x
  mpfr_neg(up.get(), up.get(), MPFR_RNDN);
  mpfr_neg(down.get(), down.get(), MPFR_RNDN);
  return {std::move(up), std::move(down)};
}

}  // namespace

ExtensionStep extend_one(const Polynomial& f, const Rational& epsilon) {
  require_stable(f);
  require_positive_epsilon(epsilon);
  Rational candidate = epsilon / 2;
  for (int k = 0; k < kExtensionHalvings; ++k) {
    Polynomial extended = with_appended(f, candidate);
    auto minors = leading_principal_minors(extended);
    if (is_hurwitz_stable(extended)) return {candidate, std::move(extended), std::move(minors)};
    candidate /= 2;
  }
  throw Error(ErrorCode::SearchBudgetExhausted, "no stable extension of " + to_string(f) + " found");
}

ExtensionCertificate extend_stable(const Polynomial& f, std::size_t target_degree, const Rational& epsilon) {
  if (target_degree <= f.degree()) {
    throw Error(ErrorCode::BadDegree, "target degree " + std::to_string(target_degree) + " must exceed " +
                                          std::to_string(f.degree()));
  }
  ExtensionCertificate cert{f, {}, epsilon, f, {}};
  while (cert.result.degree() < target_degree) {
    ExtensionStep step = extend_one(cert.result, epsilon);
    cert.appended.push_back(step.coefficient);
    cert.step_witnesses.push_back(std::move(step.minors));
    cert.result = std::move(step.extended);
  }
  return cert;
}

bool verify(const ExtensionCertificate& cert) {
  if (!positive_and_stable(cert.base)) return false;
  Polynomial current = cert.base;
  if (cert.step_witnesses.size() != cert.appended.size()) return false;
  for (std::size_t k = 0; k < cert.appended.size(); ++k) {
    const Rational& a = cert.appended[k];
    if (!(a > 0 && a < cert.epsilon)) return false;
    current = with_appended(current, a);
    if (!is_hurwitz_stable(current)) return false;
    if (leading_principal_minors(current) != cert.step_witnesses[k]) return false;
  }
  return current == cert.result;
}

PrependResult prepend_stable(const Polynomial& f, std::size_t k, const Rational& epsilon) {
  require_stable(f);
  if (k < 1) throw Error(ErrorCode::BadDegree, "prepend shift k must be >= 1");
  ExtensionCertificate cert = extend_stable(reversal(f), f.degree() + k, epsilon);
  Polynomial combined = reversal(cert.result);
  Polynomial p(std::vector<Rational>(combined.coeffs().begin(), combined.coeffs().begin() + static_cast<long>(k)));
  return {std::move(p), std::move(combined), std::move(cert)};
}

Polynomial lambda_uniform(std::size_t m, const Rational& epsilon, const std::array<Rational, 3>& seeds) {
  if (m < 3) throw Error(ErrorCode::BadDegree, "λ-uniform builder needs m >= 3, got " + std::to_string(m));
  require_positive_epsilon(epsilon);
  for (const auto& b : seeds) {
    if (b <= 0) throw Error(ErrorCode::NonPositiveSeed, "seed " + to_string(b) + " is not positive");
  }
  std::vector<Rational> b(seeds.begin(), seeds.end());
  for (std::size_t k = 1; k + 2 <= m; ++k) b.push_back(epsilon * b[k + 1] * b[k] / b[k - 1]);
  return Polynomial(std::move(b));
}

Enclosure p_star(const Polynomial& f) {
  const Rational max_lambda = lambdas(f).max();
  if (max_lambda >= 1) throw Error(ErrorCode::NotInW, "max λ = " + to_string(max_lambda) + " is not below 1");

  constexpr mpfr_prec_t prec = 128;
  const CertifiedConstant& alpha = certified_constant(ConstantTag::AlphaStar);
  auto [alpha_log_lo, ignored_hi] = abs_log_enclosure(alpha.hi, prec);
  auto [ignored_lo, alpha_log_hi] = abs_log_enclosure(alpha.lo, prec);
  auto [lambda_log_lo, lambda_log_hi] = abs_log_enclosure(max_lambda, prec);
  if (lambda_log_lo.sign() <= 0) throw Error(ErrorCode::NotInW, "max λ too close to 1 for p*");

  BigFloat lo(prec);
  BigFloat hi(prec);
  mpfr_div(lo.get(), alpha_log_lo.get(), lambda_log_hi.get(), MPFR_RNDD);
  mpfr_div(hi.get(), alpha_log_hi.get(), lambda_log_lo.get(), MPFR_RNDU);
  return {lo.to_double(MPFR_RNDD), hi.to_double(MPFR_RNDU)};
}

FactorizationTest factorization_sufficient(const Polynomial& f, long precision_bits) {
  const Rational max_lambda = lambdas(f).max();
  FactorizationTest out;
  out.sufficient = less_than_constant(max_lambda, ConstantTag::GammaStar);
  if (out.sufficient) {
    const Polynomial root = hadamard_power(f, make_rational(1, 2), precision_bits);
    out.witness = std::make_pair(root, root);
  }
  return out;
}

std::string_view to_string(StabilizationMethod m) noexcept {
  return m == StabilizationMethod::LambdaUniform ? "LambdaUniform" : "HadamardFactorized";
}

StabilizationResult stabilize(const Polynomial& f, std::size_t m, const AnalysisOptions& options) {
  if (!f.is_positive()) throw Error(ErrorCode::NotPositive, "stabilize needs a positive polynomial");
  check_degree_range(f, m);

  Rational epsilon = 0;
  Polynomial g = all_ones(m);
  if (m >= 3) {
    // g has λ_i = ε, so ε must clear α* on its own as well as after scaling by max λ(f).
    epsilon = certified_constant(ConstantTag::AlphaStar).lo / (2 * std::max(Rational(1), lambdas(f).max()));
    g = lambda_uniform(m, epsilon);
  }
  GeneralizedProduct product = generalized_hadamard(f, g);

  if (m >= 3) {
    const LambdaVector lf = lambdas(f);
    const LambdaVector lg = lambdas(g);
    for (std::size_t j = 0; j < product.elements.size(); ++j) {
      const LambdaVector le = lambdas(product.elements[j]);
      for (std::size_t i = 2; i + 1 <= m; ++i) {
        if (le.at(i) != lf.at(i + j) * lg.at(i)) verification_failed("λ-multiplicativity broken at F_" + std::to_string(j));
        if (!less_than_constant(le.at(i), ConstantTag::AlphaStar)) {
          verification_failed("λ_" + std::to_string(i) + "(F_" + std::to_string(j) + ") is not below α*");
        }
      }
    }
  }
  auto reports = verify_product(g, product, options);
  return {std::move(g), std::move(product), StabilizationMethod::LambdaUniform, epsilon, {}, std::move(reports)};
}

StabilizationResult stabilize_factorized(const Polynomial& f, std::size_t m, const AnalysisOptions& options) {
  if (!f.is_positive()) throw Error(ErrorCode::NotPositive, "stabilize_factorized needs a positive polynomial");
  if (!in_w(f)) throw Error(ErrorCode::NotInW, to_string(f) + " is not in W_n");
  check_degree_range(f, m);

  if (m < 3) {
    Polynomial g = all_ones(m);
    GeneralizedProduct product = generalized_hadamard(f, g);
    auto reports = verify_product(g, product, options);
    return {g, std::move(product), StabilizationMethod::HadamardFactorized, Rational(1), {g, g}, std::move(reports)};
  }

  const std::vector<Polynomial> parts = windows(f, m);
  double p_star_hi = 0;
  for (const auto& w : parts) p_star_hi = std::max(p_star_hi, p_star(w).hi);
  const unsigned long p = static_cast<unsigned long>(std::floor(p_star_hi)) + 1;

  std::vector<Polynomial> factors;
  factors.reserve(parts.size());
  for (const auto& w : parts) {
    factors.push_back(hadamard_power(w, Rational(static_cast<long>(p))));
    if (!is_hurwitz_stable(factors.back())) verification_failed("factor " + to_string(factors.back()) + " is not stable");
  }
  Polynomial g = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) g = hadamard_product(g, factors[k]);

  GeneralizedProduct product = generalized_hadamard(f, g);
  auto reports = verify_product(g, product, options);
  return {std::move(g), std::move(product), StabilizationMethod::HadamardFactorized, Rational(static_cast<long>(p)),
          std::move(factors), std::move(reports)};
}

}  // namespace ghstab
