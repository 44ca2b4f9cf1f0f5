#include "ghstab/classify.hpp"

#include <cmath>

#include "ghstab/error.hpp"
#include "ghstab/hurwitz.hpp"

namespace ghstab {

namespace {

void require_positive(const Polynomial& f) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "stability classes need degree >= 1");
  if (!f.is_positive()) throw Error(ErrorCode::NotPositive, "class membership needs a positive polynomial");
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Stable: return "Stable";
    case Verdict::QuasiStable: return "QuasiStable";
    case Verdict::Unstable: return "Unstable";
  }
  return "Unknown";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "Stable") return Verdict::Stable;
  if (text == "QuasiStable") return Verdict::QuasiStable;
  if (text == "Unstable") return Verdict::Unstable;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(text) + "'");
}

QuasiStability is_quasi_stable(const Polynomial& f, const AnalysisOptions& options) {
  if (is_hurwitz_stable(f)) return {Verdict::Stable, {}, false};
  const auto roots = to_complex_double(roots_oracle(f, options.root_precision));
  QuasiStability out{Verdict::QuasiStable, {}, true};
  for (const auto& z : roots) {
    if (z.real() >= options.tolerance) out.verdict = Verdict::Unstable;
    if (std::abs(z.real()) <= options.tolerance) out.boundary_roots.push_back(z);
  }
  if (out.boundary_roots.empty()) out.verdict = Verdict::Unstable;
  return out;
}

bool in_w(const Polynomial& f) {
  require_positive(f);
  if (f.degree() < 3) return is_hurwitz_stable(f);
  return lambdas(f).max() < 1;
}

bool in_w_alpha(const Polynomial& f, const Rational& alpha) {
  require_positive(f);
  if (f.degree() < 3) return is_hurwitz_stable(f);
  return lambdas(f).max() < alpha;
}

bool in_w_constant(const Polynomial& f, ConstantTag tag) {
  require_positive(f);
  if (f.degree() < 3) return is_hurwitz_stable(f);
  return less_than_constant(lambdas(f).max(), tag);
}

bool in_v(const Polynomial& f) {
  require_positive(f);
  if (f.degree() < 3) return is_hurwitz_stable(f);
  return lambdas(f).sum() < 1;
}

StabilityReport analyze(const Polynomial& f, const AnalysisOptions& options) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "stability needs degree >= 1");
  const Polynomial normalized = sign_normalized(f);
  QuasiStability q = is_quasi_stable(normalized, options);
  StabilityReport report{f, q.verdict, leading_principal_minors(normalized), std::nullopt, {},
                         std::move(q.boundary_roots), q.oracle_ran};
  if (normalized.is_positive()) {
    report.memberships.r_plus = true;
    if (normalized.degree() >= 3) report.lambdas = lambdas(normalized);
    report.memberships.w = in_w(normalized);
    report.memberships.w_alpha_star = in_w_constant(normalized, ConstantTag::AlphaStar);
    report.memberships.w_beta_star = in_w_constant(normalized, ConstantTag::BetaStar);
    report.memberships.v = in_v(normalized);
  }
  return report;
}

StabilityReport classify(const Polynomial& f, const AnalysisOptions& options) {
  require_positive(f);
  return analyze(f, options);
}

}  // namespace ghstab
