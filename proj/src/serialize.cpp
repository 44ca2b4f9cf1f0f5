#include "ghstab/serialize.hpp"

namespace ghstab {

using nlohmann::json;

namespace {

json rationals(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json polynomials(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Polynomial& f) { return to_string(f); }

json to_json(const LambdaVector& l) {
  return {{"values", rationals(l.values())}, {"max", to_string(l.max())}, {"sum", to_string(l.sum())}};
}

json to_json(const Memberships& m) {
  return {{"R_plus", m.r_plus}, {"W", m.w}, {"W_alpha_star", m.w_alpha_star}, {"W_beta_star", m.w_beta_star}, {"V", m.v}};
}

json to_json(const StabilityReport& r) {
  json roots = json::array();
  for (const auto& z : r.boundary_roots) roots.push_back({{"re", z.real()}, {"im", z.imag()}});
  return {{"polynomial", to_string(r.polynomial)},
          {"verdict", std::string(to_string(r.verdict))},
          {"minors", rationals(r.minors)},
          {"lambdas", r.lambdas ? rationals(r.lambdas->values()) : json(nullptr)},
          {"memberships", to_json(r.memberships)},
          {"boundary_roots", roots}};
}

json to_json(const CertifiedConstant& c) {
  return {{"constant", std::string(to_string(c.tag))},
          {"lo", to_string(c.lo)},
          {"hi", to_string(c.hi)},
          {"lo_approx", to_double(c.lo)},
          {"hi_approx", to_double(c.hi)},
          {"width", to_double(c.width())},
          {"residual_bound", to_string(c.residual_bound)}};
}

json to_json(const GeneralizedProduct& p) {
  return {{"f", to_string(p.f)}, {"g", to_string(p.g)}, {"windows", polynomials(p.windows)},
          {"elements", polynomials(p.elements)}};
}

json to_json(const ExtensionCertificate& c) {
  json witnesses = json::array();
  for (const auto& w : c.step_witnesses) witnesses.push_back(rationals(w));
  return {{"base", to_string(c.base)},
          {"appended", rationals(c.appended)},
          {"epsilon", to_string(c.epsilon)},
          {"result", to_string(c.result)},
          {"step_witnesses", witnesses}};
}

json to_json(const StabilizationResult& r) {
  json verification = json::array();
  for (const auto& rep : r.verification) verification.push_back(to_json(rep));
  return {{"g", to_string(r.g)},
          {"method", std::string(to_string(r.method))},
          {"parameter", to_string(r.parameter)},
          {"product", to_json(r.product)},
          {"factorization_witness", polynomials(r.factors)},
          {"verification", verification}};
}

}  // namespace ghstab
