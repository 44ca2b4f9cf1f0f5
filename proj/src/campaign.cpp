#include "ghstab/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <set>
#include <thread>

#include <mpfr.h>

#include "ghstab/constants.hpp"
#include "ghstab/constructors.hpp"
#include "ghstab/error.hpp"
#include "ghstab/hurwitz.hpp"
#include "ghstab/sampling.hpp"

namespace ghstab {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

class Trial {
 public:
  Trial(const CampaignConfig& config, std::uint64_t property, std::uint64_t index)
      : rng({config.seed, property, index}), config_(config) {}

  Rng rng;

  const CampaignConfig& config() const { return config_; }
  AnalysisOptions options() const { return {config_.quasi_tolerance, config_.root_precision}; }

  /// Degree in [max(lowest, min_degree), upper].
  std::size_t degree(std::size_t lowest, std::size_t upper) {
    const std::size_t lo = std::max(lowest, config_.min_degree);
    return static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(std::max(lo, upper))));
  }
  std::size_t degree(std::size_t lowest = 1) { return degree(lowest, config_.max_degree); }
  /// Auxiliary degree in [lowest, upper], not clamped by the configured range.
  std::size_t sub_degree(std::size_t lowest, std::size_t upper) {
    return static_cast<std::size_t>(rng.uniform(static_cast<long>(lowest), static_cast<long>(upper)));
  }

  const Polynomial& input(const std::string& name, Polynomial p) {
    inputs_.emplace_back(name, std::move(p));
    return inputs_.back().second;
  }

  /// Routh–Hurwitz verdict; the polynomial joins the oracle corpus.
  bool stable(const Polynomial& p) {
    corpus.push_back(p);
    return is_hurwitz_stable(p);
  }

  void expect(bool condition, const std::string& message) {
    if (!condition && failure_.empty()) failure_ = message;
  }

  bool failed() const { return !failure_.empty(); }
  const std::string& failure() const { return failure_; }
  void fail(const std::string& message) { expect(false, message); }

  TrialFailure record(std::size_t index) const {
    TrialFailure f{index, failure_, {}};
    for (const auto& [name, p] : inputs_) f.polynomials[name] = to_string(p);
    return f;
  }

  std::vector<Polynomial> corpus;
  std::size_t boundary = 0;

 private:
  const CampaignConfig& config_;
  std::string failure_;
  std::deque<std::pair<std::string, Polynomial>> inputs_;  // stable references
};

using Body = std::function<void(Trial&)>;

struct Property {
  std::string id;
  std::string description;
  std::size_t min_degree;
  Body body;
};

const Rational& alpha_lo() { return certified_constant(ConstantTag::AlphaStar).lo; }
const Rational& beta_lo() { return certified_constant(ConstantTag::BetaStar).lo; }

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

/// max Re(z) / |z| over the roots; scale-invariant, and 0 for a root at the origin.
double max_relative_real_part(const std::vector<BigComplex>& roots) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& z : roots) {
    const BigFloat modulus = abs(z);
    best = std::max(best, modulus.is_zero() ? 0.0 : (z.re / modulus).to_double());
  }
  return best;
}

std::string element_name(std::size_t j) { return "F_" + std::to_string(j); }

std::vector<Property> properties() {
  std::vector<Property> ps;

  ps.push_back({"garloff_wagner", "f, g stable => f o g stable", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", random_stable(n, t.rng));
    const auto& g = t.input("g", random_stable(t.sub_degree(1, n), t.rng));
    t.expect(t.stable(hadamard_product(f, g)), "f o g is not stable");
  }});

  ps.push_back({"theorem1", "f in W_n, g stable, m <= 4 => f . g stable", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", random_w_member(n, 1, t.rng));
    const auto& g = t.input("g", random_stable(t.sub_degree(1, std::min<std::size_t>(4, n)), t.rng));
    const auto product = generalized_hadamard(f, g);
    for (std::size_t j = 0; j < product.elements.size(); ++j) {
      t.expect(t.stable(product.elements[j]), element_name(j) + " is not stable");
    }
  }});

  ps.push_back({"theorem2a", "f, g stable => F_0 and F_{n-m} stable", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", random_stable(n, t.rng));
    const auto& g = t.input("g", random_stable(t.sub_degree(1, n), t.rng));
    const auto product = generalized_hadamard(f, g);
    t.expect(product.elements.front() == hadamard_product(f, g), "F_0 differs from f o g");
    t.expect(product.elements.back() == reversal(hadamard_product(reversal(f), reversal(g))),
             "F_{n-m} differs from (f* o g*)*");
    t.expect(t.stable(product.elements.front()), "F_0 is not stable");
    t.expect(t.stable(product.elements.back()), "F_{n-m} is not stable");
  }});

  ps.push_back({"theorem2b", "f, g stable => every F_j quasi-stable", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", random_stable(n, t.rng));
    const auto& g = t.input("g", random_stable(t.sub_degree(1, n), t.rng));
    const auto product = generalized_hadamard(f, g);
    for (std::size_t j = 0; j < product.elements.size(); ++j) {
      t.corpus.push_back(product.elements[j]);
      const Verdict v = is_quasi_stable(product.elements[j], t.options()).verdict;
      if (v == Verdict::QuasiStable) ++t.boundary;
      t.expect(v != Verdict::Unstable, element_name(j) + " is unstable");
    }
  }});

  ps.push_back({"theorem3", "f stable, g = g1 o g2 with g1, g2 stable => f . g stable", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const std::size_t m = t.sub_degree(1, n);
    const auto& f = t.input("f", random_stable(n, t.rng));
    const auto& g1 = t.input("g1", random_stable(m, t.rng));
    const auto& g2 = t.input("g2", random_stable(m, t.rng));
    const auto product = generalized_hadamard(f, hadamard_product(g1, g2));
    for (std::size_t j = 0; j < product.elements.size(); ++j) {
      t.expect(t.stable(product.elements[j]), element_name(j) + " is not stable");
    }
  }});

  ps.push_back({"theorem4a", "f in W_n, g in W_m^alpha* => f . g in W_m^alpha*", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const std::size_t m = t.sub_degree(1, n);
    const auto& f = t.input("f", random_w_member(n, 1, t.rng));
    const auto& g = t.input("g", m >= 3 ? random_w_member(m, alpha_lo(), t.rng) : random_stable(m, t.rng));
    t.expect(in_w_constant(g, ConstantTag::AlphaStar), "sampled g is not in W^alpha*");
    const auto product = generalized_hadamard(f, g);
    for (std::size_t j = 0; j < product.elements.size(); ++j) {
      t.expect(in_w_constant(product.elements[j], ConstantTag::AlphaStar), element_name(j) + " is not in W^alpha*");
    }
  }});

  ps.push_back({"theorem4b", "f in W_n^beta*, g in W_m^beta* => f . g in W_m^alpha*", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const std::size_t m = t.sub_degree(1, n);
    const auto& f = t.input("f", n >= 3 ? random_w_member(n, beta_lo(), t.rng) : random_stable(n, t.rng));
    const auto& g = t.input("g", m >= 3 ? random_w_member(m, beta_lo(), t.rng) : random_stable(m, t.rng));
    t.expect(in_w_constant(f, ConstantTag::BetaStar) && in_w_constant(g, ConstantTag::BetaStar),
             "sampled inputs are not in W^beta*");
    const auto product = generalized_hadamard(f, g);
    for (std::size_t j = 0; j < product.elements.size(); ++j) {
      t.expect(in_w_constant(product.elements[j], ConstantTag::AlphaStar), element_name(j) + " is not in W^alpha*");
    }
  }});

  ps.push_back({"theorem5", "f in W_n, g in V_m => f . g in V_m", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const std::size_t m = t.sub_degree(1, n);
    const auto& f = t.input("f", random_w_member(n, 1, t.rng));
    const auto& g = t.input("g", m >= 3 ? random_v_member(m, t.rng) : random_stable(m, t.rng));
    t.expect(in_v(g), "sampled g is not in V");
    const auto product = generalized_hadamard(f, g);
    for (std::size_t j = 0; j < product.elements.size(); ++j) {
      const auto& F = product.elements[j];
      t.expect(in_v(F), element_name(j) + " is not in V");
      if (m < 3) continue;
      const auto lf = lambdas(f);
      const auto lg = lambdas(g);
      Rational chain = 0;
      for (std::size_t i = 2; i + 1 <= m; ++i) chain += lf.at(i + j) * lg.at(i);
      t.expect(lambdas(F).sum() == chain, "sum of lambda(F_j) breaks the product identity");
      t.expect(chain < lg.sum() && lg.sum() < 1, "inequality chain fails at " + element_name(j));
    }
  }});

  ps.push_back({"theorem7", "any positive f: stabilize succeeds (lambda-uniform g)", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", random_positive(n, t.rng));
    const std::size_t m = t.sub_degree(1, n);
    const StabilizationResult s = stabilize(f, m, t.options());
    t.expect(t.stable(s.g), "g is not stable");
    for (std::size_t j = 0; j < s.product.elements.size(); ++j) {
      t.expect(t.stable(s.product.elements[j]), element_name(j) + " is not stable");
    }
  }});

  ps.push_back({"theorem6", "f in W_n: stabilize_factorized succeeds with a verified factorization", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", random_w_member(n, 1, t.rng));
    const std::size_t m = t.sub_degree(1, n);
    const StabilizationResult s = stabilize_factorized(f, m, t.options());
    t.expect(t.stable(s.g), "g is not stable");
    t.expect(!s.factors.empty(), "no factorization witness");
    Polynomial folded = s.factors.front();
    for (std::size_t k = 0; k < s.factors.size(); ++k) {
      t.expect(t.stable(s.factors[k]), "factor " + std::to_string(k) + " is not stable");
      if (k) folded = hadamard_product(folded, s.factors[k]);
    }
    t.expect(folded == s.g, "factors do not multiply to g");
    for (std::size_t j = 0; j < s.product.elements.size(); ++j) {
      t.expect(t.stable(s.product.elements[j]), element_name(j) + " is not stable");
    }
  }});

  ps.push_back({"lemma1", "stable extension certificates re-verify", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", random_stable(n, t.rng));
    const Rational epsilon = t.rng.ratio(1, 20, 10);
    const auto cert = extend_stable(f, n + t.sub_degree(1, 3), epsilon);
    t.expect(verify(cert), "certificate does not re-verify");
    for (const auto& a : cert.appended) t.expect(a > 0 && a < epsilon, "appended coefficient outside (0, eps)");
    t.expect(t.stable(cert.result), "extension is not stable");
  }});

  ps.push_back({"lemma2", "stable prepending p(s) + s^k f(s) with p in (0, eps)", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", random_stable(n, t.rng));
    const std::size_t k = t.sub_degree(1, 3);
    const Rational epsilon = make_rational(1, t.rng.uniform(1, 8));
    const auto r = prepend_stable(f, k, epsilon);
    t.expect(r.p.degree() == k - 1, "p has the wrong degree");
    for (const auto& c : r.p.coeffs()) t.expect(c > 0 && c < epsilon, "p coefficient outside (0, eps)");
    t.expect(r.combined == prepend(r.p, k, f), "combined differs from p + s^k f");
    t.expect(t.stable(r.combined), "p + s^k f is not stable");
  }});

  ps.push_back({"lemma3", "lambda-uniform builder has all lambda_i = eps", 3, [](Trial& t) {
    const std::size_t m = t.degree(3);
    const Rational epsilon = t.rng.ratio(1, 300, 100);
    const std::array<Rational, 3> seeds{t.rng.ratio(1, 100, 10), t.rng.ratio(1, 100, 10), t.rng.ratio(1, 100, 10)};
    const auto& g = t.input("g", lambda_uniform(m, epsilon, seeds));
    const auto lg = lambdas(g);
    for (const auto& l : lg.values()) t.expect(l == epsilon, "lambda differs from eps");
    if (epsilon < alpha_lo()) t.expect(t.stable(g), "eps < alpha* but g is not stable");
  }});

  ps.push_back({"lambda_multiplicativity", "lambda_i(F_j) = lambda_{i+j}(f) lambda_i(g)", 3, [](Trial& t) {
    const std::size_t n = t.degree(3);
    const auto& f = t.input("f", random_positive(n, t.rng));
    const auto& g = t.input("g", random_positive(t.sub_degree(3, n), t.rng));
    const auto product = generalized_hadamard(f, g);
    const auto lf = lambdas(f);
    const auto lg = lambdas(g);
    for (std::size_t j = 0; j < product.elements.size(); ++j) {
      const auto le = lambdas(product.elements[j]);
      for (std::size_t i = 2; i + 1 <= g.degree(); ++i) {
        t.expect(le.at(i) == lf.at(i + j) * lg.at(i), "identity fails at i = " + std::to_string(i) + ", j = " +
                                                          std::to_string(j));
      }
    }
  }});

  ps.push_back({"minor_identity", "Delta_n = a_0 Delta_{n-1}", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", t.rng.coin() ? random_stable(n, t.rng) : random_positive(n, t.rng));
    const auto minors = leading_principal_minors(f);
    const Rational previous = n >= 2 ? minors[n - 2] : Rational(1);
    t.expect(minors.back() == f[0] * previous, "Delta_n != a_0 Delta_{n-1}");
  }});

  ps.push_back({"reversal_equivalence", "f stable <=> f* stable", 1, [](Trial& t) {
    const std::size_t n = t.degree();
    const auto& f = t.input("f", t.rng.coin() ? random_stable(n, t.rng) : random_positive(n, t.rng));
    t.expect(t.stable(f) == t.stable(reversal(f)), "reversal changes the verdict");
  }});

  ps.push_back({"h_subset_w", "stable => all lambda_i < 1", 3, [](Trial& t) {
    const auto& f = t.input("f", random_stable(t.degree(3), t.rng));
    t.expect(in_w(f), "stable polynomial outside W");
  }});

  ps.push_back({"w_alpha_star_subset_h", "W_n^alpha* => stable", 3, [](Trial& t) {
    const auto& f = t.input("f", random_w_member(t.degree(3), alpha_lo(), t.rng));
    t.expect(in_w_constant(f, ConstantTag::AlphaStar), "sample is not in W^alpha*");
    t.expect(t.stable(f), "member of W^alpha* is not stable");
  }});

  ps.push_back({"v_subset_h", "V_n => stable", 3, [](Trial& t) {
    const auto& f = t.input("f", random_v_member(t.degree(3), t.rng));
    t.expect(in_v(f), "sample is not in V");
    t.expect(t.stable(f), "member of V is not stable");
  }});

  ps.push_back({"v_subset_w", "V_n => W_n for n >= 5", 5, [](Trial& t) {
    const auto& f = t.input("f", random_v_member(t.degree(5), t.rng));
    t.expect(in_v(f) && in_w(f), "member of V is outside W");
  }});

  return ps;
}

struct PropertyOutcome {
  PropertyResult result;
  std::vector<Polynomial> corpus;
  std::size_t boundary = 0;
};

PropertyOutcome run_property(const Property& p, std::size_t index, const CampaignConfig& config) {
  PropertyOutcome out;
  out.result.id = p.id;
  out.result.description = p.description;
  if (config.max_degree < p.min_degree) {
    out.result.skipped = true;
    return out;
  }
  for (std::size_t k = 0; k < config.trials; ++k) {
    Trial trial(config, index, k);
    try {
      p.body(trial);
    } catch (const Error& e) {
      trial.fail(std::string("error: ") + e.what());
    }
    ++out.result.trials;
    if (trial.failed()) {
      ++out.result.failed;
      if (out.result.failures.size() < kMaxRecordedFailures) out.result.failures.push_back(trial.record(k));
    } else {
      ++out.result.passed;
    }
    out.boundary += trial.boundary;
    for (auto& poly : trial.corpus) out.corpus.push_back(std::move(poly));
  }
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  auto pooled = [&] {
    worker();
    mpfr_free_cache2(MPFR_FREE_LOCAL_CACHE);  // MPFR constant caches are per thread
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(pooled);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace

void CampaignConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::BadConfig, "trials must be at least 1");
  if (min_degree < 1 || min_degree > max_degree || max_degree > 12) {
    throw Error(ErrorCode::BadConfig, "degree range must satisfy 1 <= min <= max <= 12");
  }
  if (!(quasi_tolerance > 0)) throw Error(ErrorCode::BadConfig, "quasi-stability tolerance must be positive");
  if (root_precision < 32) throw Error(ErrorCode::BadConfig, "root precision must be at least 32 bits");
}

bool CampaignReport::properties_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.failed == 0; });
}

const PropertyResult* CampaignReport::find(const std::string& id) const {
  for (const auto& p : properties) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::vector<std::string> campaign_property_ids() {
  std::vector<std::string> ids;
  for (const auto& p : properties()) ids.push_back(p.id);
  return ids;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  config.validate();
  const unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto table = properties();

  std::vector<PropertyOutcome> outcomes(table.size());
  parallel_for(table.size(), jobs, [&](std::size_t i) { outcomes[i] = run_property(table[i], i, config); });

  CampaignReport report;
  report.config = config;
  std::vector<Polynomial> corpus;
  std::vector<std::string> origin;
  std::set<std::string> seen;
  for (auto& o : outcomes) {
    for (auto& p : o.corpus) {
      if (!seen.insert(to_string(p)).second) continue;
      corpus.push_back(std::move(p));
      origin.push_back(o.result.id);
    }
    report.properties.push_back(std::move(o.result));
    report.boundary_sightings += o.boundary;
  }

  // Exact Routh–Hurwitz verdict against the numeric root oracle. Each real part
  // is taken relative to its root's modulus: s -> ρs preserves stability, and
  // campaign polynomials have root moduli spread over dozens of decades.
  enum class Agreement : char { Agree, Unresolved, Contradiction };
  std::vector<Agreement> agreement(corpus.size(), Agreement::Agree);
  std::vector<char> raw_band(corpus.size(), 0);
  std::vector<std::string> notes(corpus.size());
  const double tol = config.quasi_tolerance;
  parallel_for(corpus.size(), jobs, [&](std::size_t i) {
    try {
      const bool exact = is_hurwitz_stable(corpus[i]);
      const auto roots = roots_oracle(corpus[i], config.root_precision);
      const double max_re = max_real_part(roots);
      const double relative = max_relative_real_part(roots);
      raw_band[i] = (max_re < -tol) != (relative < -tol);
      if (exact != (relative < -tol)) {
        agreement[i] = std::abs(relative) < tol ? Agreement::Unresolved : Agreement::Contradiction;
        notes[i] = origin[i] + ": Routh-Hurwitz says " + (exact ? "stable" : "not stable") +
                   ", max Re(z)/|z| = " + format_double(relative);
      }
    } catch (const Error& e) {
      agreement[i] = Agreement::Contradiction;
      notes[i] = origin[i] + ": error: " + e.what();
    }
  });
  auto& oracle = report.oracle;
  oracle.corpus = corpus.size();
  oracle.rescaled = static_cast<std::size_t>(std::count(raw_band.begin(), raw_band.end(), 1));
  // Contradictions are listed first; they are the ones that would indicate a bug.
  for (const auto kind : {Agreement::Contradiction, Agreement::Unresolved}) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (agreement[i] != kind) continue;
      ++oracle.disagreements;
      ++(kind == Agreement::Contradiction ? oracle.contradictions : oracle.unresolved);
      ++oracle.origins[origin[i]];
      if (oracle.failures.size() < kMaxRecordedFailures) {
        oracle.failures.push_back({i, notes[i], {{"f", to_string(corpus[i])}}});
      }
    }
  }
  return report;
}

nlohmann::json to_json(const CampaignReport& report) {
  using nlohmann::json;
  auto failures_json = [](const std::vector<TrialFailure>& failures) {
    json out = json::array();
    for (const auto& f : failures) {
      out.push_back({{"trial", f.trial}, {"message", f.message}, {"polynomials", f.polynomials}});
    }
    return out;
  };
  json properties = json::array();
  for (const auto& p : report.properties) {
    properties.push_back({{"id", p.id},
                          {"description", p.description},
                          {"trials", p.trials},
                          {"passed", p.passed},
                          {"failed", p.failed},
                          {"skipped", p.skipped},
                          {"failures", failures_json(p.failures)}});
  }
  const auto& c = report.config;
  return {{"config",
           {{"min_degree", c.min_degree},
            {"max_degree", c.max_degree},
            {"trials", c.trials},
            {"seed", c.seed},
            {"quasi_tolerance", c.quasi_tolerance},
            {"root_precision", c.root_precision}}},
          {"properties", properties},
          {"oracle_agreement",
           {{"corpus", report.oracle.corpus},
            {"disagreements", report.oracle.disagreements},
            {"contradictions", report.oracle.contradictions},
            {"unresolved", report.oracle.unresolved},
            {"origins", report.oracle.origins},
            {"rescaled", report.oracle.rescaled},
            {"failures", failures_json(report.oracle.failures)}}},
          {"boundary_sightings", report.boundary_sightings},
          {"properties_passed", report.properties_passed()},
          {"all_passed", report.all_passed()}};
}

}  // namespace ghstab
