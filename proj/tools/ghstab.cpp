// Command-line front end. Polynomial arguments are either a path to a file
// holding the canonical text form or the text itself, e.g. "10 7 3 1".

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ghstab/campaign.hpp"
#include "ghstab/classify.hpp"
#include "ghstab/constants.hpp"
#include "ghstab/constructors.hpp"
#include "ghstab/error.hpp"
#include "ghstab/fixtures.hpp"
#include "ghstab/hurwitz.hpp"
#include "ghstab/serialize.hpp"

namespace {

using namespace ghstab;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  double tol = kDefaultQuasiTolerance;
  long precision = kDefaultRootPrecision;

  AnalysisOptions options() const { return {tol, precision}; }
};

std::string read_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

Polynomial polynomial_argument(const std::string& arg) { return parse_polynomial(read_argument(arg)); }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(std::ostream& os, const StabilityReport& r, const std::string& indent = "") {
  os << indent << "polynomial  " << to_string(r.polynomial) << '\n';
  os << indent << "verdict     " << to_string(r.verdict) << '\n';
  os << indent << "minors     ";
  for (const auto& m : r.minors) os << ' ' << to_string(m);
  os << '\n';
  if (r.lambdas) {
    os << indent << "lambdas    ";
    for (const auto& l : r.lambdas->values()) os << ' ' << to_string(l);
    os << '\n';
  }
  const auto& m = r.memberships;
  os << indent << "R+ " << yes_no(m.r_plus) << "  W " << yes_no(m.w) << "  W^alpha* " << yes_no(m.w_alpha_star)
     << "  W^beta* " << yes_no(m.w_beta_star) << "  V " << yes_no(m.v) << '\n';
  for (const auto& z : r.boundary_roots) {
    os << indent << "boundary root  " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i\n";
  }
}

int emit(const Globals& g, const json& j, const std::function<void(std::ostream&)>& human) {
  if (g.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    human(std::cout);
  }
  return kOk;
}

int stability_exit(bool assert_stable, Verdict v) {
  return assert_stable && v != Verdict::Stable ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz stability analysis with exact rational arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--tol", g.tol, "Quasi-stability tolerance on real parts")->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "Root oracle precision in bits")->check(CLI::Range(32L, 1L << 16));

  std::function<int()> action;

  std::string f_arg, g_arg, p_arg, n_arg, eps_arg;
  bool assert_stable = false;
  bool factorized = false;
  long power_bits = kDefaultPowerPrecision;
  std::size_t m_arg = 0;

  auto* check = app.add_subcommand("check", "Stability report for any non-constant polynomial");
  check->add_option("poly", f_arg, "Polynomial file or literal")->required();
  check->add_flag("--assert-stable", assert_stable, "Exit 1 unless the verdict is Stable");
  check->callback([&] {
    action = [&] {
      const auto r = analyze(polynomial_argument(f_arg), g.options());
      emit(g, to_json(r), [&](std::ostream& os) { print_report(os, r); });
      return stability_exit(assert_stable, r.verdict);
    };
  });

  auto* cls = app.add_subcommand("classify", "Verdict and class memberships of a positive polynomial");
  cls->add_option("poly", f_arg, "Polynomial file or literal")->required();
  cls->add_flag("--assert-stable", assert_stable, "Exit 1 unless the verdict is Stable");
  cls->callback([&] {
    action = [&] {
      const auto r = classify(polynomial_argument(f_arg), g.options());
      json j = {{"polynomial", to_json(r.polynomial)},
                {"verdict", to_string(r.verdict)},
                {"memberships", to_json(r.memberships)}};
      emit(g, j, [&](std::ostream& os) { print_report(os, r); });
      return stability_exit(assert_stable, r.verdict);
    };
  });

  auto* product = app.add_subcommand("product", "Hadamard product f o g (deg g <= deg f)");
  product->add_option("f", f_arg)->required();
  product->add_option("g", g_arg)->required();
  product->callback([&] {
    action = [&] {
      const auto h = hadamard_product(polynomial_argument(f_arg), polynomial_argument(g_arg));
      return emit(g, to_json(h), [&](std::ostream& os) { os << to_string(h) << '\n'; });
    };
  });

  auto* gproduct = app.add_subcommand("gproduct", "Generalized Hadamard product f . g with per-element reports");
  gproduct->add_option("f", f_arg)->required();
  gproduct->add_option("g", g_arg)->required();
  gproduct->add_flag("--assert-stable", assert_stable, "Exit 1 unless every element is Stable");
  gproduct->callback([&] {
    action = [&] {
      const auto p = generalized_hadamard(polynomial_argument(f_arg), polynomial_argument(g_arg));
      std::vector<StabilityReport> reports;
      bool all_stable = true;
      for (const auto& e : p.elements) {
        reports.push_back(analyze(e, g.options()));
        all_stable = all_stable && reports.back().verdict == Verdict::Stable;
      }
      json j = to_json(p);
      j["reports"] = json::array();
      for (const auto& r : reports) j["reports"].push_back(to_json(r));
      emit(g, j, [&](std::ostream& os) {
        for (std::size_t k = 0; k < reports.size(); ++k) {
          os << "F_" << k << '\n';
          print_report(os, reports[k], "  ");
        }
      });
      return assert_stable && !all_stable ? kMismatch : kOk;
    };
  });

  auto* power = app.add_subcommand("power", "Hadamard power f^[p] for rational p > 0");
  power->add_option("f", f_arg)->required();
  power->add_option("p", p_arg)->required();
  power->add_option("--bits", power_bits, "Precision for non-integer exponents")->check(CLI::Range(32L, 1L << 16));
  power->callback([&] {
    action = [&] {
      const auto h = hadamard_power(polynomial_argument(f_arg), parse_rational(p_arg), power_bits);
      return emit(g, to_json(h), [&](std::ostream& os) { os << to_string(h) << '\n'; });
    };
  });

  auto* extend = app.add_subcommand("extend", "Stable extension of f to degree N with new coefficients in (0, eps)");
  extend->add_option("f", f_arg)->required();
  extend->add_option("N", n_arg)->required();
  extend->add_option("eps", eps_arg)->required();
  extend->callback([&] {
    action = [&] {
      const auto cert = extend_stable(polynomial_argument(f_arg), std::stoul(n_arg), parse_rational(eps_arg));
      emit(g, to_json(cert), [&](std::ostream& os) {
        os << "result    " << to_string(cert.result) << '\n';
        os << "appended ";
        for (const auto& a : cert.appended) os << ' ' << to_string(a);
        os << "\nverified  " << yes_no(verify(cert)) << '\n';
      });
      return kOk;
    };
  });

  auto* stab = app.add_subcommand("stabilize", "Stable g of degree m with every element of f . g stable");
  stab->add_option("f", f_arg)->required();
  stab->add_option("m", m_arg)->required();
  stab->add_flag("--factorized", factorized, "Use g = product of Hadamard powers of the windows (f in W only)");
  stab->callback([&] {
    action = [&] {
      const auto f = polynomial_argument(f_arg);
      const auto r = factorized ? stabilize_factorized(f, m_arg, g.options()) : stabilize(f, m_arg, g.options());
      return emit(g, to_json(r), [&](std::ostream& os) {
        os << "method     " << to_string(r.method) << '\n';
        os << "parameter  " << to_string(r.parameter) << '\n';
        os << "g          " << to_string(r.g) << '\n';
        for (std::size_t k = 0; k < r.product.elements.size(); ++k) {
          os << "F_" << k << std::setw(static_cast<int>(9 - std::to_string(k).size())) << ' '
             << to_string(r.product.elements[k]) << "  " << to_string(r.verification[k].verdict) << '\n';
        }
      });
    };
  });

  bool refined = false;
  auto* constants = app.add_subcommand("constants", "Certified enclosures of alpha*, beta*, gamma*");
  constants->add_flag("--refined", refined, "Width 1e-30 instead of 1e-12");
  constants->callback([&] {
    action = [&] {
      json j = json::array();
      std::vector<const CertifiedConstant*> cs;
      for (auto tag : {ConstantTag::AlphaStar, ConstantTag::BetaStar, ConstantTag::GammaStar}) {
        cs.push_back(refined ? &refined_constant(tag) : &certified_constant(tag));
        j.push_back(to_json(*cs.back()));
      }
      return emit(g, j, [&](std::ostream& os) {
        for (const auto* c : cs) {
          os << std::left << std::setw(11) << to_string(c->tag) << std::setprecision(std::numeric_limits<double>::max_digits10)
             << '[' << to_double(c->lo) << ", " << to_double(c->hi) << "]  width " << std::setprecision(3)
             << to_double(c->width()) << '\n';
        }
      });
    };
  });

  std::string fixture_dir = GHSTAB_FIXTURE_DIR;
  auto* fixtures = app.add_subcommand("fixtures", "Evaluate the worked-example fixture suite");
  fixtures->add_option("--dir", fixture_dir, "Fixture directory")->check(CLI::ExistingDirectory);
  fixtures->callback([&] {
    action = [&] {
      const auto r = run_fixtures(fixture_dir);
      emit(g, to_json(r), [&](std::ostream& os) {
        for (const auto& f : r.facts) {
          os << (f.passed ? "ok    " : "FAIL  ") << f.fixture << "  " << f.kind << ' ' << f.subject;
          if (!f.passed) os << "  expected " << f.expected << ", computed " << f.computed;
          os << '\n';
        }
        os << r.passed() << " passed, " << r.failed() << " failed\n";
      });
      return r.ok() ? kOk : kMismatch;
    };
  });

  CampaignConfig config;
  std::string degrees = "1..10";
  std::string report_path;
  auto* campaign = app.add_subcommand("campaign", "Randomized property campaign over every theorem");
  campaign->add_option("--seed", config.seed);
  campaign->add_option("--trials", config.trials);
  campaign->add_option("--degrees", degrees, "Degree range lo..hi");
  campaign->add_option("--jobs", config.jobs, "Worker threads (0 = all cores)");
  campaign->add_option("--report", report_path, "Also write the JSON report to this path");
  campaign->callback([&] {
    action = [&] {
      const auto sep = degrees.find("..");
      try {
        if (sep == std::string::npos) {
          config.min_degree = config.max_degree = std::stoul(degrees);
        } else {
          config.min_degree = std::stoul(degrees.substr(0, sep));
          config.max_degree = std::stoul(degrees.substr(sep + 2));
        }
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::BadConfig, "degree range must look like lo..hi");
      }
      config.quasi_tolerance = g.tol;
      config.root_precision = g.precision;
      const auto r = run_campaign(config);
      const json j = to_json(r);
      if (!report_path.empty()) std::ofstream(report_path) << j.dump(2) << '\n';
      emit(g, j, [&](std::ostream& os) {
        for (const auto& p : r.properties) {
          os << std::left << std::setw(26) << p.id;
          if (p.skipped) {
            os << "skipped\n";
            continue;
          }
          os << p.passed << '/' << p.trials << (p.failed ? "  FAIL" : "") << '\n';
          for (const auto& fl : p.failures) {
            os << "  trial " << fl.trial << ": " << fl.message << '\n';
            for (const auto& [name, text] : fl.polynomials) os << "    " << name << " = " << text << '\n';
          }
        }
        const auto& o = r.oracle;
        os << "oracle agreement: " << o.corpus - o.disagreements << '/' << o.corpus << " (" << o.contradictions
           << " contradictions, " << o.unresolved << " within tolerance of the axis)\n";
        for (const auto& [id, count] : o.origins) os << "  from " << id << ": " << count << '\n';
        for (const auto& fl : o.failures) os << "  " << fl.message << "\n    f = " << fl.polynomials.at("f") << '\n';
        os << "boundary sightings: " << r.boundary_sightings << '\n';
      });
      return r.all_passed() ? kOk : kMismatch;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "ghstab: " << e.what() << '\n';
    return e.code() == ErrorCode::VerificationFailed ? kMismatch : kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "ghstab: invalid argument: " << e.what() << '\n';
    return kUsage;
  }
}
