#include "ghstab/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ghstab/classify.hpp"
#include "ghstab/constants.hpp"
#include "ghstab/constructors.hpp"
#include "ghstab/error.hpp"
#include "ghstab/hurwitz.hpp"
#include "ghstab/polynomial.hpp"

namespace ghstab {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::FixtureParse, what); }

const json& field(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) parse_error(std::string("missing field '") + key + "' in " + node.dump());
  return node.at(key);
}

std::string text_field(const json& node, const char* key) {
  const json& v = field(node, key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  parse_error(std::string("field '") + key + "' must be a string");
}

std::size_t size_field(const json& node, const char* key) {
  const json& v = field(node, key);
  if (!v.is_number_unsigned()) parse_error(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

ConstantTag parse_constant(const std::string& name) {
  if (name == "alpha_star") return ConstantTag::AlphaStar;
  if (name == "beta_star") return ConstantTag::BetaStar;
  if (name == "gamma_star") return ConstantTag::GammaStar;
  parse_error("unknown constant '" + name + "'");
}

class Evaluator {
 public:
  Evaluator(std::string id, const json& definitions) : id_(std::move(id)) {
    if (!definitions.is_object()) parse_error("'polynomials' must be an object");
    for (auto it = definitions.begin(); it != definitions.end(); ++it) definitions_[it.key()] = it.value();
  }

  const Polynomial& get(const std::string& name) {
    if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    auto def = definitions_.find(name);
    if (def == definitions_.end()) parse_error("fixture " + id_ + " has no polynomial '" + name + "'");
    return cache_.emplace(name, build(def->second)).first->second;
  }

  FactResult evaluate(const json& fact) {
    FactResult r;
    r.fixture = id_;
    r.kind = text_field(fact, "kind");
    r.provenance = text_field(fact, "provenance");
    if (r.provenance != "PAPER" && r.provenance != "TRIVIAL" && r.provenance != "DERIVED") {
      parse_error("fact provenance must be PAPER, TRIVIAL or DERIVED, got '" + r.provenance + "'");
    }
    r.subject = fact.contains("poly") ? text_field(fact, "poly") : fact.value("constant", std::string());
    r.expected = fact.contains("expect") ? fact.at("expect").dump() : std::string();
    try {
      check(fact, r);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::FixtureParse) throw;
      r.computed = std::string("error: ") + e.what();
      r.passed = false;
    }
    return r;
  }

 private:
  Polynomial build(const json& def) {
    if (def.contains("coeffs")) return parse_polynomial(text_field(def, "coeffs"));
    const std::string op = text_field(def, "op");
    if (op == "window") return windows(get(text_field(def, "of")), size_field(def, "m")).at(size_field(def, "j"));
    if (op == "power") {
      const long bits = def.contains("bits") ? static_cast<long>(size_field(def, "bits")) : kDefaultPowerPrecision;
      return hadamard_power(get(text_field(def, "of")), parse_rational(text_field(def, "p")), bits);
    }
    if (op == "product") return hadamard_product(get(text_field(def, "f")), get(text_field(def, "g")));
    if (op == "gproduct") {
      return generalized_hadamard(get(text_field(def, "f")), get(text_field(def, "g"))).elements.at(size_field(def, "j"));
    }
    if (op == "reversal") return reversal(get(text_field(def, "of")));
    if (op == "lambda_uniform") return lambda_uniform(size_field(def, "m"), parse_rational(text_field(def, "eps")));
    if (op == "stabilize" || op == "stabilize_factorized") {
      const Polynomial& f = get(text_field(def, "f"));
      const std::size_t m = size_field(def, "m");
      StabilizationResult s = op == "stabilize" ? stabilize(f, m) : stabilize_factorized(f, m);
      const std::string part = text_field(def, "part");
      if (part == "g") return s.g;
      if (part == "element") return s.product.elements.at(size_field(def, "j"));
      if (part == "factor") return s.factors.at(size_field(def, "j"));
      parse_error("unknown stabilizer part '" + part + "'");
    }
    if (op == "prepend_stable") {
      PrependResult p = prepend_stable(get(text_field(def, "f")), size_field(def, "k"), parse_rational(text_field(def, "eps")));
      const std::string part = text_field(def, "part");
      if (part == "p") return p.p;
      if (part == "combined") return p.combined;
      parse_error("unknown prepend part '" + part + "'");
    }
    if (op == "extend_stable") {
      return extend_stable(get(text_field(def, "f")), size_field(def, "N"), parse_rational(text_field(def, "eps"))).result;
    }
    parse_error("unknown polynomial op '" + op + "'");
  }

  static void compare(FactResult& r, const std::string& computed, const std::string& expected) {
    r.computed = computed;
    r.passed = computed == expected;
  }

  static std::string rational_list(const json& expect) {
    if (!expect.is_array()) parse_error("expected an array of rationals");
    std::vector<Rational> values;
    for (const auto& v : expect) values.push_back(parse_rational(v.get<std::string>()));
    return join(values);
  }

  void check(const json& fact, FactResult& r) {
    const std::string& kind = r.kind;
    const json& expect = field(fact, "expect");
    if (kind == "constant") {
      const CertifiedConstant& c = certified_constant(parse_constant(text_field(fact, "constant")));
      const double reference = expect.get<double>();
      const double tolerance = field(fact, "tolerance").get<double>();
      const bool inside = c.lo >= Rational(reference - tolerance) && c.hi <= Rational(reference + tolerance);
      const bool narrow = c.width() <= make_rational(1, Integer("1000000000000"));
      const bool sign_change = sgn(constant_residual(c.tag, c.lo)) < 0 && sgn(constant_residual(c.tag, c.hi)) > 0;
      std::ostringstream out;
      out.precision(15);
      out << "[" << to_double(c.lo) << ", " << to_double(c.hi) << "] width " << to_double(c.width())
          << (sign_change ? " sign-change" : " NO-sign-change");
      r.computed = out.str();
      r.passed = inside && narrow && sign_change;
      return;
    }

    const Polynomial& f = get(text_field(fact, "poly"));
    if (kind == "coeffs") {
      compare(r, to_string(f), to_string(parse_polynomial(expect.get<std::string>())));
    } else if (kind == "degree") {
      compare(r, std::to_string(f.degree()), std::to_string(expect.get<std::size_t>()));
    } else if (kind == "positive") {
      compare(r, f.is_positive() ? "true" : "false", expect.get<bool>() ? "true" : "false");
    } else if (kind == "lambdas") {
      const auto l = lambdas(f);
      compare(r, join(std::vector<Rational>(l.values().begin(), l.values().end())), rational_list(expect));
    } else if (kind == "minors") {
      compare(r, join(leading_principal_minors(f)), rational_list(expect));
    } else if (kind == "minor") {
      const std::size_t index = size_field(fact, "index");
      const auto minors = leading_principal_minors(f);
      if (index < 1 || index > minors.size()) parse_error("minor index out of range");
      compare(r, to_string(minors[index - 1]), to_string(parse_rational(expect.get<std::string>())));
    } else if (kind == "hurwitz_matrix") {
      const HurwitzMatrix h(f);
      std::vector<Rational> entries;
      for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = 0; j < h.size(); ++j) entries.push_back(h(i, j));
      }
      std::vector<Rational> wanted;
      for (const auto& row : expect) {
        for (const auto& v : row) wanted.push_back(parse_rational(v.get<std::string>()));
      }
      compare(r, join(entries), join(wanted));
    } else if (kind == "stable") {
      compare(r, is_hurwitz_stable(f) ? "true" : "false", expect.get<bool>() ? "true" : "false");
    } else if (kind == "verdict") {
      compare(r, std::string(to_string(is_quasi_stable(f).verdict)), expect.get<std::string>());
    } else if (kind == "verdict_in") {
      r.computed = std::string(to_string(is_quasi_stable(f).verdict));
      r.passed = std::any_of(expect.begin(), expect.end(), [&](const json& v) { return v.get<std::string>() == r.computed; });
    } else if (kind == "member") {
      const std::string cls = text_field(fact, "class");
      bool value = false;
      if (cls == "R_plus") value = f.is_positive();
      else if (cls == "W") value = in_w(f);
      else if (cls == "V") value = in_v(f);
      else if (cls == "W_alpha_star") value = in_w_constant(f, ConstantTag::AlphaStar);
      else if (cls == "W_beta_star") value = in_w_constant(f, ConstantTag::BetaStar);
      else if (cls == "W_alpha") value = in_w_alpha(f, parse_rational(text_field(fact, "alpha")));
      else parse_error("unknown class '" + cls + "'");
      r.subject += " in " + cls + (cls == "W_alpha" ? "(" + text_field(fact, "alpha") + ")" : "");
      compare(r, value ? "true" : "false", expect.get<bool>() ? "true" : "false");
    } else if (kind == "p_star") {
      const Enclosure e = p_star(f);
      const double reference = expect.get<double>();
      const double tolerance = field(fact, "tolerance").get<double>();
      std::ostringstream out;
      out.precision(10);
      out << "[" << e.lo << ", " << e.hi << "]";
      r.computed = out.str();
      r.passed = e.lo >= reference - tolerance && e.hi <= reference + tolerance;
    } else if (kind == "stabilizer_exponent") {
      const StabilizationResult s = stabilize_factorized(f, size_field(fact, "m"));
      compare(r, to_string(s.parameter), text_field(fact, "expect"));
    } else if (kind == "factorization_sufficient") {
      compare(r, factorization_sufficient(f).sufficient ? "true" : "false", expect.get<bool>() ? "true" : "false");
    } else {
      parse_error("unknown fact kind '" + kind + "'");
    }
  }

  std::string id_;
  std::map<std::string, json> definitions_;
  std::map<std::string, Polynomial> cache_;
};

}  // namespace

std::size_t FixtureReport::passed() const {
  return static_cast<std::size_t>(std::count_if(facts.begin(), facts.end(), [](const FactResult& f) { return f.passed; }));
}

std::size_t FixtureReport::failed() const { return facts.size() - passed(); }

FixtureReport evaluate_fixture(const json& fixture) {
  const std::string id = text_field(fixture, "id");
  Evaluator evaluator(id, fixture.contains("polynomials") ? fixture.at("polynomials") : json::object());
  const json& facts = field(fixture, "facts");
  if (!facts.is_array()) parse_error("'facts' must be an array");
  FixtureReport report;
  try {
    for (const auto& fact : facts) report.facts.push_back(evaluator.evaluate(fact));
  } catch (const nlohmann::json::exception& e) {
    parse_error("fixture " + id + ": " + e.what());
  }
  return report;
}

FixtureReport run_fixtures(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory)) parse_error("fixture directory " + directory.string() + " not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  FixtureReport report;
  for (const auto& file : files) {
    std::ifstream in(file);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      parse_error(file.string() + ": " + e.what());
    }
    FixtureReport part = evaluate_fixture(doc);
    report.facts.insert(report.facts.end(), part.facts.begin(), part.facts.end());
  }
  return report;
}

json to_json(const FixtureReport& report) {
  json facts = json::array();
  for (const auto& f : report.facts) {
    facts.push_back({{"fixture", f.fixture},
                     {"kind", f.kind},
                     {"subject", f.subject},
                     {"provenance", f.provenance},
                     {"expected", f.expected},
                     {"computed", f.computed},
                     {"passed", f.passed}});
  }
  return {{"passed", report.passed()}, {"failed", report.failed()}, {"facts", facts}};
}

}  // namespace ghstab
