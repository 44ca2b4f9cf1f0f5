#include "ghstab/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "ghstab/error.hpp"

namespace ghstab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void fail(std::string_view text) {
  throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) fail(original);
    exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) fail(original);
  if (!int_part.empty() && !all_digits(int_part)) fail(original);
  if (!frac_part.empty() && !all_digits(frac_part)) fail(original);

  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer numerator(digits.empty() ? "0" : digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(numerator, ten_power) : Rational(numerator * ten_power);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  if (text.empty()) fail(original);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '+' || num_digits.front() == '-')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) fail(original);
    Integer d(std::string(den), 10);
    if (d == 0) fail(original);
    Integer n(std::string(num_digits), 10);
    if (num.front() == '-') n = -n;
    Rational value(n, d);
    value.canonicalize();
    return value;
  }
  return parse_decimal(text, original);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

}  // namespace ghstab
