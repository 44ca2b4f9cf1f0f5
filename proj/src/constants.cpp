#include "ghstab/constants.hpp"

#include <array>

#include "ghstab/error.hpp"

namespace ghstab {

namespace {

struct Bracket {
  Rational lo;
  Rational hi;
};

template <typename Residual>
Bracket bisect_root(Residual residual, Rational lo, Rational hi, const Rational& width) {
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    const int s = sgn(residual(mid));
    if (s < 0) {
      lo = std::move(mid);
    } else if (s > 0) {
      hi = std::move(mid);
    } else {
      return {mid, mid};
    }
  }
  return {lo, hi};
}

Rational power_from_exponent(int exponent10) {
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(exponent10));
  return Rational(Integer(1), ten);
}

}  // namespace

std::string_view to_string(ConstantTag tag) noexcept {
  switch (tag) {
    case ConstantTag::AlphaStar: return "alpha_star";
    case ConstantTag::BetaStar: return "beta_star";
    case ConstantTag::GammaStar: return "gamma_star";
  }
  return "unknown";
}

Rational constant_residual(ConstantTag tag, const Rational& x) {
  switch (tag) {
    case ConstantTag::AlphaStar: {
      const Rational t = 1 + x;
      return x * t * t - 1;
    }
    case ConstantTag::BetaStar: {
      const Rational sq = x * x;
      const Rational t = 1 + sq;
      return sq * t * t - 1;
    }
    case ConstantTag::GammaStar: {
      const Rational t = x - 1;
      return x * t * t - (1 - 4 * x);
    }
  }
  return 0;
}

CertifiedConstant compute_constant(ConstantTag tag, const Rational& width) {
  Bracket bracket;
  if (tag == ConstantTag::BetaStar) {
    // √ of a tighter α* enclosure, rounded outward.
    const CertifiedConstant alpha = compute_constant(ConstantTag::AlphaStar, width / 2);
    const Bracket lower = bisect_root([&](const Rational& b) { return Rational(b * b - alpha.lo); }, 0, 1, width / 8);
    const Bracket upper = bisect_root([&](const Rational& b) { return Rational(b * b - alpha.hi); }, 0, 1, width / 8);
    bracket = {lower.lo, upper.hi};
  } else {
    bracket = bisect_root([tag](const Rational& x) { return constant_residual(tag, x); }, 0, 1, width);
  }
  Rational r_lo = abs(constant_residual(tag, bracket.lo));
  Rational r_hi = abs(constant_residual(tag, bracket.hi));
  return {tag, bracket.lo, bracket.hi, r_lo > r_hi ? r_lo : r_hi};
}

const CertifiedConstant& certified_constant(ConstantTag tag) {
  static const std::array<CertifiedConstant, 3> table = {
      compute_constant(ConstantTag::AlphaStar, power_from_exponent(12)),
      compute_constant(ConstantTag::BetaStar, power_from_exponent(12)),
      compute_constant(ConstantTag::GammaStar, power_from_exponent(12)),
  };
  return table[static_cast<std::size_t>(tag)];
}

const CertifiedConstant& refined_constant(ConstantTag tag) {
  static const std::array<CertifiedConstant, 3> table = {
      compute_constant(ConstantTag::AlphaStar, power_from_exponent(30)),
      compute_constant(ConstantTag::BetaStar, power_from_exponent(30)),
      compute_constant(ConstantTag::GammaStar, power_from_exponent(30)),
  };
  return table[static_cast<std::size_t>(tag)];
}

bool less_than_constant(const Rational& x, ConstantTag tag) {
  for (const CertifiedConstant* c : {&certified_constant(tag), &refined_constant(tag)}) {
    if (x < c->lo) return true;
    if (x > c->hi) return false;
  }
  throw Error(ErrorCode::EnclosureTooWide,
              to_string(x) + " is not separated from " + std::string(to_string(tag)) + " at width 1e-30");
}

}  // namespace ghstab
