#pragma once

#include <doctest.h>

#include "ghstab/error.hpp"
#include "ghstab/polynomial.hpp"

namespace testing {

inline ghstab::Polynomial P(std::string_view text) { return ghstab::parse_polynomial(text); }
inline ghstab::Rational Q(std::string_view text) { return ghstab::parse_rational(text); }

template <typename Fn>
ghstab::ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const ghstab::Error& e) {
    return e.code();
  }
  FAIL("expected a ghstab::Error");
  return ghstab::ErrorCode::ParseError;
}

}  // namespace testing

#define CHECK_ERROR(expr, code) CHECK(testing::error_of([&] { (void)(expr); }) == ghstab::ErrorCode::code)
