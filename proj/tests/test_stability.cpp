#include <doctest.h>

#include <set>

#include "ghstab/classify.hpp"
#include "ghstab/constants.hpp"
#include "ghstab/hurwitz.hpp"
#include "ghstab/roots.hpp"
#include "ghstab/sampling.hpp"
#include "helpers.hpp"

using namespace ghstab;
using testing::P;
using testing::Q;

namespace {

// Cofactor expansion along the first row; exponential, only for small n.
Rational laplace(const std::vector<Rational>& a, std::size_t n) {
  if (n == 1) return a[0];
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (sgn(a[col]) == 0) continue;
    std::vector<Rational> minor;
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) minor.push_back(a[r * n + c]);
      }
    }
    const Rational term = a[col] * laplace(minor, n - 1);
    det += col % 2 ? -term : term;
  }
  return det;
}

std::vector<Rational> laplace_minors(const Polynomial& f) {
  const HurwitzMatrix h(f);
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= h.size(); ++k) {
    std::vector<Rational> lead;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) lead.push_back(h(r, c));
    }
    out.push_back(laplace(lead, k));
  }
  return out;
}

std::vector<Rational> R(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("Hurwitz matrix layout") {
  const auto h = hurwitz_matrix(P("10 7 3 1"));
  REQUIRE(h.size() == 3);
  const long expect[3][3] = {{3, 1, 0}, {10, 7, 3}, {0, 0, 10}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(h(r, c) == expect[r][c]);
  }
  CHECK(hurwitz_matrix(P("5 2")).size() == 1);
  CHECK(hurwitz_matrix(P("5 2"))(0, 0) == 5);
  CHECK_ERROR(hurwitz_matrix(P("4")), DegreeZero);
}

TEST_CASE("leading principal minors") {
  CHECK(leading_principal_minors(P("3 2 4 2 2")) == R({2, 4, -4, -12}));
  CHECK(leading_principal_minors(P("10 7 3 1")) == R({3, 11, 110}));
  CHECK(leading_principal_minors(P("1 2 4 4 4 2")) == R({4, 8, 8, -4, -4}));
  CHECK(leading_principal_minors(P("1 10 12 16 12 6")) == R({12, 120, 72, -516, -516}));
  CHECK(leading_principal_minors(P("1 1 1 1")) == R({1, 0, 0}));
  CHECK_ERROR(leading_principal_minors(P("7")), DegreeZero);
}

TEST_CASE("minors agree with an independent cofactor expansion") {
  Rng rng({11, 1});
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= n; ++i) {
      // Zeros and sign changes exercise the pivoting path.
      c.push_back(rng.coin() ? Rational(0) : rng.ratio(-20, 20, rng.uniform(1, 6)));
    }
    if (sgn(c.back()) == 0) c.back() = 1;
    const Polynomial f(c);
    CAPTURE(to_string(f));
    CHECK(leading_principal_minors(f) == laplace_minors(f));
  }
  for (const char* text : {"1 1 1 1", "1 0 1 0 1", "0 0 1 1", "1 1 1 1 1 1", "2 1 2 1 2 1 2"}) {
    CAPTURE(text);
    CHECK(leading_principal_minors(P(text)) == laplace_minors(P(text)));
  }
}

TEST_CASE("Bareiss determinant with pivoting") {
  CHECK(bareiss_determinant({0, 1, 1, 0}, 2) == -1);
  CHECK(bareiss_determinant({0, 0, 0, 0}, 2) == 0);
  CHECK(bareiss_determinant({2, 0, 0, 0, 0, 3, 0, 5, 0}, 3) == -30);
  Rng rng({11, 2});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    std::vector<Integer> a;
    std::vector<Rational> q;
    for (std::size_t i = 0; i < n * n; ++i) {
      const long v = rng.coin() ? 0 : rng.uniform(-9, 9);
      a.emplace_back(v);
      q.emplace_back(v);
    }
    CHECK(Rational(bareiss_determinant(a, n)) == laplace(q, n));
  }
}

TEST_CASE("Routh-Hurwitz decision") {
  CHECK(is_hurwitz_stable(P("1 1")));
  CHECK(is_hurwitz_stable(P("-1 -1")));
  CHECK(is_hurwitz_stable(P("-10 -7 -3 -1")));
  CHECK_FALSE(is_hurwitz_stable(P("1 -1")));
  CHECK_FALSE(is_hurwitz_stable(P("1 0 1")));
  CHECK(is_hurwitz_stable(P("10 7 3 1")));
  CHECK(is_hurwitz_stable(P("1 3 7 10")));
  CHECK_FALSE(is_hurwitz_stable(P("3 2 4 2 2")));
  CHECK_FALSE(is_hurwitz_stable(P("1 1 1 1")));
  CHECK_FALSE(is_hurwitz_stable(P("0 1 1")));
  CHECK(is_hurwitz_stable(P("17160 1509.375 6026 395.75 791 34.5 46 1 1")));
  CHECK_ERROR(is_hurwitz_stable(P("3")), DegreeZero);
  CHECK(sign_normalized(P("-1 -2")) == P("1 2"));
  CHECK(sign_normalized(P("-1 2")) == P("-1 2"));
}

TEST_CASE("Delta_n = a_0 Delta_{n-1} and reversal invariance") {
  Rng rng({11, 3});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 10));
    const auto f = trial % 2 ? random_stable(n, rng) : random_positive(n, rng);
    const auto m = leading_principal_minors(f);
    CHECK(m[n - 1] == f[0] * m[n - 2]);
    CHECK(is_hurwitz_stable(f) == is_hurwitz_stable(reversal(f)));
  }
}

TEST_CASE("root oracle") {
  const auto roots = to_complex_double(roots_oracle(P("2 3 1")));
  REQUIRE(roots.size() == 2);
  double lo = std::min(roots[0].real(), roots[1].real());
  double hi = std::max(roots[0].real(), roots[1].real());
  CHECK(lo == doctest::Approx(-2).epsilon(1e-15));
  CHECK(hi == doctest::Approx(-1).epsilon(1e-15));

  const auto zeros = to_complex_double(roots_oracle(P("0 0 1 1")));
  REQUIRE(zeros.size() == 3);
  std::size_t at_origin = 0;
  for (const auto& z : zeros) at_origin += std::abs(z) == 0.0;
  CHECK(at_origin == 2);
  CHECK(max_real_part(roots_oracle(P("5 2"))) == doctest::Approx(-2.5));
  CHECK(max_real_part(roots_oracle(P("1 0 1"))) == doctest::Approx(0).epsilon(1e-30));

  SUBCASE("every root passes the backward-error test") {
    Rng rng({11, 4});
    for (long prec : {64L, 128L, 256L}) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 12));
        const auto f = trial % 2 ? random_stable(n, rng) : random_positive(n, rng);
        CAPTURE(to_string(f));
        for (const auto& z : roots_oracle(f, prec)) {
          // Horner for p(z) and for sum |a_i| |z|^i.
          BigComplex value{BigFloat(0.0, prec), BigFloat(0.0, prec)};
          BigFloat magnitude(0.0, prec);
          const BigFloat r = abs(z);
          for (std::size_t i = n + 1; i-- > 0;) {
            value = value * z + BigComplex{BigFloat(f[i], prec, MPFR_RNDN), BigFloat(0.0, prec)};
            magnitude = magnitude * r + abs(BigFloat(f[i], prec, MPFR_RNDN));
          }
          const double bound = 8.0 * static_cast<double>(n) * std::ldexp(1.0, static_cast<int>(-prec)) * 4;
          CHECK((abs(value) / magnitude).to_double() <= bound);
        }
      }
    }
  }

  SUBCASE("re-expanded simple roots reproduce the coefficients to 2^(-prec/2)") {
    Rng rng({11, 5});
    for (long prec : {64L, 128L, 256L}) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 12));
        Polynomial f = random_positive(n, rng);
        if (trial % 2) {
          // Separated integer roots; closely spaced ones (Wilkinson) are too ill-conditioned.
          std::set<long> picks;
          while (picks.size() < std::min<std::size_t>(n, 6)) picks.insert(rng.uniform(1, 30));
          f = P("1");
          for (long k : picks) {
            std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
            c.push_back(0);
            for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] + c[i] * k;
            c[0] *= k;
            f = Polynomial(c);
          }
        }
        CAPTURE(to_string(f));
        const auto roots = roots_oracle(f, prec);
        const auto expanded = expand_roots(roots, f.leading());
        REQUIRE(expanded.size() == f.degree() + 1);
        // Coefficients of |a_n| prod (s + |z_i|) bound the propagated root error.
        std::vector<double> m{std::abs(to_double(f.leading()))};
        for (const auto& z : roots) {
          const double r = abs(z).to_double();
          m.insert(m.begin(), 0.0);
          for (std::size_t i = 0; i + 1 < m.size(); ++i) m[i] += r * m[i + 1];
        }
        const double bound = std::ldexp(1.0, static_cast<int>(-prec / 2));
        for (std::size_t i = 0; i <= f.degree(); ++i) {
          const BigComplex diff = expanded[i] - BigComplex{BigFloat(f[i], prec, MPFR_RNDN), BigFloat(0.0, prec)};
          CHECK(abs(diff).to_double() <= bound * m[i]);
        }
      }
    }
  }
}

TEST_CASE("quasi-stability") {
  CHECK(is_quasi_stable(P("10 7 3 1")).verdict == Verdict::Stable);
  CHECK_FALSE(is_quasi_stable(P("10 7 3 1")).oracle_ran);
  const auto q = is_quasi_stable(P("1 1 1 1"));
  CHECK(q.verdict == Verdict::QuasiStable);
  CHECK(q.oracle_ran);
  CHECK(q.boundary_roots.size() == 2);
  CHECK(is_quasi_stable(P("1 0 1")).verdict == Verdict::QuasiStable);
  CHECK(is_quasi_stable(P("2 1 2 1")).verdict == Verdict::QuasiStable);
  CHECK(is_quasi_stable(P("0 1 1")).verdict == Verdict::QuasiStable);
  CHECK(is_quasi_stable(P("1 -1 1")).verdict == Verdict::Unstable);
  CHECK(is_quasi_stable(P("3 2 4 2 2")).verdict == Verdict::Unstable);
  CHECK(is_quasi_stable(P("1 10 12 16 12 6")).verdict == Verdict::Unstable);
  // s^2 + 1e-12 s + 1 is stable; a wide enough band leaves it stable as well.
  CHECK(is_quasi_stable(P("1 1e-12 1"), {1e-6, 128}).verdict == Verdict::Stable);
  CHECK(parse_verdict("QuasiStable") == Verdict::QuasiStable);
  CHECK(to_string(Verdict::Unstable) == "Unstable");
  CHECK_ERROR(parse_verdict("Maybe"), ParseError);
}

TEST_CASE("certified constants") {
  const struct { ConstantTag tag; double published; } table[] = {
      {ConstantTag::AlphaStar, 0.46557}, {ConstantTag::BetaStar, 0.68233}, {ConstantTag::GammaStar, 0.21676}};
  for (const auto& [tag, published] : table) {
    CAPTURE(to_string(tag));
    const auto& c = certified_constant(tag);
    CHECK(c.width() > 0);
    CHECK(c.width() <= Rational(1, 1000000000000L));
    CHECK(constant_residual(tag, c.lo) < 0);
    CHECK(constant_residual(tag, c.hi) > 0);
    CHECK(std::abs(to_double(c.lo) - published) < 5e-6);
    const auto& r = refined_constant(tag);
    CHECK(r.width() <= Rational(1, Integer("1000000000000000000000000000000")));
    CHECK(r.lo >= c.lo);
    CHECK(r.hi <= c.hi);
  }
  const auto& a = certified_constant(ConstantTag::AlphaStar);
  const auto& b = certified_constant(ConstantTag::BetaStar);
  CHECK(b.lo * b.lo <= a.hi);
  CHECK(b.hi * b.hi >= a.lo);
  CHECK(to_double(a.lo) == doctest::Approx(0.4655712319).epsilon(1e-9));
  CHECK(to_double(b.lo) == doctest::Approx(0.6823278038).epsilon(1e-9));
  CHECK(to_double(certified_constant(ConstantTag::GammaStar).lo) == doctest::Approx(0.2167565720).epsilon(1e-9));

  CHECK(less_than_constant(Q("0.4655"), ConstantTag::AlphaStar));
  CHECK_FALSE(less_than_constant(Q("0.4656"), ConstantTag::AlphaStar));
  // Inside the coarse enclosure, resolved by the refined one.
  const Rational inside = a.lo + a.width() / 1000;
  CHECK(less_than_constant(inside, ConstantTag::AlphaStar) == (inside < refined_constant(ConstantTag::AlphaStar).lo));
  const auto& ra = refined_constant(ConstantTag::AlphaStar);
  CHECK_ERROR(less_than_constant((ra.lo + ra.hi) / 2, ConstantTag::AlphaStar), EnclosureTooWide);
  CHECK(compute_constant(ConstantTag::GammaStar, Q("1/1000")).width() <= Q("1/1000"));
}

TEST_CASE("class memberships") {
  const auto ex1 = P("3 2 4 2 2");
  CHECK(in_w(ex1));
  CHECK_FALSE(in_v(ex1));
  CHECK_FALSE(in_w_constant(ex1, ConstantTag::AlphaStar));

  const auto ex2 = P("10 7 3 1");
  CHECK_FALSE(in_w_alpha(ex2, Q("10/21")));
  CHECK(in_w_alpha(ex2, Q("10/21") + Q("1/1000000")));
  CHECK_FALSE(in_w_alpha(ex2, Q("10/21") - Q("1/1000000")));
  CHECK_FALSE(in_w_constant(ex2, ConstantTag::AlphaStar));
  CHECK(in_w_constant(ex2, ConstantTag::BetaStar));
  CHECK(in_v(ex2));

  const auto ex5 = P("1 2 4 4 4 2");
  CHECK(in_w(ex5));
  CHECK_FALSE(in_v(ex5));
  CHECK_FALSE(is_hurwitz_stable(ex5));

  // Degrees 1 and 2: every class coincides with stability.
  CHECK(in_w(P("1 2 3")));
  CHECK(in_v(P("1 2")));
  CHECK(in_w_constant(P("1 2 3"), ConstantTag::AlphaStar));
  CHECK_ERROR(in_w(P("1 -1 1")), NotPositive);
  CHECK_ERROR(in_v(P("2")), DegreeZero);

  SUBCASE("inclusions on random members") {
    Rng rng({11, 5});
    const auto& alpha = certified_constant(ConstantTag::AlphaStar);
    for (int trial = 0; trial < 100; ++trial) {
      const auto n = static_cast<std::size_t>(rng.uniform(3, 10));
      CHECK(in_w(random_stable(n, rng)));
      const auto w = random_w_member(n, alpha.lo, rng);
      CHECK(in_w_constant(w, ConstantTag::AlphaStar));
      CHECK(is_hurwitz_stable(w));
      const auto v = random_v_member(n, rng);
      CHECK(in_v(v));
      CHECK(is_hurwitz_stable(v));
      if (n >= 5) CHECK(in_w(v));
    }
  }
}

TEST_CASE("reports") {
  const auto r = analyze(P("3 2 4 2 2"));
  CHECK(r.verdict == Verdict::Unstable);
  CHECK(r.minors == R({2, 4, -4, -12}));
  REQUIRE(r.lambdas);
  CHECK(r.lambdas->at(2) == Q("3/4"));
  CHECK(r.memberships.r_plus);
  CHECK(r.memberships.w);
  CHECK_FALSE(r.memberships.v);

  const auto neg = analyze(P("-3 -2 -4 -2 -2"));
  CHECK(neg.verdict == Verdict::Unstable);
  CHECK(neg.polynomial == P("-3 -2 -4 -2 -2"));
  CHECK(neg.memberships.r_plus);
  CHECK(neg.memberships.w);
  CHECK(neg.minors == analyze(P("3 2 4 2 2")).minors);

  const auto mixed = analyze(P("1 -1 1"));
  CHECK(mixed.verdict == Verdict::Unstable);
  CHECK_FALSE(mixed.memberships.r_plus);
  CHECK_FALSE(mixed.lambdas);

  CHECK(classify(P("10 7 3 1")).verdict == Verdict::Stable);
  CHECK_ERROR(classify(P("1 -1 1")), NotPositive);
  CHECK_ERROR(analyze(P("5")), DegreeZero);
}
