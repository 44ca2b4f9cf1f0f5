#include <doctest.h>

#include "ghstab/sampling.hpp"
#include "helpers.hpp"

using namespace ghstab;
using testing::P;
using testing::Q;

TEST_CASE("rational parsing") {
  CHECK(Q("-12") == -12);
  CHECK(Q("34.5") == Rational(69, 2));
  CHECK(Q("1509.375") == Rational(12075, 8));
  CHECK(Q("1.5e-3") == Rational(3, 2000));
  CHECK(Q("2E2") == 200);
  CHECK(Q("-3/6") == Rational(-1, 2));
  CHECK(Q("0.1") == Rational(1, 10));
  CHECK(to_string(Q("6/3")) == "2");
  CHECK(to_string(Q("-4/6")) == "-2/3");
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "e5", "1e", "3/-4", "--1"}) {
    CAPTURE(bad);
    CHECK_ERROR(Q(bad), ParseError);
  }
}

TEST_CASE("polynomial construction and text form") {
  const auto f = P("10 7 3 1");
  CHECK(f.degree() == 3);
  CHECK(f[0] == 10);
  CHECK(f.leading() == 1);
  CHECK(f.coeff(-1) == 0);
  CHECK(f.coeff(4) == 0);
  CHECK(f.is_positive());
  CHECK_FALSE(P("1 0 1").is_positive());
  CHECK(to_string(P("  1\t1/2\n 0.25 ")) == "1 1/2 1/4");
  CHECK(f.negated() == P("-10 -7 -3 -1"));
  CHECK_ERROR(Polynomial(std::vector<Rational>{}), EmptyCoefficients);
  CHECK_ERROR(P(""), EmptyCoefficients);
  CHECK_ERROR(P("1 2 0"), ZeroLeadingCoefficient);
  CHECK_ERROR(P("1 x 2"), ParseError);
}

TEST_CASE("canonical text round-trips losslessly") {
  Rng rng({7, 1});
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 12));
    const auto f = t % 2 ? random_stable(n, rng) : random_positive(n, rng);
    CHECK(parse_polynomial(to_string(f)) == f);
  }
}

TEST_CASE("reversal") {
  CHECK(reversal(P("10 7 3 1")) == P("1 3 7 10"));
  CHECK(reversal(P("0 1 2")) == P("2 1"));
  CHECK(reversal(P("0 0 5")) == P("5"));
  const auto f = P("3 2 4 2 2");
  CHECK(reversal(reversal(f)) == f);
}

TEST_CASE("Hadamard product") {
  CHECK(hadamard_product(P("1 2 3"), P("4 5")) == P("4 10"));
  CHECK(hadamard_product(P("1 2 3"), P("4 5 6")) == P("4 10 18"));
  CHECK(hadamard_product(P("1 2 3"), P("1 1 1")) == P("1 2 3"));
  CHECK_ERROR(hadamard_product(P("1 2"), P("1 2 3")), DegreeOrder);
}

TEST_CASE("windows") {
  const auto f = P("1 10 12 16 12 6 2");
  const auto w = windows(f, 5);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == P("1 10 12 16 12 6"));
  CHECK(w[1] == P("10 12 16 12 6 2"));
  CHECK(windows(f, 6) == std::vector<Polynomial>{f});
  CHECK(windows(f, 1).size() == 6);
  CHECK_ERROR(windows(f, 0), BadWindowDegree);
  CHECK_ERROR(windows(f, 7), BadWindowDegree);
  CHECK_ERROR(windows(P("1 -1 1"), 1), NotPositive);
}

TEST_CASE("generalized Hadamard product") {
  const auto f = P("1 2 4 4 4 2");
  const auto g = P("4 64 256 256 64");
  const auto p = generalized_hadamard(f, g);
  REQUIRE(p.elements.size() == 2);
  CHECK(p.elements[0] == P("4 128 1024 1024 256"));
  CHECK(p.elements[1] == P("8 256 1024 1024 128"));
  CHECK(p.windows == windows(f, 4));

  SUBCASE("end elements are f o g and (f* o g*)*") {
    const auto h = P("1 10 12 16 12 6 2");
    const auto k = P("10 7 3 1");
    const auto q = generalized_hadamard(h, k);
    CHECK(q.elements.size() == 4);
    CHECK(q.elements.front() == hadamard_product(h, k));
    CHECK(q.elements.back() == reversal(hadamard_product(reversal(h), reversal(k))));
    CHECK(q.elements[1] == P("100 84 48 12"));
  }
  SUBCASE("m = n gives the single element f o g") {
    CHECK(generalized_hadamard(f, f).elements == std::vector<Polynomial>{hadamard_product(f, f)});
  }
  CHECK_ERROR(generalized_hadamard(P("1 1"), P("1 1 1")), DegreeOrder);
  CHECK_ERROR(generalized_hadamard(f, P("1 -1 1")), NotPositive);
  CHECK_ERROR(generalized_hadamard(P("1 -1 1"), P("1 1")), NotPositive);
}

TEST_CASE("Hadamard powers") {
  CHECK(hadamard_power(P("1 2 3"), 2) == P("1 4 9"));
  CHECK(hadamard_power(P("1/2 3"), 3) == P("1/8 27"));
  CHECK(hadamard_power(P("4 9 16"), Q("1/2")) == P("2 3 4"));
  const auto r = hadamard_power(P("2 3"), Q("1/2"), 128);
  CHECK(std::abs(to_double(r[0]) - std::sqrt(2.0)) < 1e-15);
  CHECK(abs(r[0] * r[0] - 2) < Rational(1, Integer(1) << 120));
  CHECK_ERROR(hadamard_power(P("1 2"), 0), NonPositiveExponent);
  CHECK_ERROR(hadamard_power(P("1 2"), -1), NonPositiveExponent);
  CHECK_ERROR(hadamard_power(P("1 -2 1"), 2), NotPositive);
}

TEST_CASE("lambda values") {
  const auto l = lambdas(P("3 2 4 2 2"));
  REQUIRE(l.size() == 2);
  CHECK(l.at(2) == Rational(3, 4));
  CHECK(l.at(3) == Rational(1, 2));
  CHECK(l.max() == Rational(3, 4));
  CHECK(l.sum() == Rational(5, 4));
  CHECK(lambdas(P("10 7 3 1")).at(2) == Rational(10, 21));
  CHECK_ERROR(lambdas(P("1 2 3")), DegreeTooSmall);
  CHECK_ERROR(lambdas(P("1 2 -3 1")), NotPositive);

  SUBCASE("invariant under f -> c f(t s)") {
    Rng rng({7, 2});
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = random_positive(static_cast<std::size_t>(rng.uniform(3, 10)), rng);
      const Rational c = rng.ratio(1, 50, 7), t = rng.ratio(1, 50, 11);
      std::vector<Rational> scaled;
      Rational tk = 1;
      for (const auto& a : f.coeffs()) {
        scaled.push_back(c * a * tk);
        tk *= t;
      }
      const auto a = lambdas(f), b = lambdas(Polynomial(scaled));
      CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
    }
  }
}

TEST_CASE("lambda multiplicativity over the generalized product") {
  Rng rng({7, 3});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(3, 10));
    const auto m = static_cast<std::size_t>(rng.uniform(3, static_cast<long>(n)));
    const auto f = random_positive(n, rng), g = random_positive(m, rng);
    const auto lf = lambdas(f), lg = lambdas(g);
    const auto p = generalized_hadamard(f, g);
    for (std::size_t j = 0; j < p.elements.size(); ++j) {
      const auto le = lambdas(p.elements[j]);
      for (std::size_t i = 2; i < m; ++i) CHECK(le.at(i) == lf.at(i + j) * lg.at(i));
    }
  }
}

TEST_CASE("prepend and all-ones") {
  CHECK(prepend(P("1/4 1/8"), 2, P("10 7 3 1")) == P("1/4 1/8 10 7 3 1"));
  CHECK(prepend(P("1"), 3, P("2")) == P("1 0 0 2"));
  CHECK_ERROR(prepend(P("1 1"), 1, P("1 1")), DegreeOverlap);
  CHECK_ERROR(prepend(P("1"), 0, P("1 1")), DegreeOverlap);
  CHECK(all_ones(3) == P("1 1 1 1"));
  const auto f = P("3 2 4 2 2");
  CHECK(hadamard_product(f, all_ones(4)) == f);
}
