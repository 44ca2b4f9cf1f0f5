#include "ghstab/sampling.hpp"

namespace ghstab {

namespace {

std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Rational coefficient(Rng& rng) { return rng.ratio(1, 100, 10); }

}  // namespace

Rng::Rng(std::initializer_list<std::uint64_t> key) {
  std::vector<std::uint32_t> words;
  for (std::uint64_t k : key) {
    words.push_back(static_cast<std::uint32_t>(k));
    words.push_back(static_cast<std::uint32_t>(k >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Polynomial random_stable(std::size_t n, Rng& rng) {
  std::vector<Rational> c{rng.ratio(1, 50, 10)};
  std::size_t remaining = n;
  while (remaining > 0) {
    if (remaining >= 2 && rng.coin()) {
      const Rational omega = rng.ratio(2, 30, 10);
      const Rational zeta = rng.ratio(1, 20, 20);
      c = multiply(c, {omega * omega, 2 * zeta * omega, Rational(1)});
      remaining -= 2;
    } else {
      c = multiply(c, {rng.ratio(1, 100, 10), Rational(1)});
      remaining -= 1;
    }
  }
  return Polynomial(std::move(c));
}

Polynomial random_stable(std::size_t n, std::uint64_t seed) {
  Rng rng{seed};
  return random_stable(n, rng);
}

Polynomial random_positive(std::size_t n, Rng& rng) {
  std::vector<Rational> c(n + 1);
  for (auto& a : c) a = coefficient(rng);
  return Polynomial(std::move(c));
}

Polynomial from_lambdas(const Rational& a0, const Rational& a1, const Rational& a2, const std::vector<Rational>& lambdas) {
  std::vector<Rational> a{a0, a1, a2};
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const std::size_t i = k + 2;
    a.push_back(lambdas[k] * a[i] * a[i - 1] / a[i - 2]);
  }
  return Polynomial(std::move(a));
}

Polynomial random_w_member(std::size_t n, const Rational& bound, Rng& rng) {
  if (n < 3) return random_positive(n, rng);
  const Rational a0 = coefficient(rng);
  const Rational a1 = coefficient(rng);
  const Rational a2 = coefficient(rng);
  std::vector<Rational> l(n - 2);
  for (auto& v : l) v = bound * rng.ratio(5, 99, 100);
  return from_lambdas(a0, a1, a2, l);
}

Polynomial random_v_member(std::size_t n, Rng& rng) {
  if (n < 3) return random_positive(n, rng);
  const Rational a0 = coefficient(rng);
  const Rational a1 = coefficient(rng);
  const Rational a2 = coefficient(rng);
  std::vector<long> weights(n - 2);
  long total = 0;
  for (auto& w : weights) total += (w = rng.uniform(1, 100));
  const Rational shrink = rng.ratio(5, 99, 100);
  std::vector<Rational> l;
  for (long w : weights) l.push_back(make_rational(w, total) * shrink);
  return from_lambdas(a0, a1, a2, l);
}

}  // namespace ghstab
