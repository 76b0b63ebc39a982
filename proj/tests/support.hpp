#pragma once

#include "eqloc/expression.hpp"
#include "eqloc/residue.hpp"

#include <random>

namespace testing_support {

using namespace eqloc;

inline Polynomial P(const std::string& text, const Variables& vars) { return parse_polynomial(text, vars); }

inline Fraction F(const std::string& num, const std::string& den, const Variables& vars) {
  Rational c;
  auto factors = parse_denominator(den, vars, c);
  return Fraction(parse_polynomial(num, vars) * Rational(1 / c), factors);
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline LinearForm random_form(Rng& rng, std::size_t n, bool needs_x) {
  while (true) {
    std::vector<long> c(n);
    for (auto& v : c) v = uniform(rng, -3, 3);
    if (needs_x && c[0] == 0) continue;
    if (std::any_of(c.begin(), c.end(), [](long v) { return v != 0; })) return LinearForm::from_ints(c);
  }
}

/// Random polynomial with `terms` terms; X-degree at most max_x, other
/// variables of total degree at most max_rest.
inline Polynomial random_polynomial(Rng& rng, std::size_t n, int max_x, int max_rest, int terms) {
  Polynomial p(n);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    e[0] = static_cast<int>(uniform(rng, 0, max_x));
    int budget = max_rest;
    for (std::size_t j = 1; j < n; ++j) {
      e[j] = static_cast<int>(uniform(rng, 0, budget));
      budget -= e[j];
    }
    long num = uniform(rng, -5, 5);
    p.add_term(e, rational(num, uniform(rng, 1, 3)));
  }
  return p;
}

/// Up to five linear factors with multiplicities up to three; the numerator
/// X-degree is bounded by the denominator X-degree plus x_slack.
inline Fraction random_fraction(Rng& rng, std::size_t n, int x_slack = 2) {
  std::vector<std::pair<LinearForm, int>> factors;
  int count = static_cast<int>(uniform(rng, 1, 5));
  int x_degree = 0;
  for (int i = 0; i < count; ++i) {
    LinearForm f = random_form(rng, n, uniform(rng, 0, 3) != 0);
    int k = static_cast<int>(uniform(rng, 1, 3));
    if (f[0] != 0) x_degree += k;
    factors.emplace_back(f, k);
  }
  int max_x = std::max(0, x_degree + x_slack);
  return Fraction(random_polynomial(rng, n, max_x, 2, static_cast<int>(uniform(rng, 1, 5))), factors);
}

}  // namespace testing_support
