#pragma once

// Independent helpers for kernel checks: plain Gaussian elimination and
// raw spanning sets built without the model's greedy basis.

#include "eqloc/localization.hpp"

#include <vector>

namespace oracle {

using namespace eqloc;

inline std::size_t rank_of(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Every (monomial) * (generator product) of degree d, no reduction.
inline std::vector<RestrictedClass> raw_span(const HamiltonianSpace& s, int d) {
  std::vector<RestrictedClass> prods = {s.unit()};
  std::vector<std::pair<RestrictedClass, std::size_t>> frontier = {{s.unit(), 0}};
  while (!frontier.empty()) {
    std::vector<std::pair<RestrictedClass, std::size_t>> next;
    for (const auto& [c, start] : frontier)
      for (std::size_t g = start; g < s.generators().size(); ++g) {
        const auto& gen = s.generators()[g];
        if (gen.degree == 0 || c.degree() + gen.degree > d) continue;
        prods.push_back(c * gen.value);
        next.emplace_back(prods.back(), g);
      }
    frontier = std::move(next);
  }
  std::vector<RestrictedClass> out;
  for (const auto& p : prods) {
    int rest = d - p.degree();
    if (rest < 0 || rest % 2) continue;
    for (const auto& e : monomials_of_degree(s.nvars(), rest / 2)) out.push_back(p.times(Polynomial::monomial(e), rest));
  }
  return out;
}

/// Flattened coordinates of the restrictions to the chosen components.
inline std::vector<Rational> restricted_coordinates(const RestrictedClass& c, const std::vector<bool>& keep) {
  std::vector<Rational> out;
  for (std::size_t f = 0; f < c.size(); ++f) {
    if (!keep[f]) continue;
    const auto& part = c.at(f);
    for (std::size_t b = 0; b < part.algebra()->dim(); ++b) {
      int rest = c.degree() - part.algebra()->degree(b);
      if (rest < 0 || rest % 2) continue;
      for (const auto& e : monomials_of_degree(part.nvars(), rest / 2))
        out.push_back(part.coefficient(b).coefficient(e));
    }
  }
  return out;
}

inline std::size_t slice_dim(const HamiltonianSpace& s, int d) {
  std::vector<std::vector<Rational>> m;
  std::vector<bool> all(s.components().size(), true);
  for (const auto& c : raw_span(s, d)) m.push_back(restricted_coordinates(c, all));
  return rank_of(m);
}

/// Rank of eta -> (restrictions to F with side * <mu(F), xi> > 0).
inline std::size_t restriction_rank(const HamiltonianSpace& s, const std::vector<long>& xi, int side, int d) {
  std::vector<bool> keep;
  for (const auto& c : s.components()) {
    Rational v = 0;
    for (std::size_t i = 0; i < xi.size(); ++i) v += c.moment[i] * xi[i];
    keep.push_back(sgn(v) == side);
  }
  std::vector<std::vector<Rational>> m;
  for (const auto& c : raw_span(s, d)) m.push_back(restricted_coordinates(c, keep));
  return rank_of(m);
}

/// Rank of eta -> (kappa_S(eta * zeta))_zeta over all raw test classes of
/// degree <= dim_M - 2, read coefficientwise on monomials up to degree 4.
inline std::size_t kappa_S_rank(const HamiltonianSpace& s, const std::vector<long>& xi, int d) {
  std::vector<RestrictedClass> tests;
  for (int t = 0; t <= s.dim_m() - 2; t += 2)
    for (auto& c : raw_span(s, t)) tests.push_back(c);
  std::vector<Exponents> monos;
  for (int k = 0; k <= (d + s.dim_m()) / 2; ++k)
    for (auto& e : monomials_of_degree(s.nvars(), k)) monos.push_back(e);
  std::vector<std::vector<Rational>> m;
  for (const auto& eta : raw_span(s, d)) {
    std::vector<Rational> row;
    for (const auto& z : tests) {
      auto p = kappa_S_integral(s, eta * z, CircleDirection(xi)).value;
      for (const auto& e : monos) row.push_back(p.coefficient(e));
    }
    m.push_back(row);
  }
  return rank_of(m);
}

inline std::size_t kappa_T_rank(const HamiltonianSpace& s, const Frame& f, int d) {
  int comp = s.dim_m() - 2 * static_cast<int>(s.nvars()) - d;
  if (comp < 0) return 0;
  auto tests = raw_span(s, comp);
  std::vector<std::vector<Rational>> m;
  for (const auto& eta : raw_span(s, d)) {
    std::vector<Rational> row;
    for (const auto& z : tests) row.push_back(kappa_T_integral(s, eta * z, f));
    m.push_back(row);
  }
  return rank_of(m);
}

}  // namespace oracle
