#include "eqloc/residue.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace eqloc {

LinearForm pole_location(const LinearForm& form, std::size_t var) {
  const Rational& a = form[var];
  if (a == 0) throw std::invalid_argument("form does not involve the residue variable");
  std::vector<Rational> c(form.size());
  for (std::size_t j = 0; j < form.size(); ++j)
    if (j != var) c[j] = -form[j] / a;
  return LinearForm(std::move(c));
}

Fraction residue_at_pole(const Fraction& h, std::size_t var, const LinearForm& form) {
  int k = h.denominator().multiplicity(form);
  if (k == 0) throw std::invalid_argument("residue_at_pole: form is not a denominator factor");
  // (x - b)^k h = N / (a^k * remaining factors)
  Denominator rest = h.denominator();
  for (int i = 0; i < k; ++i) rest.remove_one(form);
  Rational scale = pow(Rational(1 / form[var]), static_cast<unsigned long>(k));
  Fraction g(h.numerator() * scale, std::move(rest));
  for (int i = 1; i < k; ++i) g = g.derivative(var);
  g = g * Rational(1 / factorial(k - 1));
  try {
    return g.substitute(var, pole_location(form, var));
  } catch (const std::domain_error& e) {
    throw NonGenericError(std::string("pole collision: ") + e.what());
  }
}

static Fraction res_partial_fractions(const Fraction& h, std::size_t var) {
  Fraction total(h.nvars());
  for (const auto& [form, k] : h.denominator().factors())
    if (form.involves(var)) total += residue_at_pole(h, var, form);
  return total;
}

static Fraction res_series_at_infinity(const Fraction& h, std::size_t var) {
  std::size_t n = h.nvars();
  struct Pole {
    Rational a;
    Polynomial c;
    int k;
  };
  std::vector<Pole> poles;
  Denominator constant_part(n);
  int big_k = 0;
  for (const auto& [form, k] : h.denominator().factors()) {
    if (!form.involves(var)) {
      constant_part.insert_normalized(form, k);
      continue;
    }
    std::vector<Rational> rest = form.coefficients();
    rest[var] = 0;
    poles.push_back({form[var], LinearForm(rest).to_polynomial(), k});
    big_k += k;
  }
  auto num = h.numerator().coefficients_in(var);
  Polynomial result(n);
  // Coefficient of x^-1: sum over q and r with sum(r) = q + 1 - K.
  std::vector<int> r(poles.size(), 0);
  for (std::size_t q = 0; q < num.size(); ++q) {
    if (num[q].is_zero()) continue;
    int s = static_cast<int>(q) + 1 - big_k;
    if (s < 0 || poles.empty()) continue;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i + 1 == poles.size()) {
        r[i] = left;
        Polynomial term = num[q];
        for (std::size_t j = 0; j < poles.size(); ++j) {
          const auto& p = poles[j];
          Rational coeff = negative_binomial(p.k, r[j]) /
                           pow(p.a, static_cast<unsigned long>(p.k + r[j]));
          term *= p.c.pow(static_cast<unsigned>(r[j])) * coeff;
        }
        result += term;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        r[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, s);
  }
  return Fraction(std::move(result), std::move(constant_part));
}

Fraction res_x_plus(const Fraction& h, std::size_t var, ResidueMethod method) {
  if (var >= h.nvars()) throw std::invalid_argument("residue variable out of range");
  return method == ResidueMethod::PartialFractions ? res_partial_fractions(h, var)
                                                   : res_series_at_infinity(h, var);
}

RationalSection res_x_plus(const RationalSection& h, std::size_t var, ResidueMethod method) {
  const auto& alg = h.numerator().algebra();
  std::vector<Fraction> parts;
  Denominator common(h.nvars());
  for (std::size_t b = 0; b < alg->dim(); ++b) {
    parts.push_back(res_x_plus(h.coefficient(b), var, method));
    common = Denominator::lcm(common, parts.back().denominator());
  }
  EquivariantPolynomial num(alg, h.nvars());
  for (std::size_t b = 0; b < parts.size(); ++b)
    num.add(b, parts[b].numerator() * parts[b].denominator().cofactor_against(common));
  return RationalSection(std::move(num), std::move(common));
}

Polynomial gk_residue(const EquivariantPolynomial& alpha, const EulerData& euler) {
  const std::size_t n = alpha.nvars();
  const AlgebraPtr& alg = alpha.algebra();
  constexpr std::size_t x = 0;
  int k = static_cast<int>(euler.lines.size());
  int max_s = alpha.degree_in(x) + 1 - k;
  if (alpha.is_zero() || max_s < 0) {
    for (const auto& line : euler.lines)
      if (line.weight[x] == 0) throw NonGenericError("normal weight with zero X-coefficient");
    return Polynomial(n);
  }
  auto zero = EquivariantPolynomial(alg, n);
  // series[s] = coefficient of X^{-k-s} in 1/e.
  std::vector<EquivariantPolynomial> series(static_cast<std::size_t>(max_s + 1), zero);
  series[0] = EquivariantPolynomial::unit(alg, n);
  for (const auto& line : euler.lines) {
    const Rational& m = line.weight[x];
    if (m == 0) throw NonGenericError("normal weight with zero X-coefficient");
    std::vector<Rational> beta = line.weight.coefficients();
    beta[x] = 0;
    EquivariantPolynomial b = EquivariantPolynomial::from_polynomial(alg, LinearForm(beta).to_polynomial()) +
                              EquivariantPolynomial::from_element(alg, line.chern, n);
    // 1/(mX + b) = sum_r (-1)^r b^r / m^{r+1} X^{-(r+1)}
    std::vector<EquivariantPolynomial> factor;
    EquivariantPolynomial power = EquivariantPolynomial::unit(alg, n);
    for (int r = 0; r <= max_s; ++r) {
      Rational c = pow(Rational(1 / m), static_cast<unsigned long>(r + 1));
      if (r % 2) c = -c;
      factor.push_back(power * c);
      power = power * b;
    }
    std::vector<EquivariantPolynomial> next(series.size(), zero);
    for (std::size_t s = 0; s < series.size(); ++s) {
      if (series[s].is_zero()) continue;
      for (std::size_t r = 0; s + r < series.size(); ++r) next[s + r] += series[s] * factor[r];
    }
    series = std::move(next);
  }
  // gamma_{-1} = sum_q alpha_q * series[q + 1 - k]
  std::vector<EquivariantPolynomial> alpha_q;
  for (std::size_t b = 0; b < alg->dim(); ++b) {
    auto cs = alpha.coefficient(b).coefficients_in(x);
    for (std::size_t q = 0; q < cs.size(); ++q) {
      if (alpha_q.size() <= q) alpha_q.resize(q + 1, zero);
      alpha_q[q].add(b, cs[q]);
    }
  }
  EquivariantPolynomial gamma = zero;
  for (std::size_t q = 0; q < alpha_q.size(); ++q) {
    int s = static_cast<int>(q) + 1 - k;
    if (s < 0 || s > max_s) continue;
    gamma += alpha_q[q] * series[static_cast<std::size_t>(s)];
  }
  return gamma.integrate();
}

VariableOrdering VariableOrdering::identity(std::size_t nvars) {
  VariableOrdering o;
  for (std::size_t i = 0; i < nvars; ++i) o.order.push_back(i);
  return o;
}

void VariableOrdering::validate(std::size_t nvars) const {
  if (order.size() != nvars) throw std::invalid_argument("ordering must list every variable once");
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < nvars; ++i)
    if (sorted[i] != i) throw std::invalid_argument("ordering is not a permutation");
  if (delta == 0) throw std::invalid_argument("orientation scalar must be nonzero");
}

Rational iterated_res(const Fraction& h, const VariableOrdering& ordering) {
  ordering.validate(h.nvars());
  Fraction current = h;
  for (std::size_t var : ordering.order) {
    try {
      current = res_x_plus(current, var);
    } catch (const std::domain_error& e) {
      throw NonGenericError(std::string("degenerate stage in iterated residue: ") + e.what());
    }
  }
  auto value = current.as_polynomial();
  if (!value || !value->is_constant())
    throw NonGenericError("iterated residue did not reduce to a scalar");
  return ordering.delta * value->constant_term();
}

namespace {
struct ExponentLess {
  bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};
}  // namespace

Rational selective_iterated_res(const std::vector<WeightedTerm>& terms) {
  if (terms.empty()) return 0;
  std::size_t n = terms.front().value.nvars();
  std::map<std::vector<Rational>, Fraction, ExponentLess> live;
  for (const auto& t : terms) {
    if (t.exponent.size() != n) throw std::invalid_argument("exponent has wrong length");
    auto [it, inserted] = live.try_emplace(t.exponent, t.value);
    if (!inserted) it->second += t.value;
  }
  for (std::size_t var = 0; var < n; ++var) {
    std::map<std::vector<Rational>, Fraction, ExponentLess> next;
    for (const auto& [lambda, value] : live) {
      if (value.is_zero() || value.denominator().degree_in(var) == 0) continue;
      if (lambda[var] == 0)
        throw NonGenericError("exponent vanishes on residue variable " + std::to_string(var));
      if (lambda[var] < 0) continue;
      for (const auto& [form, k] : value.denominator().factors()) {
        if (!form.involves(var)) continue;
        Fraction r = residue_at_pole(value, var, form);
        if (r.is_zero()) continue;
        LinearForm b = pole_location(form, var);
        std::vector<Rational> mu = lambda;
        mu[var] = 0;
        for (std::size_t u = 0; u < n; ++u)
          if (u != var) mu[u] += lambda[var] * b[u];
        auto [it, inserted] = next.try_emplace(mu, r);
        if (!inserted) it->second += r;
      }
    }
    live = std::move(next);
  }
  Rational total = 0;
  for (const auto& [lambda, value] : live) {
    auto p = value.as_polynomial();
    if (!p || !p->is_constant()) throw NonGenericError("iterated residue did not reduce to a scalar");
    total += p->constant_term();
  }
  return total;
}

}  // namespace eqloc
