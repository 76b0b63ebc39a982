#include "eqloc/localization.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace eqloc {

namespace {

Rational pairing(const std::vector<Rational>& mu, const std::vector<long>& xi) {
  Rational s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += mu[i] * xi[i];
  return s;
}

long pairing(const std::vector<long>& w, const std::vector<long>& xi) {
  long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * xi[i];
  return s;
}

std::string vec_string(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

GenericityReport is_generic(const HamiltonianSpace& space, const CircleDirection& xi) {
  if (xi.xi.size() != space.nvars()) throw std::invalid_argument("circle direction has the wrong length");
  GenericityReport report;
  for (const auto& c : space.components()) {
    if (pairing(c.moment, xi.xi) == 0) report.violations.push_back("component " + c.name + ": <mu, xi> = 0");
    for (const auto& line : c.normal_lines)
      if (pairing(line.weight, xi.xi) == 0)
        report.violations.push_back("component " + c.name + ": weight " + vec_string(line.weight) +
                                    " is annihilated by xi");
  }
  report.generic = report.violations.empty();
  return report;
}

Fraction localized_integrand(const HamiltonianSpace& space, std::size_t component, const RestrictedClass& eta) {
  const auto& c = space.components()[component];
  return (eta.at(component) * invert_euler(c.euler_data(), space.nvars())).integrate();
}

AbbvResult abbv_sum(const HamiltonianSpace& space, const RestrictedClass& eta) {
  AbbvResult r{Fraction(space.nvars()), false, Polynomial(space.nvars())};
  for (std::size_t i = 0; i < space.components().size(); ++i) r.sum += localized_integrand(space, i, eta);
  if (auto p = r.sum.as_polynomial()) {
    r.polynomial = true;
    r.value = *p;
  }
  return r;
}

IntMatrix adapted_basis(const std::vector<long>& v) {
  const std::size_t n = v.size();
  auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
  if (first == v.end()) throw std::invalid_argument("adapted_basis: zero vector");
  if (*first < 0) {
    std::vector<long> neg = v;
    for (auto& x : neg) x = -x;
    IntMatrix u = adapted_basis(neg);
    for (auto& row : u) row[0] = -row[0];
    return u;
  }
  // Row-reduce w = v to e_0 while tracking the inverse of the accumulated
  // row operations; that inverse has v as its first column.
  std::vector<long> w = v;
  IntMatrix inv(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  auto nonzero = [&] { return std::count_if(w.begin(), w.end(), [](long x) { return x != 0; }); };
  while (nonzero() > 1) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] != 0 && (p == n || std::labs(w[i]) < std::labs(w[p]))) p = i;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == p || w[j] == 0) continue;
      long q = w[j] / w[p];
      w[j] -= q * w[p];
      for (std::size_t r = 0; r < n; ++r) inv[r][p] += q * inv[r][j];
    }
  }
  std::size_t p = static_cast<std::size_t>(std::find_if(w.begin(), w.end(), [](long x) { return x != 0; }) - w.begin());
  if (std::labs(w[p]) != 1) throw std::invalid_argument("adapted_basis: vector is not primitive");
  if (w[p] < 0)
    for (std::size_t r = 0; r < n; ++r) inv[r][p] = -inv[r][p];
  if (p != 0)
    for (std::size_t r = 0; r < n; ++r) std::swap(inv[r][p], inv[r][0]);
  return inv;
}

long determinant(const IntMatrix& u) {
  const std::size_t n = u.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = u[i][j];
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det.get_num().get_si();
}

KappaSResult kappa_S_integral(const HamiltonianSpace& space, const RestrictedClass& eta, const CircleDirection& xi) {
  auto generic = is_generic(space, xi);
  if (!generic.generic) throw GenericityError("circle " + xi.to_string() + " is not generic: " + generic.violations.front());
  const std::size_t n = space.nvars();
  KappaSResult result{Polynomial(n), adapted_basis(xi.xi)};
  Fraction total(n);
  for (std::size_t i = 0; i < space.components().size(); ++i) {
    if (pairing(space.components()[i].moment, xi.xi) <= 0) continue;
    Fraction h = localized_integrand(space, i, eta).pulled_back(result.basis);
    total += res_x_plus(h, 0);
  }
  auto value = total.as_polynomial();
  if (!value) throw DataInconsistencyError("equivariant Kirwan integral is not polynomial: " +
                                           total.to_string(space.variables().names()));
  result.value = *value * Rational(determinant(result.basis));
  return result;
}

Frame Frame::identity(std::size_t n) { return from_ordering(VariableOrdering::identity(n)); }

Frame Frame::from_ordering(const VariableOrdering& ordering) {
  const std::size_t n = ordering.order.size();
  ordering.validate(n);
  Frame f{IntMatrix(n, std::vector<long>(n, 0)), ordering.delta};
  for (std::size_t i = 0; i < n; ++i) f.basis[ordering.order[i]][i] = 1;
  return f;
}

std::string Frame::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<long> col;
    for (const auto& row : basis) col.push_back(row[i]);
    s += (i ? "," : "") + vec_string(col);
  }
  return s + "] delta=" + eqloc::to_string(delta);
}

namespace {

struct SymbolicTerm {
  std::vector<Rational> exponent;
  std::set<LinearForm> forms;
  bool operator<(const SymbolicTerm& o) const {
    if (exponent != o.exponent)
      return std::lexicographical_compare(exponent.begin(), exponent.end(), o.exponent.begin(), o.exponent.end());
    return forms < o.forms;
  }
};

std::vector<Rational> pulled_exponent(const std::vector<Rational>& mu, const IntMatrix& u) {
  std::vector<Rational> out(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j)
    for (std::size_t i = 0; i < mu.size(); ++i) out[j] += u[i][j] * mu[i];
  return out;
}

}  // namespace

GenericityReport frame_is_generic(const HamiltonianSpace& space, const Frame& frame) {
  const std::size_t n = space.nvars();
  GenericityReport report;
  if (frame.basis.size() != n || std::abs(determinant(frame.basis)) != 1) {
    report.generic = false;
    report.violations.push_back("frame is not a unimodular " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    return report;
  }
  std::vector<long> first;
  for (const auto& row : frame.basis) first.push_back(row[0]);
  for (const auto& v : is_generic(space, CircleDirection(first)).violations)
    report.violations.push_back("first direction " + vec_string(first) + ": " + v);
  std::set<SymbolicTerm> live;
  for (const auto& c : space.components()) {
    SymbolicTerm t{pulled_exponent(c.moment, frame.basis), {}};
    for (const auto& line : c.normal_lines) t.forms.insert(LinearForm::from_ints(line.weight).pulled_back(frame.basis).normalized().second);
    live.insert(std::move(t));
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::set<SymbolicTerm> next;
    for (const auto& t : live) {
      std::vector<const LinearForm*> poles;
      for (const auto& f : t.forms)
        if (f.involves(v)) poles.push_back(&f);
      if (poles.empty()) continue;
      if (t.exponent[v] == 0) {
        report.violations.push_back("stage " + std::to_string(v) + ": exponent vanishes on the residue variable");
        continue;
      }
      if (t.exponent[v] < 0) continue;
      for (const LinearForm* f : poles) {
        LinearForm b = pole_location(*f, v);
        SymbolicTerm s{t.exponent, {}};
        s.exponent[v] = 0;
        for (std::size_t u = 0; u < n; ++u)
          if (u != v) s.exponent[u] += t.exponent[v] * b[u];
        bool collision = false;
        for (const auto& g : t.forms) {
          if (&g == f) continue;
          LinearForm h = g.substitute(v, b);
          if (h.is_zero()) {
            collision = true;
            break;
          }
          s.forms.insert(h.normalized().second);
        }
        if (collision) {
          report.violations.push_back("stage " + std::to_string(v) + ": two poles collide");
          continue;
        }
        next.insert(std::move(s));
      }
    }
    live = std::move(next);
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.violations.erase(std::unique(report.violations.begin(), report.violations.end()), report.violations.end());
  report.generic = report.violations.empty();
  return report;
}

namespace {

// Primitive vectors with max-norm r, in a fixed order.
std::vector<std::vector<long>> shell(std::size_t n, long r) {
  std::vector<std::vector<long>> out;
  std::vector<long> v(n, -r);
  while (true) {
    long m = 0, g = 0;
    for (long x : v) {
      m = std::max(m, std::labs(x));
      g = std::gcd(g, x);
    }
    if (m == r && g == 1) out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == r) v[i++] = -r;
    if (i == n) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long sa = 0, sb = 0;
    for (long x : a) sa += std::labs(x);
    for (long x : b) sb += std::labs(x);
    return sa != sb ? sa < sb : a > b;
  });
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

Frame suggest_frame(const HamiltonianSpace& space) {
  const std::size_t n = space.nvars();
  // Completions U0 * S with S e_0 = e_0: S has a free first row and a
  // unitriangular lower-right block with small entries.
  std::vector<IntMatrix> shears;
  std::size_t free_entries = (n - 1) + (n - 1) * (n - 2) / 2;
  long total = 1;
  for (std::size_t i = 0; i < free_entries; ++i) total *= 5;
  for (long code = 0; code < total; ++code) {
    IntMatrix s(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) s[i][i] = 1;
    long c = code;
    auto digit = [&] {
      long d = c % 5;
      c /= 5;
      return d <= 2 ? d : 2 - d;  // 0, 1, 2, -1, -2
    };
    for (std::size_t j = 1; j < n; ++j) s[0][j] = digit();
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s[i][j] = digit();
    shears.push_back(std::move(s));
  }
  for (long r = 1; r <= 4; ++r) {
    for (const auto& xi : shell(n, r)) {
      if (!is_generic(space, CircleDirection(xi)).generic) continue;
      IntMatrix u0 = adapted_basis(xi);
      for (const auto& s : shears) {
        Frame f{multiply(u0, s), 1};
        if (frame_is_generic(space, f).generic) return f;
      }
    }
  }
  throw GenericityError("no generic frame found among small candidates; supply one explicitly");
}

Rational kappa_T_integral(const HamiltonianSpace& space, const RestrictedClass& eta, const Frame& frame) {
  const std::size_t n = space.nvars();
  if (eta.is_zero() || eta.degree() != space.dim_m() - 2 * static_cast<int>(n)) return 0;
  if (frame.basis.size() != n || std::abs(determinant(frame.basis)) != 1)
    throw std::invalid_argument("frame is not unimodular");
  std::vector<long> first;
  for (const auto& row : frame.basis) first.push_back(row[0]);
  auto generic = is_generic(space, CircleDirection(first));
  if (!generic.generic)
    throw GenericityError("first direction " + vec_string(first) + " is not generic: " + generic.violations.front());
  std::vector<WeightedTerm> terms;
  for (std::size_t i = 0; i < space.components().size(); ++i) {
    Fraction h = localized_integrand(space, i, eta);
    if (h.is_zero()) continue;
    terms.push_back({h.pulled_back(frame.basis), pulled_exponent(space.components()[i].moment, frame.basis)});
  }
  return frame.delta * selective_iterated_res(terms);
}

RationalMatrix pairing_matrix(const std::vector<RestrictedClass>& basis, const ScalarIntegral& integral) {
  RationalMatrix m(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) m[i][j] = integral(basis[i] * basis[j]);
  return m;
}

}  // namespace eqloc
