#include "eqloc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqloc {

Variables::Variables(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("at least one variable is required");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("variable names must be distinct");
}

Variables Variables::standard(std::size_t count) {
  std::vector<std::string> names{"X"};
  for (std::size_t i = 1; i < count; ++i) names.push_back("Y" + std::to_string(i));
  return Variables(std::move(names));
}

std::optional<std::size_t> Variables::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  // Lexicographically descending enumeration of compositions.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(std::move(e));
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && eqloc::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(nvars_, 0)); }

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : eqloc::total_degree(terms_.begin()->first);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Polynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return eqloc::total_degree(t.first) == degree; });
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("polynomials over different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.nvars_, b.nvars_);
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1), base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    r.add_term(f, c * e[var]);
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(degree_in(var) + 1, 0)),
                              Polynomial(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[static_cast<std::size_t>(e[var])].add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  require_same(nvars_, value.nvars_);
  auto coeffs = coefficients_in(var);
  // Horner in the substituted variable.
  Polynomial r(nvars_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
  return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("compose: wrong number of images");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images) require_same(target, im.nvars());
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (std::size_t j = 0; j < nvars_; ++j) powers[j].push_back(constant(target, 1));
  auto power = [&](std::size_t j, int k) -> const Polynomial& {
    while (static_cast<int>(powers[j].size()) <= k) powers[j].push_back(powers[j].back() * images[j]);
    return powers[j][static_cast<std::size_t>(k)];
  };
  Polynomial r(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t j = 0; j < nvars_; ++j)
      if (e[j]) t *= power(j, e[j]);
    r += t;
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  require_same(nvars_, divisor.nvars_);
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial remainder = *this, quotient(nvars_);
  const auto& [lead_e, lead_c] = *divisor.terms_.begin();
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms_.begin();
    Exponents q(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      q[i] = re[i] - lead_e[i];
      if (q[i] < 0) return std::nullopt;
    }
    Polynomial step = monomial(q, rc / lead_c);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::optional<Polynomial> Polynomial::divide_by_linear(const LinearForm& form) const {
  require_same(nvars_, form.size());
  if (form.is_zero()) throw std::domain_error("division by the zero linear form");
  std::size_t var = 0;
  while (form[var] == 0) ++var;
  const Rational& lead = form[var];
  // form = lead * (x_var - root)
  Polynomial root(nvars_);
  for (std::size_t j = 0; j < nvars_; ++j)
    if (j != var && form[j] != 0) root += variable(nvars_, j) * Rational(-form[j] / lead);
  auto coeffs = coefficients_in(var);
  if (coeffs.empty()) return Polynomial(nvars_);
  std::size_t n = coeffs.size() - 1;
  std::vector<Polynomial> q(n, Polynomial(nvars_));
  Polynomial carry(nvars_);
  for (std::size_t i = n; i >= 1; --i) {
    carry = coeffs[i] + carry * root;
    q[i - 1] = carry;
  }
  Polynomial remainder = coeffs[0] + carry * root;
  if (!remainder.is_zero()) return std::nullopt;
  Polynomial result(nvars_);
  Polynomial xv = variable(nvars_, var);
  Polynomial xpow = constant(nvars_, 1);
  for (std::size_t i = 0; i < n; ++i) {
    result += q[i] * xpow;
    xpow *= xv;
  }
  result *= Rational(1 / lead);
  return result;
}

static std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = monomial_string(e, names);
    if (mono.empty())
      out += eqloc::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += eqloc::to_string(mag) + "*" + mono;
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(Variables::standard(std::max<std::size_t>(nvars_, 1)).names()); }

LinearForm LinearForm::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return LinearForm(std::move(c));
}

LinearForm LinearForm::coordinate(std::size_t nvars, std::size_t index) {
  std::vector<Rational> c(nvars);
  c.at(index) = 1;
  return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial p(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) p += Polynomial::variable(coeffs_.size(), j) * coeffs_[j];
  return p;
}

std::pair<Rational, LinearForm> LinearForm::normalized() const {
  if (is_zero()) throw std::domain_error("cannot normalize the zero linear form");
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  for (const auto& c : coeffs_) {
    Rational scaled = c * den_lcm;
    ints.push_back(scaled.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::size_t lead = 0;
  while (ints[lead] == 0) ++lead;
  if (ints[lead] < 0) num_gcd = -num_gcd;
  std::vector<Rational> prim;
  for (auto& v : ints) prim.emplace_back(Integer(v / num_gcd));
  Rational scale(num_gcd, den_lcm);
  scale.canonicalize();
  return {scale, LinearForm(std::move(prim))};
}

LinearForm LinearForm::substitute(std::size_t var, const LinearForm& value) const {
  if (value[var] != 0) throw std::invalid_argument("substituted value involves the variable");
  std::vector<Rational> c = coeffs_;
  Rational a = c[var];
  c[var] = 0;
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += a * value[j];
  return LinearForm(std::move(c));
}

LinearForm LinearForm::pulled_back(const std::vector<std::vector<long>>& u) const {
  std::size_t n = coeffs_.size();
  std::vector<Rational> c(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) c[k] += coeffs_[j] * u[j][k];
  return LinearForm(std::move(c));
}

LinearForm LinearForm::operator*(const Rational& s) const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v *= s;
  return LinearForm(std::move(c));
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  std::vector<Rational> c = coeffs_;
  for (std::size_t j = 0; j < c.size(); ++j) c[j] += o.coeffs_[j];
  return LinearForm(std::move(c));
}

bool LinearForm::operator<(const LinearForm& o) const {
  return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(),
                                      o.coeffs_.end());
}

std::string LinearForm::to_string(const std::vector<std::string>& names) const {
  return to_polynomial().to_string(names);
}

}  // namespace eqloc
