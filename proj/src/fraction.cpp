#include "eqloc/fraction.hpp"

#include <stdexcept>

namespace eqloc {

int Denominator::multiplicity(const LinearForm& form) const {
  auto it = factors_.find(form);
  return it == factors_.end() ? 0 : it->second;
}

int Denominator::total_degree() const {
  int d = 0;
  for (const auto& [f, k] : factors_) d += k;
  return d;
}

int Denominator::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [f, k] : factors_)
    if (f.involves(var)) d += k;
  return d;
}

Rational Denominator::insert(const LinearForm& form, int multiplicity) {
  if (form.size() != nvars_) throw std::invalid_argument("linear form has wrong length");
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0) return Rational(1);
  auto [scale, normal] = form.normalized();
  factors_[normal] += multiplicity;
  return pow(scale, static_cast<unsigned long>(multiplicity));
}

void Denominator::insert_normalized(const LinearForm& form, int multiplicity) {
  if (multiplicity > 0) factors_[form] += multiplicity;
}

void Denominator::remove_one(const LinearForm& form) {
  auto it = factors_.find(form);
  if (it == factors_.end()) throw std::logic_error("removing absent denominator factor");
  if (--it->second == 0) factors_.erase(it);
}

Polynomial Denominator::expand() const {
  Polynomial p = Polynomial::constant(nvars_, 1);
  for (const auto& [f, k] : factors_) p *= f.to_polynomial().pow(static_cast<unsigned>(k));
  return p;
}

Polynomial Denominator::cofactor_against(const Denominator& lcm) const {
  Polynomial p = Polynomial::constant(nvars_, 1);
  for (const auto& [f, k] : lcm.factors_) {
    int missing = k - multiplicity(f);
    if (missing > 0) p *= f.to_polynomial().pow(static_cast<unsigned>(missing));
  }
  return p;
}

Denominator Denominator::lcm(const Denominator& a, const Denominator& b) {
  Denominator r = a;
  for (const auto& [f, k] : b.factors_) {
    int& slot = r.factors_[f];
    slot = std::max(slot, k);
  }
  return r;
}

Denominator Denominator::operator*(const Denominator& o) const {
  Denominator r = *this;
  for (const auto& [f, k] : o.factors_) r.factors_[f] += k;
  return r;
}

std::string Denominator::to_string(const std::vector<std::string>& names) const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [f, k] : factors_) {
    if (!s.empty()) s += "*";
    s += "(" + f.to_string(names) + ")";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

Fraction::Fraction(Polynomial numerator, Denominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.nvars() != den_.nvars()) throw std::invalid_argument("fraction variable mismatch");
}

Fraction::Fraction(Polynomial numerator, const std::vector<std::pair<LinearForm, int>>& factors)
    : num_(std::move(numerator)), den_(num_.nvars()) {
  Rational scale = 1;
  for (const auto& [f, k] : factors) scale *= den_.insert(f, k);
  num_ *= Rational(1 / scale);
}

Fraction& Fraction::operator+=(const Fraction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    return *this;
  }
  Denominator l = Denominator::lcm(den_, o.den_);
  num_ = num_ * den_.cofactor_against(l) + o.num_ * o.den_.cofactor_against(l);
  den_ = std::move(l);
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) { return *this += -o; }

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator*(Fraction a, const Rational& c) {
  a.num_ *= c;
  return a;
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

bool Fraction::operator==(const Fraction& o) const {
  if (nvars() != o.nvars()) return false;
  Denominator l = Denominator::lcm(den_, o.den_);
  return num_ * den_.cofactor_against(l) == o.num_ * o.den_.cofactor_against(l);
}

Fraction Fraction::reduced() const {
  if (num_.is_zero()) return Fraction(nvars());
  Polynomial num = num_;
  Denominator den = den_;
  for (const auto& [f, k] : den_.factors()) {
    for (int i = 0; i < k; ++i) {
      auto q = num.divide_by_linear(f);
      if (!q) break;
      num = std::move(*q);
      den.remove_one(f);
    }
  }
  return Fraction(std::move(num), std::move(den));
}

std::optional<Polynomial> Fraction::as_polynomial() const {
  Fraction r = reduced();
  if (!r.den_.empty()) return std::nullopt;
  return r.num_;
}

bool Fraction::depends_on(std::size_t var) const {
  if (num_.degree_in(var) > 0) return true;
  return den_.degree_in(var) > 0;
}

Fraction Fraction::derivative(std::size_t var) const {
  std::vector<const std::pair<const LinearForm, int>*> poles;
  for (const auto& entry : den_.factors())
    if (entry.first.involves(var)) poles.push_back(&entry);
  if (poles.empty()) return Fraction(num_.derivative(var), den_);
  std::size_t n = nvars();
  Polynomial all = Polynomial::constant(n, 1);
  for (auto* p : poles) all *= p->first.to_polynomial();
  Polynomial top = num_.derivative(var) * all;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    Polynomial others = Polynomial::constant(n, 1);
    for (std::size_t j = 0; j < poles.size(); ++j)
      if (j != i) others *= poles[j]->first.to_polynomial();
    top -= num_ * others * Rational(poles[i]->second * poles[i]->first[var]);
  }
  Denominator den = den_;
  for (auto* p : poles) den.insert_normalized(p->first, 1);
  return Fraction(std::move(top), std::move(den));
}

Fraction Fraction::substitute(std::size_t var, const LinearForm& value) const {
  std::size_t n = nvars();
  Polynomial num = num_.substitute(var, value.to_polynomial());
  Denominator den(n);
  Rational scale = 1;
  for (const auto& [f, k] : den_.factors()) {
    LinearForm g = f.substitute(var, value);
    if (g.is_zero()) throw std::domain_error("denominator factor vanishes identically");
    scale *= den.insert(g, k);
  }
  num *= Rational(1 / scale);
  return Fraction(std::move(num), std::move(den));
}

Polynomial pull_back(const Polynomial& p, const std::vector<std::vector<long>>& u) {
  std::size_t n = p.nvars();
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = u[j][k];
    images.push_back(LinearForm(std::move(c)).to_polynomial());
  }
  return p.compose(images);
}

Fraction Fraction::pulled_back(const std::vector<std::vector<long>>& u) const {
  std::size_t n = nvars();
  Polynomial num = pull_back(num_, u);
  Denominator den(n);
  Rational scale = 1;
  for (const auto& [f, k] : den_.factors()) {
    LinearForm g = f.pulled_back(u);
    if (g.is_zero()) throw std::domain_error("singular change of variables");
    scale *= den.insert(g, k);
  }
  num *= Rational(1 / scale);
  return Fraction(std::move(num), std::move(den));
}

std::string Fraction::to_string(const std::vector<std::string>& names) const {
  if (den_.empty()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace eqloc
