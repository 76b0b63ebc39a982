#include "eqloc/equivariant.hpp"

#include <stdexcept>

namespace eqloc {

EquivariantPolynomial::EquivariantPolynomial(AlgebraPtr algebra, std::size_t nvars)
    : algebra_(std::move(algebra)), nvars_(nvars) {
  if (!algebra_) throw StructuralError("equivariant polynomial without an algebra");
  coeffs_.assign(algebra_->dim(), Polynomial(nvars_));
}

EquivariantPolynomial EquivariantPolynomial::unit(AlgebraPtr algebra, std::size_t nvars) {
  EquivariantPolynomial p(std::move(algebra), nvars);
  p.coeffs_[0] = Polynomial::constant(nvars, 1);
  return p;
}

EquivariantPolynomial EquivariantPolynomial::from_polynomial(AlgebraPtr algebra, const Polynomial& q) {
  EquivariantPolynomial p(std::move(algebra), q.nvars());
  p.coeffs_[0] = q;
  return p;
}

EquivariantPolynomial EquivariantPolynomial::from_element(AlgebraPtr algebra,
                                                          const GradedAlgebra::Element& e,
                                                          std::size_t nvars) {
  EquivariantPolynomial p(std::move(algebra), nvars);
  if (e.size() != p.algebra_->dim()) throw StructuralError("algebra element has wrong length");
  for (std::size_t b = 0; b < e.size(); ++b) p.coeffs_[b] = Polynomial::constant(nvars, e[b]);
  return p;
}

void EquivariantPolynomial::add(std::size_t basis_index, const Polynomial& p) {
  if (p.nvars() != nvars_) throw StructuralError("coefficient over wrong variable set");
  coeffs_.at(basis_index) += p;
}

bool EquivariantPolynomial::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool EquivariantPolynomial::is_homogeneous(int degree) const {
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    if (coeffs_[b].is_zero()) continue;
    int rest = degree - algebra_->degree(b);
    if (rest < 0 || rest % 2 != 0) return false;
    if (!coeffs_[b].is_homogeneous(rest / 2)) return false;
  }
  return true;
}

int EquivariantPolynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree_in(var));
  return d;
}

void EquivariantPolynomial::require_compatible(const EquivariantPolynomial& o) const {
  if (nvars_ != o.nvars_) throw StructuralError("equivariant polynomials over different variables");
  if (algebra_ != o.algebra_ && !(*algebra_ == *o.algebra_))
    throw StructuralError("equivariant polynomials over different algebras");
}

EquivariantPolynomial& EquivariantPolynomial::operator+=(const EquivariantPolynomial& o) {
  require_compatible(o);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) coeffs_[b] += o.coeffs_[b];
  return *this;
}

EquivariantPolynomial& EquivariantPolynomial::operator-=(const EquivariantPolynomial& o) {
  require_compatible(o);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) coeffs_[b] -= o.coeffs_[b];
  return *this;
}

EquivariantPolynomial operator*(const EquivariantPolynomial& a, const EquivariantPolynomial& b) {
  a.require_compatible(b);
  EquivariantPolynomial r(a.algebra_, a.nvars_);
  std::size_t n = a.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const auto& row = a.algebra_->product(i, j);
      if (row.empty()) continue;
      Polynomial ab = a.coeffs_[i] * b.coeffs_[j];
      for (const auto& [k, v] : row) r.coeffs_[k] += ab * v;
    }
  }
  return r;
}

EquivariantPolynomial operator*(EquivariantPolynomial a, const Rational& c) {
  for (auto& p : a.coeffs_) p *= c;
  return a;
}

EquivariantPolynomial operator*(EquivariantPolynomial a, const Polynomial& q) {
  if (q.nvars() != a.nvars_) throw StructuralError("polynomial over different variables");
  for (auto& p : a.coeffs_) p *= q;
  return a;
}

EquivariantPolynomial EquivariantPolynomial::operator-() const { return *this * Rational(-1); }

bool EquivariantPolynomial::operator==(const EquivariantPolynomial& o) const {
  if (nvars_ != o.nvars_ || coeffs_.size() != o.coeffs_.size()) return false;
  return coeffs_ == o.coeffs_;
}

Polynomial EquivariantPolynomial::integrate() const {
  Polynomial r(nvars_);
  const auto& integral = algebra_->integral();
  for (std::size_t b = 0; b < coeffs_.size(); ++b)
    if (integral[b] != 0) r += coeffs_[b] * integral[b];
  return r;
}

EquivariantPolynomial EquivariantPolynomial::compose(const std::vector<Polynomial>& images) const {
  std::size_t target = images.empty() ? nvars_ : images[0].nvars();
  EquivariantPolynomial r(algebra_, target);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) r.coeffs_[b] = coeffs_[b].compose(images);
  return r;
}

EquivariantPolynomial EquivariantPolynomial::pulled_back(const IntMatrix& u) const {
  EquivariantPolynomial r(algebra_, nvars_);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) r.coeffs_[b] = pull_back(coeffs_[b], u);
  return r;
}

EquivariantPolynomial EquivariantPolynomial::map_algebra(const AlgebraPtr& target,
                                                         const RationalMatrix& map) const {
  EquivariantPolynomial r(target, nvars_);
  if (map.size() != target->dim()) throw StructuralError("algebra map has wrong row count");
  for (std::size_t t = 0; t < map.size(); ++t) {
    if (map[t].size() != coeffs_.size()) throw StructuralError("algebra map has wrong column count");
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
      if (map[t][s] != 0) r.coeffs_[t] += coeffs_[s] * map[t][s];
  }
  return r;
}

std::optional<EquivariantPolynomial> EquivariantPolynomial::divide_exact(const Polynomial& divisor) const {
  EquivariantPolynomial r(algebra_, nvars_);
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    auto q = coeffs_[b].divide_exact(divisor);
    if (!q) return std::nullopt;
    r.coeffs_[b] = std::move(*q);
  }
  return r;
}

std::string EquivariantPolynomial::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    if (coeffs_[b].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = coeffs_[b].to_string(names);
    if (b == 0)
      out += coeffs_[b].terms().size() > 1 ? "(" + c + ")" : c;
    else if (coeffs_[b] == Polynomial::constant(nvars_, 1))
      out += algebra_->names()[b];
    else
      out += "(" + c + ")*" + algebra_->names()[b];
  }
  return out.empty() ? "0" : out;
}

RationalSection::RationalSection(EquivariantPolynomial numerator, Denominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.nvars() != den_.nvars()) throw StructuralError("rational section variable mismatch");
}

RationalSection::RationalSection(EquivariantPolynomial numerator)
    : num_(std::move(numerator)), den_(num_.nvars()) {}

Fraction RationalSection::coefficient(std::size_t basis_index) const {
  return Fraction(num_.coefficient(basis_index), den_);
}

RationalSection operator*(const RationalSection& a, const RationalSection& b) {
  return RationalSection(a.num_ * b.num_, a.den_ * b.den_);
}

RationalSection operator*(const EquivariantPolynomial& a, const RationalSection& b) {
  return RationalSection(a * b.num_, b.den_);
}

RationalSection& RationalSection::operator+=(const RationalSection& o) {
  Denominator l = Denominator::lcm(den_, o.den_);
  num_ = num_ * den_.cofactor_against(l) + o.num_ * o.den_.cofactor_against(l);
  den_ = std::move(l);
  return *this;
}

bool RationalSection::operator==(const RationalSection& o) const {
  Denominator l = Denominator::lcm(den_, o.den_);
  return num_ * den_.cofactor_against(l) == o.num_ * o.den_.cofactor_against(l);
}

Fraction RationalSection::integrate() const { return Fraction(num_.integrate(), den_); }

std::size_t EulerData::nvars() const { return lines.empty() ? 0 : lines.front().weight.size(); }

EulerData EulerData::pulled_back(const IntMatrix& u) const {
  EulerData r{algebra, {}};
  for (const auto& line : lines) r.lines.push_back({line.weight.pulled_back(u), line.chern});
  return r;
}

EquivariantPolynomial euler_product(const EulerData& euler, std::size_t nvars) {
  EquivariantPolynomial e = EquivariantPolynomial::unit(euler.algebra, nvars);
  for (const auto& line : euler.lines) {
    EquivariantPolynomial factor =
        EquivariantPolynomial::from_polynomial(euler.algebra, line.weight.to_polynomial()) +
        EquivariantPolynomial::from_element(euler.algebra, line.chern, nvars);
    e = e * factor;
  }
  return e;
}

RationalSection invert_euler(const EulerData& euler, std::size_t nvars) {
  const AlgebraPtr& alg = euler.algebra;
  RationalSection result(EquivariantPolynomial::unit(alg, nvars));
  for (const auto& line : euler.lines) {
    if (line.weight.size() != nvars) throw StructuralError("Euler weight has wrong length");
    if (line.weight.is_zero()) throw SingularEulerError("normal weight is zero; Euler class not invertible");
    if (line.chern.size() != alg->dim() || line.chern[0] != 0)
      throw SingularEulerError("Chern class must be a positive-degree algebra element");
    // powers[r] = (-c)^r until nilpotency kills it.
    std::vector<GradedAlgebra::Element> powers{alg->unit()};
    GradedAlgebra::Element minus_c = line.chern;
    for (auto& v : minus_c) v = -v;
    while (true) {
      GradedAlgebra::Element next = alg->multiply(powers.back(), minus_c);
      if (alg->is_zero(next)) break;
      if (powers.size() > static_cast<std::size_t>(alg->top_degree() + 2))
        throw SingularEulerError("Chern class is not nilpotent");
      powers.push_back(std::move(next));
    }
    int top = static_cast<int>(powers.size()) - 1;
    // sum_r (-c)^r w^{top-r} / w^{top+1}
    Polynomial w = line.weight.to_polynomial();
    EquivariantPolynomial num(alg, nvars);
    for (int r = 0; r <= top; ++r)
      num += EquivariantPolynomial::from_element(alg, powers[static_cast<std::size_t>(r)], nvars) *
             w.pow(static_cast<unsigned>(top - r));
    Denominator den(nvars);
    Rational scale = den.insert(line.weight, top + 1);
    result = result * RationalSection(num * Rational(1 / scale), den);
  }
  return result;
}

}  // namespace eqloc
