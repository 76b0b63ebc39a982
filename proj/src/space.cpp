#include "eqloc/space.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace eqloc {

int FixedComponent::dimension() const {
  return 2 * static_cast<int>(normal_lines.size()) + algebra->top_degree();
}

EulerData FixedComponent::euler_data() const {
  EulerData d{algebra, {}};
  for (const auto& line : normal_lines) d.lines.push_back({LinearForm::from_ints(line.weight), line.chern});
  return d;
}

EquivariantPolynomial FixedComponent::euler_class(std::size_t nvars) const {
  return euler_product(euler_data(), nvars);
}

RestrictedClass::RestrictedClass(std::vector<EquivariantPolynomial> restrictions, int degree)
    : parts_(std::move(restrictions)), degree_(degree) {
  for (const auto& p : parts_)
    if (!p.is_homogeneous(degree_))
      throw StructuralError("restriction is not homogeneous of degree " + std::to_string(degree_));
}

bool RestrictedClass::is_zero() const {
  for (const auto& p : parts_)
    if (!p.is_zero()) return false;
  return true;
}

static void require_same_shape(const RestrictedClass& a, const RestrictedClass& b) {
  if (a.size() != b.size()) throw StructuralError("classes over different component sets");
}

RestrictedClass& RestrictedClass::operator+=(const RestrictedClass& o) {
  require_same_shape(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    // zero classes carry no meaningful degree
    parts_ = o.parts_;
    degree_ = o.degree_;
    return *this;
  }
  if (degree_ != o.degree_) throw StructuralError("adding classes of different degrees");
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += o.parts_[i];
  return *this;
}

RestrictedClass& RestrictedClass::operator-=(const RestrictedClass& o) { return *this += o * Rational(-1); }

RestrictedClass operator*(const RestrictedClass& a, const RestrictedClass& b) {
  require_same_shape(a, b);
  RestrictedClass r;
  r.degree_ = a.degree_ + b.degree_;
  for (std::size_t i = 0; i < a.parts_.size(); ++i) r.parts_.push_back(a.parts_[i] * b.parts_[i]);
  return r;
}

RestrictedClass operator*(RestrictedClass a, const Rational& c) {
  for (auto& p : a.parts_) p = p * c;
  return a;
}

RestrictedClass RestrictedClass::times(const Polynomial& p, int p_degree) const {
  RestrictedClass r;
  r.degree_ = degree_ + p_degree;
  for (const auto& part : parts_) r.parts_.push_back(part * p);
  return r;
}

bool RestrictedClass::operator==(const RestrictedClass& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (!(parts_[i] == o.parts_[i])) return false;
  return true;
}

std::vector<Rational> RestrictedClass::coordinates() const {
  std::vector<Rational> out;
  for (const auto& part : parts_) {
    const auto& alg = *part.algebra();
    for (std::size_t b = 0; b < alg.dim(); ++b) {
      int rest = degree_ - alg.degree(b);
      if (rest < 0 || rest % 2) continue;
      for (const auto& e : monomials_of_degree(part.nvars(), rest / 2))
        out.push_back(part.coefficient(b).coefficient(e));
    }
  }
  return out;
}

HamiltonianSpace::HamiltonianSpace(Variables variables, int dim_m, std::vector<FixedComponent> components,
                                   std::vector<Generator> generators)
    : vars_(std::move(variables)),
      dim_m_(dim_m),
      components_(std::move(components)),
      generators_(std::move(generators)) {
  validate();
}

void HamiltonianSpace::validate() const {
  const std::size_t n = nvars();
  if (n == 0) throw StructuralError("torus rank must be at least 1");
  if (dim_m_ < 0 || dim_m_ % 2) throw StructuralError("dim_M must be even and non-negative");
  if (components_.empty()) throw StructuralError("space has no fixed components");
  std::set<std::string> names;
  for (const auto& c : components_) {
    if (!names.insert(c.name).second) throw StructuralError("duplicate component name '" + c.name + "'");
    if (c.moment.size() != n) throw StructuralError("component '" + c.name + "': moment has wrong length");
    for (std::size_t i = 0; i < c.normal_lines.size(); ++i) {
      const auto& line = c.normal_lines[i];
      std::string where = "component '" + c.name + "', line " + std::to_string(i);
      if (line.weight.size() != n) throw StructuralError(where + ": weight has wrong length");
      if (std::all_of(line.weight.begin(), line.weight.end(), [](long w) { return w == 0; }))
        throw StructuralError(where + ": zero weight");
      if (line.chern.size() != c.algebra->dim()) throw StructuralError(where + ": chern class has wrong length");
      if (!c.algebra->is_homogeneous(line.chern, 2)) throw StructuralError(where + ": chern class is not of degree 2");
    }
    if (c.dimension() != dim_m_)
      throw StructuralError("component '" + c.name + "': 2*lines + top degree = " + std::to_string(c.dimension()) +
                            " but dim_M = " + std::to_string(dim_m_));
  }
  std::set<std::string> gnames;
  bool has_unit = false;
  for (const auto& g : generators_) {
    if (!gnames.insert(g.name).second) throw StructuralError("duplicate generator name '" + g.name + "'");
    if (g.value.size() != components_.size())
      throw StructuralError("generator '" + g.name + "' does not restrict to every component");
    if (g.value.degree() != g.degree) throw StructuralError("generator '" + g.name + "' has inconsistent degree");
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const auto& r = g.value.at(i);
      if (r.algebra() != components_[i].algebra && !(*r.algebra() == *components_[i].algebra))
        throw StructuralError("generator '" + g.name + "' restricts to component '" + components_[i].name +
                              "' over the wrong algebra");
      if (r.nvars() != n) throw StructuralError("generator '" + g.name + "' uses the wrong variable count");
    }
    if (g.value == unit()) has_unit = true;
  }
  if (!has_unit) throw StructuralError("generator set must contain the unit class");
}

std::optional<std::size_t> HamiltonianSpace::component_index(const std::string& name) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> HamiltonianSpace::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

RestrictedClass HamiltonianSpace::unit() const { return constant_class(Polynomial::constant(nvars(), 1)); }

RestrictedClass HamiltonianSpace::zero(int degree) const {
  std::vector<EquivariantPolynomial> parts;
  for (const auto& c : components_) parts.emplace_back(c.algebra, nvars());
  return RestrictedClass(std::move(parts), degree);
}

RestrictedClass HamiltonianSpace::constant_class(const Polynomial& p) const {
  int deg = p.is_zero() ? 0 : p.total_degree();
  if (!p.is_homogeneous(deg)) throw StructuralError("constant class must be homogeneous");
  std::vector<EquivariantPolynomial> parts;
  for (const auto& c : components_) parts.push_back(EquivariantPolynomial::from_polynomial(c.algebra, p));
  return RestrictedClass(std::move(parts), 2 * deg);
}

CircleDirection::CircleDirection(std::vector<long> v) : xi(std::move(v)) {
  long g = 0;
  for (long x : xi) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("circle direction " + to_string() + " is not primitive");
}

CircleDirection CircleDirection::operator-() const {
  std::vector<long> v = xi;
  for (auto& x : v) x = -x;
  return CircleDirection(std::move(v));
}

std::string CircleDirection::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? "," : "") + std::to_string(xi[i]);
  return s + ")";
}

}  // namespace eqloc
