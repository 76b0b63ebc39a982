#pragma once

#include "eqloc/equivariant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqloc {

struct NormalLine {
  std::vector<long> weight;
  GradedAlgebra::Element chern;
};

/// One connected component of the fixed point set.
struct FixedComponent {
  std::string name;
  std::vector<Rational> moment;
  AlgebraPtr algebra;
  std::vector<NormalLine> normal_lines;

  /// Real dimension: 2 * (number of lines) + top degree of H*(F).
  int dimension() const;
  EulerData euler_data() const;
  EquivariantPolynomial euler_class(std::size_t nvars) const;
};

/// An equivariant class given by its restrictions to every component,
/// indexed like HamiltonianSpace::components.
class RestrictedClass {
 public:
  RestrictedClass() = default;
  RestrictedClass(std::vector<EquivariantPolynomial> restrictions, int degree);

  int degree() const { return degree_; }
  const std::vector<EquivariantPolynomial>& restrictions() const { return parts_; }
  const EquivariantPolynomial& at(std::size_t component) const { return parts_[component]; }
  std::size_t size() const { return parts_.size(); }
  bool is_zero() const;

  RestrictedClass& operator+=(const RestrictedClass& o);
  RestrictedClass& operator-=(const RestrictedClass& o);
  friend RestrictedClass operator+(RestrictedClass a, const RestrictedClass& b) { return a += b; }
  friend RestrictedClass operator-(RestrictedClass a, const RestrictedClass& b) { return a -= b; }
  friend RestrictedClass operator*(const RestrictedClass& a, const RestrictedClass& b);
  friend RestrictedClass operator*(RestrictedClass a, const Rational& c);
  /// Multiplication by a pure polynomial of the given cohomological degree.
  RestrictedClass times(const Polynomial& p, int p_degree) const;
  bool operator==(const RestrictedClass& o) const;

  /// Flattened rational coordinates: component, algebra basis index, then
  /// monomials of the matching degree in MonomialOrder.
  std::vector<Rational> coordinates() const;

 private:
  std::vector<EquivariantPolynomial> parts_;
  int degree_ = 0;
};

struct Generator {
  std::string name;
  int degree;
  RestrictedClass value;
};

/// Fixed-point data of a Hamiltonian torus space plus a generating set of
/// classes described by their restrictions.
class HamiltonianSpace {
 public:
  HamiltonianSpace(Variables variables, int dim_m, std::vector<FixedComponent> components,
                   std::vector<Generator> generators);

  const Variables& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.count(); }
  int dim_m() const { return dim_m_; }
  const std::vector<FixedComponent>& components() const { return components_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> component_index(const std::string& name) const;
  std::optional<std::size_t> generator_index(const std::string& name) const;

  RestrictedClass unit() const;
  RestrictedClass zero(int degree) const;
  /// The class restricting to the same polynomial p (of cohomological
  /// degree 2 * deg p) on every component.
  RestrictedClass constant_class(const Polynomial& p) const;

 private:
  void validate() const;

  Variables vars_;
  int dim_m_;
  std::vector<FixedComponent> components_;
  std::vector<Generator> generators_;
};

/// Primitive integer direction in the Lie algebra of the torus.
struct CircleDirection {
  std::vector<long> xi;

  explicit CircleDirection(std::vector<long> v);
  CircleDirection operator-() const;
  std::string to_string() const;
};

}  // namespace eqloc
