#pragma once

#include "eqloc/fraction.hpp"
#include "eqloc/graded_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqloc {

/// Raised when operands live over different algebras or variable sets.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<long>>;

/// Element of H*(F) (x) Q[X, Y1..Ym], stored as one polynomial per algebra
/// basis element.
class EquivariantPolynomial {
 public:
  EquivariantPolynomial(AlgebraPtr algebra, std::size_t nvars);
  static EquivariantPolynomial unit(AlgebraPtr algebra, std::size_t nvars);
  static EquivariantPolynomial from_polynomial(AlgebraPtr algebra, const Polynomial& p);
  static EquivariantPolynomial from_element(AlgebraPtr algebra, const GradedAlgebra::Element& e,
                                            std::size_t nvars);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t nvars() const { return nvars_; }
  const Polynomial& coefficient(std::size_t basis_index) const { return coeffs_[basis_index]; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  void add(std::size_t basis_index, const Polynomial& p);

  bool is_zero() const;
  /// Total degree is 2 * (variable degree) + algebra degree.
  bool is_homogeneous(int degree) const;
  /// Highest power of `var` appearing in any coefficient.
  int degree_in(std::size_t var) const;

  EquivariantPolynomial& operator+=(const EquivariantPolynomial& o);
  EquivariantPolynomial& operator-=(const EquivariantPolynomial& o);
  friend EquivariantPolynomial operator+(EquivariantPolynomial a, const EquivariantPolynomial& b) {
    return a += b;
  }
  friend EquivariantPolynomial operator-(EquivariantPolynomial a, const EquivariantPolynomial& b) {
    return a -= b;
  }
  friend EquivariantPolynomial operator*(const EquivariantPolynomial& a,
                                         const EquivariantPolynomial& b);
  friend EquivariantPolynomial operator*(EquivariantPolynomial a, const Rational& c);
  friend EquivariantPolynomial operator*(EquivariantPolynomial a, const Polynomial& p);
  EquivariantPolynomial operator-() const;
  bool operator==(const EquivariantPolynomial& o) const;

  /// Applies the integration functional of the algebra coefficientwise.
  Polynomial integrate() const;

  /// Substitutes x_j -> images[j] in every coefficient.
  EquivariantPolynomial compose(const std::vector<Polynomial>& images) const;
  EquivariantPolynomial pulled_back(const IntMatrix& u) const;
  /// Pushes coefficients through a linear map of algebra bases;
  /// map[target_index][source_index].
  EquivariantPolynomial map_algebra(const AlgebraPtr& target, const RationalMatrix& map) const;
  /// Exact division of every coefficient by a pure polynomial.
  std::optional<EquivariantPolynomial> divide_exact(const Polynomial& divisor) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void require_compatible(const EquivariantPolynomial& o) const;

  AlgebraPtr algebra_;
  std::size_t nvars_;
  std::vector<Polynomial> coeffs_;
};

/// Algebra-valued numerator over a factored linear-form denominator.
class RationalSection {
 public:
  RationalSection(EquivariantPolynomial numerator, Denominator denominator);
  explicit RationalSection(EquivariantPolynomial numerator);

  const EquivariantPolynomial& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }

  /// The scalar fraction attached to one algebra basis element.
  Fraction coefficient(std::size_t basis_index) const;

  friend RationalSection operator*(const RationalSection& a, const RationalSection& b);
  friend RationalSection operator*(const EquivariantPolynomial& a, const RationalSection& b);
  RationalSection& operator+=(const RationalSection& o);

  /// Cross-multiplied equality.
  bool operator==(const RationalSection& o) const;

  Fraction integrate() const;

 private:
  EquivariantPolynomial num_;
  Denominator den_;
};

/// One normal line: weight (as a linear form) and first Chern class.
struct EulerLine {
  LinearForm weight;
  GradedAlgebra::Element chern;
};

struct EulerData {
  AlgebraPtr algebra;
  std::vector<EulerLine> lines;

  std::size_t nvars() const;
  EulerData pulled_back(const IntMatrix& u) const;
};

/// Raised when an Euler weight vanishes.
class SingularEulerError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// prod_i (<w_i, x> + c_i), expanded through the algebra table.
EquivariantPolynomial euler_product(const EulerData& euler, std::size_t nvars);

/// 1/e as prod_i sum_r (-c_i)^r / <w_i,x>^{r+1}, truncated by nilpotency.
RationalSection invert_euler(const EulerData& euler, std::size_t nvars);

}  // namespace eqloc
