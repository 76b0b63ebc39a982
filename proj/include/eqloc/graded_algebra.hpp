#pragma once

#include "eqloc/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqloc {

/// Raised when a multiplication table or integral violates the algebra axioms.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StructureConstant {
  std::size_t left, right, result;
  Rational value;
};

/// Finite-dimensional graded-commutative algebra over Q with even degrees,
/// presented by its multiplication table and an integration functional.
/// Basis element 0 is the unit.
class GradedAlgebra {
 public:
  using Element = std::vector<Rational>;

  /// Validates the table (unit, grading, commutativity, associativity,
  /// nilpotency, integral support) and throws AlgebraError naming the
  /// offending basis elements.
  GradedAlgebra(std::vector<std::string> names, std::vector<int> degrees,
                const std::vector<StructureConstant>& table, std::vector<Rational> integral,
                int top_degree);

  /// Cohomology of a point.
  static GradedAlgebra point();
  /// H*(CP^k) = Q[u]/(u^{k+1}) with the integral of u^k equal to 1.
  static GradedAlgebra projective(int k, const std::string& generator = "u");
  /// Tensor product (cohomology of a product); integral is the product.
  static GradedAlgebra tensor(const GradedAlgebra& a, const GradedAlgebra& b);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  int top_degree() const { return top_degree_; }
  const std::vector<Rational>& integral() const { return integral_; }

  /// Sparse row of structure constants for e_i * e_j.
  const std::vector<std::pair<std::size_t, Rational>>& product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  std::vector<StructureConstant> table_entries() const;

  Element zero() const { return Element(dim()); }
  Element unit() const;
  Element basis(std::size_t i) const;
  Element multiply(const Element& a, const Element& b) const;
  Rational integrate(const Element& a) const;
  bool is_zero(const Element& a) const;
  /// Smallest k with a^k = 0, or 0 when a is not nilpotent.
  int nilpotency_index(const Element& a) const;
  /// True when every nonzero coordinate of a sits in the given degree.
  bool is_homogeneous(const Element& a, int degree) const;

  bool operator==(const GradedAlgebra& o) const;

 private:
  void validate() const;

  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
  std::vector<Rational> integral_;
  int top_degree_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

AlgebraPtr make_algebra(GradedAlgebra algebra);
/// Shared instance of the point algebra.
AlgebraPtr point_algebra();

}  // namespace eqloc
