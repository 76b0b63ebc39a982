#pragma once

#include "eqloc/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqloc {

/// Ordered variable names; position 0 is X, the rest are Y1..Ym.
class Variables {
 public:
  Variables() = default;
  explicit Variables(std::vector<std::string> names);
  static Variables standard(std::size_t count);

  std::size_t count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const Variables&) const = default;

 private:
  std::vector<std::string> names_;
};

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded-lexicographic, largest first, X compared first. Iterating a
/// Polynomial therefore yields its terms in canonical print order.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All exponent vectors of the given total degree, in MonomialOrder.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int degree);

class LinearForm;

/// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, MonomialOrder>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(Exponents e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// The zero polynomial is homogeneous of every degree.
  bool is_homogeneous(int degree) const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;

  /// result[i] is the coefficient of var^i, as a polynomial free of var.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

  /// Replaces variable `var` by `value` (which may involve any variable).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;

  /// Ring map x_j -> images[j]; all images share one variable count.
  Polynomial compose(const std::vector<Polynomial>& images) const;

  /// Exact quotient when `divisor` divides this polynomial.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  /// Synthetic division by a linear form; nullopt when a remainder is left.
  std::optional<Polynomial> divide_by_linear(const LinearForm& form) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// Homogeneous linear form sum_j c_j x_j.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  static LinearForm from_ints(const std::vector<long>& coeffs);
  static LinearForm coordinate(std::size_t nvars, std::size_t index);

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool involves(std::size_t var) const { return coeffs_[var] != 0; }

  Polynomial to_polynomial() const;

  /// (s, f) with *this == s * f, f primitive integral, first nonzero entry > 0.
  std::pair<Rational, LinearForm> normalized() const;

  /// The form obtained by setting x_var = value (value must not involve var).
  LinearForm substitute(std::size_t var, const LinearForm& value) const;

  /// Pulls back along x = U x': coefficient vector c becomes U^T c.
  LinearForm pulled_back(const std::vector<std::vector<long>>& u) const;

  LinearForm operator*(const Rational& c) const;
  LinearForm operator+(const LinearForm& o) const;

  bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_; }
  bool operator<(const LinearForm& o) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace eqloc
