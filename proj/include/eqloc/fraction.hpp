#pragma once

#include "eqloc/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqloc {

/// Multiset of nonzero linear forms, kept factored. Forms are stored in
/// normalized (primitive, leading coefficient positive) shape so that
/// proportional factors merge into one pole.
class Denominator {
 public:
  using Factors = std::map<LinearForm, int>;

  explicit Denominator(std::size_t nvars = 0) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const Factors& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int multiplicity(const LinearForm& normalized_form) const;
  int total_degree() const;
  /// Sum of multiplicities of forms that involve var.
  int degree_in(std::size_t var) const;

  /// Multiplies in form^k; returns s^k where form = s * normalized(form), so
  /// the caller must divide its numerator by the returned factor.
  Rational insert(const LinearForm& form, int multiplicity = 1);
  void insert_normalized(const LinearForm& form, int multiplicity);
  void remove_one(const LinearForm& normalized_form);

  Polynomial expand() const;
  /// Product of the forms in *this with multiplicity exceeding `other`'s.
  Polynomial cofactor_against(const Denominator& lcm) const;
  static Denominator lcm(const Denominator& a, const Denominator& b);
  Denominator operator*(const Denominator& o) const;

  bool operator==(const Denominator& o) const = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  Factors factors_;
};

/// p / prod(l_i^k_i) with p a rational polynomial: the scalar shape that
/// residues operate on. Representations need not be reduced.
class Fraction {
 public:
  explicit Fraction(std::size_t nvars = 0) : num_(nvars), den_(nvars) {}
  explicit Fraction(Polynomial numerator)
      : num_(std::move(numerator)), den_(num_.nvars()) {}
  Fraction(Polynomial numerator, Denominator denominator);
  /// Factors need not be normalized.
  Fraction(Polynomial numerator, const std::vector<std::pair<LinearForm, int>>& factors);

  std::size_t nvars() const { return num_.nvars(); }
  const Polynomial& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator*(Fraction a, const Rational& c);
  Fraction operator-() const;

  /// Equality after cross-multiplication.
  bool operator==(const Fraction& o) const;

  /// Cancels every denominator form that divides the numerator; the result
  /// is in lowest terms.
  Fraction reduced() const;
  /// The polynomial value when the reduced denominator is empty.
  std::optional<Polynomial> as_polynomial() const;

  bool depends_on(std::size_t var) const;

  Fraction derivative(std::size_t var) const;
  /// Sets x_var = value; throws std::domain_error if a denominator factor
  /// vanishes identically.
  Fraction substitute(std::size_t var, const LinearForm& value) const;
  /// Pulls back along x = U x'.
  Fraction pulled_back(const std::vector<std::vector<long>>& u) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  Polynomial num_;
  Denominator den_;
};

/// Polynomial obtained from the linear-change x = U x'.
Polynomial pull_back(const Polynomial& p, const std::vector<std::vector<long>>& u);

}  // namespace eqloc
