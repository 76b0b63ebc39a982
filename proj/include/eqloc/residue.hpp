#pragma once

#include "eqloc/equivariant.hpp"

#include <vector>

namespace eqloc {

/// Raised when an iterated residue meets a degenerate stage.
class NonGenericError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class ResidueMethod { PartialFractions, SeriesAtInfinity };

/// Residue of h at the pole `form` = 0 in the variable `var`, via
/// (1/(k-1)!) d^{k-1}/dx^{k-1} [(x - b)^k h] at x = b.
/// `form` must be a normalized denominator factor of h involving var.
Fraction residue_at_pole(const Fraction& h, std::size_t var, const LinearForm& form);

/// Location b of the pole of `form` in `var`, as a linear form free of var.
LinearForm pole_location(const LinearForm& form, std::size_t var);

/// Sum of residues over all finite poles in `var`, other variables held
/// as parameters. Both methods return equal fractions.
Fraction res_x_plus(const Fraction& h, std::size_t var,
                    ResidueMethod method = ResidueMethod::PartialFractions);

/// Coefficientwise on the algebra basis.
RationalSection res_x_plus(const RationalSection& h, std::size_t var,
                           ResidueMethod method = ResidueMethod::PartialFractions);

/// Guillemin-Kalkman residue in variable 0: expand 1/e in powers of 1/X,
/// multiply by alpha, take the X^{-1} coefficient and integrate over F.
/// Throws NonGenericError when some weight has zero X-coefficient.
Polynomial gk_residue(const EquivariantPolynomial& alpha, const EulerData& euler);

/// Variables in application order (first entry is applied first) and the
/// orientation scalar.
struct VariableOrdering {
  std::vector<std::size_t> order;
  Rational delta = 1;

  static VariableOrdering identity(std::size_t nvars);
  void validate(std::size_t nvars) const;
};

/// delta * Res+ over every variable in order. Throws NonGenericError when an
/// intermediate denominator degenerates.
Rational iterated_res(const Fraction& h, const VariableOrdering& ordering);

/// One summand of a localization sum: a rational function weighted by
/// exp(<lambda, x>).
struct WeightedTerm {
  Fraction value;
  std::vector<Rational> exponent;
};

/// Iterated residue with exponential selection: at each stage a term is
/// kept only when its exponent coefficient on the current variable is
/// positive, and each pole carries the exponent restricted to the pole.
/// Variables are processed 0, 1, ..., n-1. Throws NonGenericError when a
/// live term meets a zero exponent coefficient.
Rational selective_iterated_res(const std::vector<WeightedTerm>& terms);

}  // namespace eqloc
