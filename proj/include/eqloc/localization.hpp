#pragma once

#include "eqloc/residue.hpp"
#include "eqloc/space.hpp"

#include <functional>
#include <string>
#include <vector>

namespace eqloc {

/// xi is not generic for the space.
class GenericityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The data does not describe genuine classes (a localized integral that
/// should be polynomial is not).
class DataInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenericityReport {
  bool generic = true;
  /// One entry per violation, e.g. "component N: <mu, xi> = 0".
  std::vector<std::string> violations;
};

GenericityReport is_generic(const HamiltonianSpace& space, const CircleDirection& xi);

/// sum_F int_F eta|_F / e_F over a common denominator.
struct AbbvResult {
  Fraction sum;
  bool polynomial = false;
  Polynomial value;
};

AbbvResult abbv_sum(const HamiltonianSpace& space, const RestrictedClass& eta);

/// int_F eta|_F / e_F as a scalar fraction.
Fraction localized_integrand(const HamiltonianSpace& space, std::size_t component, const RestrictedClass& eta);

/// Unimodular integer matrix whose first column is the primitive vector v.
/// adapted_basis(-v) is adapted_basis(v) with its first column negated.
IntMatrix adapted_basis(const std::vector<long>& v);

long determinant(const IntMatrix& u);

struct KappaSResult {
  /// Polynomial in the adapted coordinates x' = U^{-1} x; the X' entry
  /// never occurs.
  Polynomial value;
  IntMatrix basis;
};

/// det(U) * sum over <mu(F), xi> > 0 of Res^+ in X' of the localized
/// integrand, in coordinates x = U x' with U e_0 = xi.
KappaSResult kappa_S_integral(const HamiltonianSpace& space, const RestrictedClass& eta, const CircleDirection& xi);

/// Coordinates x = U x' for an iterated residue taken over x'_0, x'_1, ...
/// in turn, and an orientation scalar.
struct Frame {
  IntMatrix basis;
  Rational delta = 1;

  static Frame identity(std::size_t n);
  /// Permutation frame: ordering.order[i] is the i-th variable applied.
  static Frame from_ordering(const VariableOrdering& ordering);
  std::string to_string() const;
};

/// Checks that the first direction is a generic circle and that every stage
/// of the iterated residue sees nonzero exponent coefficients; the check
/// depends only on moments and weights.
GenericityReport frame_is_generic(const HamiltonianSpace& space, const Frame& frame);

/// First generic frame in a fixed search order: the first column runs over
/// small generic directions, later columns over unimodular completions.
Frame suggest_frame(const HamiltonianSpace& space);

/// delta * iterated residue of sum_F e^{<mu(F), x>} int_F eta/e_F, each
/// stage keeping the terms whose exponent is positive on that variable.
/// Zero unless deg eta = dim_M - 2 * rank. Throws GenericityError when the
/// first direction is not generic and NonGenericError on a degenerate stage.
Rational kappa_T_integral(const HamiltonianSpace& space, const RestrictedClass& eta, const Frame& frame);

using ScalarIntegral = std::function<Rational(const RestrictedClass&)>;

/// M[i][j] = integral(basis_i * basis_j).
RationalMatrix pairing_matrix(const std::vector<RestrictedClass>& basis, const ScalarIntegral& integral);

}  // namespace eqloc
