#pragma once

#include "eqloc/kernels.hpp"

#include <string>
#include <vector>

namespace eqloc {

/// Weyl data inconsistent with the space, or a class lacking the required
/// symmetry.
class SymmetryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// w acts on torus variables by x_j -> sum_i matrix[i][j] x_i, sends
/// component F to perm[F], and maps H*(F) to H*(perm[F]) by
/// algebra_maps[F] (rows indexed by the target basis).
struct WeylElement {
  IntMatrix matrix;
  std::vector<std::size_t> perm;
  std::vector<RationalMatrix> algebra_maps;

  bool operator==(const WeylElement&) const = default;
};

class WeylData {
 public:
  /// Validates group axioms, compatibility with the space and
  /// anti-invariance of D; throws SymmetryError.
  WeylData(const HamiltonianSpace& space, std::vector<WeylElement> elements,
           std::vector<std::vector<long>> positive_roots);

  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::size_t w) const { return elements_.at(w); }
  std::size_t identity() const { return identity_; }
  /// Index of v * w (apply w first).
  std::size_t compose(std::size_t v, std::size_t w) const { return table_[v][w]; }
  std::size_t inverse(std::size_t w) const;
  int epsilon(std::size_t w) const { return epsilon_[w]; }
  const std::vector<std::vector<long>>& positive_roots() const { return roots_; }
  /// Product of the positive roots.
  const Polynomial& D() const { return d_; }
  int d_degree() const { return 2 * static_cast<int>(roots_.size()); }

 private:
  std::vector<WeylElement> elements_;
  std::vector<std::vector<long>> roots_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<int> epsilon_;
  std::size_t identity_ = 0;
  Polynomial d_;
};

/// Pure polynomial transformed by w.
Polynomial w_act(const WeylElement& w, const Polynomial& p);
RestrictedClass w_act(const HamiltonianSpace& space, const WeylData& weyl, std::size_t w, const RestrictedClass& eta);

RestrictedClass symmetrize(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta);
RestrictedClass antisymmetrize(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta);
bool is_invariant(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta);
bool is_anti_invariant(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta);

/// eta with D * eta = xi, by successive exact division by the positive
/// roots; throws SymmetryError if xi is not anti-invariant or a division
/// leaves a remainder.
RestrictedClass brion_divide(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& xi);

/// kappa_T of D^2 * eta; eta must be W-invariant.
Rational kappa_K_integral(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta,
                          const Frame& frame);

/// W-invariant part of a model slice: the image of symmetrize, as
/// echelon rows over model.basis(degree).
struct InvariantSlice {
  int degree = 0;
  Matrix basis;
  std::vector<RestrictedClass> classes;

  /// Coordinates over `basis` of a vector of model coordinates, or nullopt
  /// when it is not invariant.
  std::optional<Vector> coordinates(const Vector& model_coordinates) const;
};

InvariantSlice invariant_slice(const DegreeTruncatedModel& model, const WeylData& weyl, int degree);

/// Per degree, three subspaces of the invariant slice (coordinates over
/// InvariantSlice::basis): the kappa_K pairing kernel against invariant
/// classes, {eta : D eta in ker kappa_T} and {eta : D^2 eta in ker kappa_T}.
struct NonabelianRow {
  int degree = 0;
  std::size_t invariant_dimension = 0;
  Subspace kappa_K_kernel, d_pullback, d2_pullback;
  bool equal = false;
  std::string witness;
};

struct NonabelianReport {
  std::vector<NonabelianRow> rows;
  bool pass = true;
};

/// Needs model.max_degree() >= max(max_degree + 2 * deg D, dim_M).
NonabelianReport check_theorem_nonabelian(const DegreeTruncatedModel& model, const WeylData& weyl,
                                          const Frame& frame, int max_degree);

/// Span of brion_divide(antisymmetrize(eta)) over a basis of ker kappa_T in
/// degree d + deg D, compared with the kappa_K kernel in degree d.
struct FirstCharRow {
  int degree = 0;
  std::size_t kernel_T_dimension = 0;
  Subspace image, kappa_K_kernel;
  bool equal = false;
  std::string witness;
};

struct FirstCharReport {
  std::vector<FirstCharRow> rows;
  bool pass = true;
};

FirstCharReport firstchar_kernel(const DegreeTruncatedModel& model, const WeylData& weyl, const Frame& frame,
                                 int max_degree);

}  // namespace eqloc
