#pragma once

#include "eqloc/linalg.hpp"
#include "eqloc/space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqloc {

/// Finite window into the equivariant cohomology: for each even degree up
/// to max_degree, an independent list of classes spanning all products
/// (monomial in the torus variables) * (product of generators) of that
/// degree. Candidates are taken in a fixed order and kept greedily.
class DegreeTruncatedModel {
 public:
  DegreeTruncatedModel(HamiltonianSpace space, int max_degree);

  const HamiltonianSpace& space() const { return space_; }
  int max_degree() const { return max_degree_; }

  /// Empty for odd or out-of-range degrees.
  const std::vector<RestrictedClass>& basis(int degree) const;
  const std::vector<std::string>& labels(int degree) const;
  std::size_t slice_dimension(int degree) const { return basis(degree).size(); }

  RestrictedClass combination(int degree, const Vector& coefficients) const;
  /// Coordinates of eta in basis(eta.degree()), or nullopt if eta is not in
  /// the span.
  std::optional<Vector> express(const RestrictedClass& eta) const;

 private:
  struct Slice {
    std::vector<RestrictedClass> classes;
    std::vector<std::string> labels;
    Matrix coordinates;  // flattened restriction coordinates per basis element
  };
  const Slice& slice(int degree) const;

  HamiltonianSpace space_;
  int max_degree_;
  std::vector<Slice> slices_;  // indexed by degree / 2
};

}  // namespace eqloc
