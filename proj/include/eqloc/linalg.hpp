#pragma once

#include "eqloc/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace eqloc {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form with zero rows removed; pivots[i] is the pivot
/// column of row i.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m, std::size_t ncols);
std::size_t rank(const Matrix& m, std::size_t ncols);

/// Basis (as rows) of {x : m x = 0}, in the canonical order of free columns.
Matrix nullspace(const Matrix& m, std::size_t ncols);

/// A subspace of Q^dim held by its reduced echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t dim = 0) : dim_(dim) {}
  Subspace(const Matrix& spanning_rows, std::size_t dim);
  static Subspace full(std::size_t dim);

  std::size_t ambient() const { return dim_; }
  std::size_t dimension() const { return basis_.size(); }
  const Matrix& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return dim_ == o.dim_ && basis_ == o.basis_; }

 private:
  std::size_t dim_;
  Matrix basis_;
};

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t ncols);

}  // namespace eqloc
