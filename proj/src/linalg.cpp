#include "eqloc/linalg.hpp"

#include <stdexcept>

namespace eqloc {

Echelon rref(Matrix m, std::size_t ncols) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (std::size_t k = col; k < ncols; ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = col; k < ncols; ++k)
        if (m[row][k] != 0) m[r][k] -= f * m[row][k];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }

Matrix nullspace(const Matrix& m, std::size_t ncols) {
  Echelon e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Matrix out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(ncols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(const Matrix& spanning_rows, std::size_t dim) : dim_(dim) {
  for (const auto& r : spanning_rows)
    if (r.size() != dim) throw std::invalid_argument("subspace vector has the wrong length");
  basis_ = rref(spanning_rows, dim).rows;
}

Subspace Subspace::full(std::size_t dim) {
  Matrix id(dim, Vector(dim));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
  return Subspace(id, dim);
}

bool Subspace::contains(const Vector& v) const {
  Matrix m = basis_;
  m.push_back(v);
  return rank(m, dim_) == basis_.size();
}

bool Subspace::contains(const Subspace& o) const {
  if (o.dim_ != dim_) return false;
  Matrix m = basis_;
  m.insert(m.end(), o.basis_.begin(), o.basis_.end());
  return rank(m, dim_) == basis_.size();
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("subspaces of different ambient spaces");
  Matrix m = basis_;
  m.insert(m.end(), o.basis_.begin(), o.basis_.end());
  return Subspace(m, dim_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("subspaces of different ambient spaces");
  // sum a_i u_i = sum b_j v_j: null space of [U^T | -V^T]
  std::size_t p = basis_.size(), q = o.basis_.size();
  Matrix sys(dim_, Vector(p + q));
  for (std::size_t k = 0; k < dim_; ++k) {
    for (std::size_t i = 0; i < p; ++i) sys[k][i] = basis_[i][k];
    for (std::size_t j = 0; j < q; ++j) sys[k][p + j] = -o.basis_[j][k];
  }
  Matrix vecs;
  for (const auto& c : nullspace(sys, p + q)) {
    Vector v(dim_);
    for (std::size_t i = 0; i < p; ++i)
      if (c[i] != 0)
        for (std::size_t k = 0; k < dim_; ++k) v[k] += c[i] * basis_[i][k];
    vecs.push_back(std::move(v));
  }
  return Subspace(vecs, dim_);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t ncols) {
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(aug, ncols + 1);
  Vector x(ncols);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == ncols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][ncols];
  }
  return x;
}

}  // namespace eqloc
