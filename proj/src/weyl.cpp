#include "eqloc/weyl.hpp"

#include <algorithm>

namespace eqloc {

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  RationalMatrix c(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

WeylElement compose_elements(const WeylElement& v, const WeylElement& w) {
  WeylElement r;
  r.matrix = multiply(v.matrix, w.matrix);
  r.perm.resize(w.perm.size());
  r.algebra_maps.resize(w.perm.size());
  for (std::size_t f = 0; f < w.perm.size(); ++f) {
    r.perm[f] = v.perm[w.perm[f]];
    r.algebra_maps[f] = multiply(v.algebra_maps[w.perm[f]], w.algebra_maps[f]);
  }
  return r;
}

std::vector<Polynomial> images(const WeylElement& w, std::size_t n) {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = w.matrix[i][j];
    out.push_back(LinearForm(std::move(c)).to_polynomial());
  }
  return out;
}

EquivariantPolynomial act_on_restriction(const HamiltonianSpace& space, const WeylElement& w, std::size_t f,
                                         const EquivariantPolynomial& p) {
  return p.compose(images(w, space.nvars())).map_algebra(space.components()[w.perm[f]].algebra, w.algebra_maps[f]);
}

}  // namespace

Polynomial w_act(const WeylElement& w, const Polynomial& p) { return p.compose(images(w, p.nvars())); }

WeylData::WeylData(const HamiltonianSpace& space, std::vector<WeylElement> elements,
                   std::vector<std::vector<long>> positive_roots)
    : elements_(std::move(elements)), roots_(std::move(positive_roots)), d_(Polynomial::constant(space.nvars(), 1)) {
  const std::size_t n = space.nvars();
  const auto& comps = space.components();
  if (elements_.empty()) throw SymmetryError("Weyl group has no elements");
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const auto& w = elements_[e];
    std::string where = "Weyl element " + std::to_string(e);
    if (w.matrix.size() != n) throw SymmetryError(where + ": matrix has the wrong size");
    for (const auto& row : w.matrix)
      if (row.size() != n) throw SymmetryError(where + ": matrix has the wrong size");
    long det = determinant(w.matrix);
    if (det != 1 && det != -1) throw SymmetryError(where + ": determinant is not +-1");
    epsilon_.push_back(static_cast<int>(det));
    if (w.perm.size() != comps.size()) throw SymmetryError(where + ": permutation has the wrong length");
    std::vector<bool> hit(comps.size(), false);
    for (std::size_t f : w.perm) {
      if (f >= comps.size() || hit[f]) throw SymmetryError(where + ": perm is not a permutation of components");
      hit[f] = true;
    }
    if (w.algebra_maps.size() != comps.size()) throw SymmetryError(where + ": one algebra map per component required");
    for (std::size_t f = 0; f < comps.size(); ++f) {
      const auto& src = comps[f];
      const auto& dst = comps[w.perm[f]];
      std::string at = where + ", component " + src.name + " -> " + dst.name;
      const auto& map = w.algebra_maps[f];
      if (map.size() != dst.algebra->dim()) throw SymmetryError(at + ": algebra map has the wrong shape");
      for (const auto& row : map)
        if (row.size() != src.algebra->dim()) throw SymmetryError(at + ": algebra map has the wrong shape");
      if (src.dimension() != dst.dimension() || src.algebra->top_degree() != dst.algebra->top_degree())
        throw SymmetryError(at + ": dimensions differ");
      // moment: mu(wF) = M mu(F)
      for (std::size_t i = 0; i < n; ++i) {
        Rational m = 0;
        for (std::size_t j = 0; j < n; ++j) m += w.matrix[i][j] * src.moment[j];
        if (m != dst.moment[i]) throw SymmetryError(at + ": moment does not transform");
      }
      // ring map preserving unit and integral
      auto apply = [&](const GradedAlgebra::Element& a) {
        GradedAlgebra::Element r = dst.algebra->zero();
        for (std::size_t t = 0; t < r.size(); ++t)
          for (std::size_t s = 0; s < a.size(); ++s) r[t] += map[t][s] * a[s];
        return r;
      };
      if (apply(src.algebra->unit()) != dst.algebra->unit()) throw SymmetryError(at + ": algebra map does not preserve 1");
      for (std::size_t a = 0; a < src.algebra->dim(); ++a) {
        if (dst.algebra->integrate(apply(src.algebra->basis(a))) != src.algebra->integrate(src.algebra->basis(a)))
          throw SymmetryError(at + ": algebra map does not preserve the integral");
        for (std::size_t b = 0; b < src.algebra->dim(); ++b)
          if (apply(src.algebra->multiply(src.algebra->basis(a), src.algebra->basis(b))) !=
              dst.algebra->multiply(apply(src.algebra->basis(a)), apply(src.algebra->basis(b))))
            throw SymmetryError(at + ": algebra map is not multiplicative");
      }
      // normal data: w . e_F = e_{wF}
      if (!(act_on_restriction(space, w, f, src.euler_class(n)) == dst.euler_class(n)))
        throw SymmetryError(at + ": normal weights and Chern classes do not transform");
    }
  }
  // group structure
  bool found_identity = false;
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const auto& w = elements_[e];
    bool id = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) id = id && w.matrix[i][j] == (i == j ? 1 : 0);
    for (std::size_t f = 0; f < comps.size(); ++f) {
      id = id && w.perm[f] == f;
      for (std::size_t t = 0; t < w.algebra_maps[f].size(); ++t)
        for (std::size_t s = 0; s < w.algebra_maps[f][t].size(); ++s)
          id = id && w.algebra_maps[f][t][s] == (t == s ? 1 : 0);
    }
    if (id) {
      identity_ = e;
      found_identity = true;
      break;
    }
  }
  if (!found_identity) throw SymmetryError("Weyl group has no identity element");
  table_.assign(elements_.size(), std::vector<std::size_t>(elements_.size()));
  for (std::size_t v = 0; v < elements_.size(); ++v)
    for (std::size_t w = 0; w < elements_.size(); ++w) {
      WeylElement c = compose_elements(elements_[v], elements_[w]);
      auto it = std::find(elements_.begin(), elements_.end(), c);
      if (it == elements_.end())
        throw SymmetryError("Weyl group is not closed: " + std::to_string(v) + " * " + std::to_string(w));
      table_[v][w] = static_cast<std::size_t>(it - elements_.begin());
    }
  for (std::size_t a = 0; a < order(); ++a) {
    inverse(a);
    for (std::size_t b = 0; b < order(); ++b)
      for (std::size_t c = 0; c < order(); ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw SymmetryError("Weyl group is not associative");
  }
  for (const auto& r : roots_) {
    if (r.size() != n) throw SymmetryError("positive root has the wrong length");
    d_ *= LinearForm::from_ints(r).to_polynomial();
  }
  for (std::size_t e = 0; e < elements_.size(); ++e)
    if (!(w_act(elements_[e], d_) == d_ * Rational(epsilon_[e])))
      throw SymmetryError("D is not anti-invariant under Weyl element " + std::to_string(e));
}

std::size_t WeylData::inverse(std::size_t w) const {
  for (std::size_t v = 0; v < order(); ++v)
    if (table_[v][w] == identity_ && table_[w][v] == identity_) return v;
  throw SymmetryError("Weyl element " + std::to_string(w) + " has no inverse");
}

RestrictedClass w_act(const HamiltonianSpace& space, const WeylData& weyl, std::size_t w, const RestrictedClass& eta) {
  if (w >= weyl.order()) throw SymmetryError("element outside the stored Weyl group");
  const auto& el = weyl.element(w);
  std::vector<EquivariantPolynomial> parts;
  for (const auto& c : space.components()) parts.emplace_back(c.algebra, space.nvars());
  for (std::size_t f = 0; f < eta.size(); ++f) parts[el.perm[f]] = act_on_restriction(space, el, f, eta.at(f));
  return RestrictedClass(std::move(parts), eta.degree());
}

RestrictedClass symmetrize(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta) {
  RestrictedClass sum = space.zero(eta.degree());
  for (std::size_t w = 0; w < weyl.order(); ++w) sum += w_act(space, weyl, w, eta);
  return sum;
}

RestrictedClass antisymmetrize(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta) {
  RestrictedClass sum = space.zero(eta.degree());
  for (std::size_t w = 0; w < weyl.order(); ++w) sum += w_act(space, weyl, w, eta) * Rational(weyl.epsilon(w));
  return sum;
}

bool is_invariant(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta) {
  for (std::size_t w = 0; w < weyl.order(); ++w)
    if (!(w_act(space, weyl, w, eta) == eta)) return false;
  return true;
}

bool is_anti_invariant(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta) {
  for (std::size_t w = 0; w < weyl.order(); ++w)
    if (!(w_act(space, weyl, w, eta) == eta * Rational(weyl.epsilon(w)))) return false;
  return true;
}

RestrictedClass brion_divide(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& xi) {
  if (!is_anti_invariant(space, weyl, xi)) throw SymmetryError("class is not anti-invariant");
  if (xi.is_zero()) return space.zero(std::max(0, xi.degree() - weyl.d_degree()));
  std::vector<EquivariantPolynomial> parts;
  for (std::size_t f = 0; f < xi.size(); ++f) {
    EquivariantPolynomial p = xi.at(f);
    for (const auto& root : weyl.positive_roots()) {
      Polynomial form = LinearForm::from_ints(root).to_polynomial();
      auto q = p.divide_exact(form);
      if (!q) throw SymmetryError("restriction to " + space.components()[f].name + " is not divisible by D");
      p = std::move(*q);
    }
    parts.push_back(std::move(p));
  }
  RestrictedClass eta(std::move(parts), xi.degree() - weyl.d_degree());
  if (!is_invariant(space, weyl, eta)) throw SymmetryError("quotient by D is not W-invariant");
  return eta;
}

Rational kappa_K_integral(const HamiltonianSpace& space, const WeylData& weyl, const RestrictedClass& eta,
                          const Frame& frame) {
  if (!is_invariant(space, weyl, eta)) throw SymmetryError("class is not W-invariant");
  const Polynomial& d = weyl.D();
  return kappa_T_integral(space, eta.times(d * d, 2 * weyl.d_degree()), frame);
}

}  // namespace eqloc

namespace eqloc {

std::optional<Vector> InvariantSlice::coordinates(const Vector& model_coordinates) const {
  if (basis.empty()) {
    for (const auto& x : model_coordinates)
      if (x != 0) return std::nullopt;
    return Vector{};
  }
  Matrix m(model_coordinates.size(), Vector(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t r = 0; r < model_coordinates.size(); ++r) m[r][i] = basis[i][r];
  return solve(m, model_coordinates, basis.size());
}

InvariantSlice invariant_slice(const DegreeTruncatedModel& model, const WeylData& weyl, int degree) {
  const auto& space = model.space();
  InvariantSlice out{degree, {}, {}};
  Matrix images;
  for (const auto& b : model.basis(degree)) {
    auto coords = model.express(symmetrize(space, weyl, b));
    if (!coords) throw SymmetryError("the model is not closed under the Weyl action in degree " + std::to_string(degree));
    images.push_back(*coords);
  }
  out.basis = Subspace(images, model.slice_dimension(degree)).basis();
  for (const auto& v : out.basis) out.classes.push_back(model.combination(degree, v));
  return out;
}

namespace {

// Null space over `etas` of the rows (integral(p * eta_i * zeta))_i.
Subspace pairing_kernel(const HamiltonianSpace& space, const Frame& frame, const std::vector<RestrictedClass>& etas,
                        const Polynomial& p, int p_degree, const std::vector<RestrictedClass>& zetas) {
  const std::size_t k = etas.size();
  Matrix rows;
  for (const auto& zeta : zetas) {
    Vector row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = kappa_T_integral(space, etas[i].times(p, p_degree) * zeta, frame);
    rows.push_back(std::move(row));
  }
  return Subspace(nullspace(rows, k), k);
}

std::string first_difference(const Subspace& a, const Subspace& b, const InvariantSlice& slice,
                             const std::vector<std::string>& labels) {
  auto lift = [&](const Vector& v) {
    Vector m(labels.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[j] += v[i] * slice.basis[i][j];
    return m;
  };
  for (const auto& v : a.basis())
    if (!b.contains(v)) return subspace_witness(Subspace({lift(v)}, labels.size()), Subspace(labels.size()), labels);
  return "";
}

}  // namespace

NonabelianReport check_theorem_nonabelian(const DegreeTruncatedModel& model, const WeylData& weyl,
                                          const Frame& frame, int max_degree) {
  const auto& space = model.space();
  const int top = space.dim_m() - 2 * static_cast<int>(space.nvars());
  const int dd = weyl.d_degree();
  if (model.max_degree() < std::max(max_degree + 2 * dd, space.dim_m()) && model.max_degree() < std::max(max_degree, top))
    throw std::invalid_argument("model window too small for the nonabelian check");
  const Polynomial& d = weyl.D();
  const Polynomial d2 = d * d;
  NonabelianReport report;
  for (int deg = 0; deg <= max_degree; deg += 2) {
    InvariantSlice slice = invariant_slice(model, weyl, deg);
    NonabelianRow row;
    row.degree = deg;
    row.invariant_dimension = slice.classes.size();
    InvariantSlice tests = invariant_slice(model, weyl, top - 2 * dd - deg);
    row.kappa_K_kernel = pairing_kernel(space, frame, slice.classes, d2, 2 * dd, tests.classes);
    row.d_pullback = pairing_kernel(space, frame, slice.classes, d, dd, model.basis(top - dd - deg));
    row.d2_pullback = pairing_kernel(space, frame, slice.classes, d2, 2 * dd, model.basis(top - 2 * dd - deg));
    row.equal = row.kappa_K_kernel == row.d_pullback && row.d_pullback == row.d2_pullback;
    if (!row.equal) {
      const auto& labels = model.labels(deg);
      row.witness = first_difference(row.kappa_K_kernel, row.d_pullback, slice, labels);
      if (row.witness.empty()) row.witness = first_difference(row.d_pullback, row.kappa_K_kernel, slice, labels);
      if (row.witness.empty()) row.witness = first_difference(row.d2_pullback, row.d_pullback, slice, labels);
      if (row.witness.empty()) row.witness = first_difference(row.d_pullback, row.d2_pullback, slice, labels);
    }
    report.pass = report.pass && row.equal;
    report.rows.push_back(std::move(row));
  }
  return report;
}

FirstCharReport firstchar_kernel(const DegreeTruncatedModel& model, const WeylData& weyl, const Frame& frame,
                                 int max_degree) {
  const auto& space = model.space();
  const int top = space.dim_m() - 2 * static_cast<int>(space.nvars());
  const int dd = weyl.d_degree();
  const Polynomial d2 = weyl.D() * weyl.D();
  FirstCharReport report;
  for (int deg = 0; deg <= max_degree; deg += 2) {
    InvariantSlice slice = invariant_slice(model, weyl, deg);
    FirstCharRow row;
    row.degree = deg;
    Subspace kt = kappa_T_kernel(model, frame, deg + dd);
    row.kernel_T_dimension = kt.dimension();
    Matrix image;
    for (const auto& v : kt.basis()) {
      RestrictedClass eta = model.combination(deg + dd, v);
      RestrictedClass q = brion_divide(space, weyl, antisymmetrize(space, weyl, eta));
      if (q.is_zero()) continue;
      auto coords = model.express(q);
      if (!coords) throw SymmetryError("Brion quotient is outside the model window");
      auto inv = slice.coordinates(*coords);
      if (!inv) throw SymmetryError("Brion quotient is not W-invariant");
      image.push_back(*inv);
    }
    row.image = Subspace(image, slice.classes.size());
    InvariantSlice tests = invariant_slice(model, weyl, top - 2 * dd - deg);
    row.kappa_K_kernel = pairing_kernel(space, frame, slice.classes, d2, 2 * dd, tests.classes);
    row.equal = row.image == row.kappa_K_kernel;
    if (!row.equal) {
      row.witness = first_difference(row.image, row.kappa_K_kernel, slice, model.labels(deg));
      if (row.witness.empty()) row.witness = first_difference(row.kappa_K_kernel, row.image, slice, model.labels(deg));
    }
    report.pass = report.pass && row.equal;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace eqloc
