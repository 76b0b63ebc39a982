#include "eqloc/kernels.hpp"

#include <map>
#include <stdexcept>

namespace eqloc {

namespace {

Vector component_coordinates(const RestrictedClass& eta, std::size_t f) {
  Vector out;
  const auto& part = eta.at(f);
  const auto& alg = *part.algebra();
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    int rest = eta.degree() - alg.degree(b);
    if (rest < 0 || rest % 2) continue;
    for (const auto& e : monomials_of_degree(part.nvars(), rest / 2)) out.push_back(part.coefficient(b).coefficient(e));
  }
  return out;
}

void require_window(const DegreeTruncatedModel& model, int degree) {
  if (model.max_degree() < degree)
    throw std::invalid_argument("model window ends at degree " + std::to_string(model.max_degree()) +
                                " but degree " + std::to_string(degree) + " is needed");
}

std::string pretty_vector(const Vector& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(v[i]) + ")*" + labels[i];
  }
  return s.empty() ? "0" : s;
}

DegreeComparison compare(int degree, std::size_t slice, Subspace left, Subspace right,
                         const std::vector<std::string>& labels) {
  DegreeComparison c{degree, slice, std::move(left), std::move(right), false, ""};
  c.equal = c.left == c.right;
  if (!c.equal) {
    c.witness = subspace_witness(c.left, c.right, labels);
    if (c.witness.empty()) c.witness = subspace_witness(c.right, c.left, labels);
  }
  return c;
}

}  // namespace

std::string subspace_witness(const Subspace& a, const Subspace& b, const std::vector<std::string>& labels) {
  for (const auto& v : a.basis())
    if (!b.contains(v)) return pretty_vector(v, labels);
  return "";
}

std::vector<int> partition(const HamiltonianSpace& space, const CircleDirection& xi) {
  auto g = is_generic(space, xi);
  if (!g.generic) throw GenericityError("circle " + xi.to_string() + " is not generic: " + g.violations.front());
  std::vector<int> out;
  for (const auto& c : space.components()) {
    Rational d = 0;
    for (std::size_t i = 0; i < xi.xi.size(); ++i) d += c.moment[i] * xi.xi[i];
    out.push_back(sgn(d));
  }
  return out;
}

Subspace tw_subspace(const DegreeTruncatedModel& model, const CircleDirection& xi, Side side, int degree) {
  require_window(model, degree);
  auto signs = partition(model.space(), xi);
  const auto& basis = model.basis(degree);
  const std::size_t k = basis.size();
  int want = side == Side::Plus ? 1 : -1;
  Matrix rows;
  for (std::size_t f = 0; f < signs.size(); ++f) {
    if (signs[f] != want) continue;
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(component_coordinates(b, f));
    std::size_t len = cols.empty() ? 0 : cols[0].size();
    for (std::size_t r = 0; r < len; ++r) {
      Vector row(k);
      for (std::size_t i = 0; i < k; ++i) row[i] = cols[i][r];
      rows.push_back(std::move(row));
    }
  }
  return Subspace(nullspace(rows, k), k);
}

ResidueKernel residue_kernel_S(const DegreeTruncatedModel& model, const CircleDirection& xi, int degree) {
  const auto& space = model.space();
  require_window(model, std::max(degree, space.dim_m()));
  partition(space, xi);
  const auto& basis = model.basis(degree);
  const std::size_t k = basis.size();
  // Rows: for each test class and each monomial, the coefficient of that
  // monomial in kappa_S(b_i * zeta).
  auto rows_for = [&](int test_degree) {
    Matrix rows;
    std::size_t tests = 0;
    for (const auto& zeta : model.basis(test_degree)) {
      ++tests;
      std::vector<Polynomial> values;
      std::map<Exponents, std::size_t, MonomialOrder> monomials;
      for (const auto& b : basis) {
        values.push_back(kappa_S_integral(space, b * zeta, xi).value);
        for (const auto& [e, c] : values.back().terms()) monomials.emplace(e, 0);
      }
      for (const auto& [e, unused] : monomials) {
        Vector row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = values[i].coefficient(e);
        rows.push_back(std::move(row));
      }
    }
    return std::make_pair(rows, tests);
  };
  ResidueKernel out;
  Matrix rows;
  for (int t = 0; t <= space.dim_m() - 2; t += 2) {
    auto [r, n] = rows_for(t);
    rows.insert(rows.end(), r.begin(), r.end());
    out.tests += n;
  }
  out.kernel = Subspace(nullspace(rows, k), k);
  auto [extra, unused] = rows_for(space.dim_m());
  rows.insert(rows.end(), extra.begin(), extra.end());
  out.stable = Subspace(nullspace(rows, k), k) == out.kernel;
  return out;
}

Subspace kappa_T_kernel(const DegreeTruncatedModel& model, const Frame& frame, int degree) {
  const auto& space = model.space();
  int complementary = space.dim_m() - 2 * static_cast<int>(space.nvars()) - degree;
  require_window(model, std::max(degree, complementary));
  const auto& basis = model.basis(degree);
  const std::size_t k = basis.size();
  Matrix rows;
  for (const auto& zeta : model.basis(complementary)) {
    Vector row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = kappa_T_integral(space, basis[i] * zeta, frame);
    rows.push_back(std::move(row));
  }
  return Subspace(nullspace(rows, k), k);
}

SecondMainReport check_theorem_secondmain(const DegreeTruncatedModel& model, const CircleDirection& xi,
                                          int max_degree) {
  SecondMainReport report{xi, {}, true};
  for (int d = 0; d <= max_degree; d += 2) {
    const auto& labels = model.labels(d);
    auto minus = tw_subspace(model, xi, Side::Minus, d);
    auto plus = tw_subspace(model, xi, Side::Plus, d);
    auto kernel = residue_kernel_S(model, xi, d);
    SecondMainReport::Row row{compare(d, model.slice_dimension(d), kernel.kernel, minus + plus, labels), minus, plus,
                              false, kernel.stable};
    row.direct = minus.intersect(plus).dimension() == 0;
    report.pass = report.pass && row.comparison.equal && row.direct;
    report.rows.push_back(std::move(row));
  }
  return report;
}

FullKernelReport full_kernel(const DegreeTruncatedModel& model, const Frame& frame, int max_degree,
                             ChamberStrategy strategy, long box) {
  FullKernelReport report{frame, enumerate_generic_directions(model.space(), strategy, box), {}, {}, {}, true};
  report.warnings = report.chambers.warnings;
  for (int d = 0; d <= max_degree; d += 2) {
    const std::size_t k = model.slice_dimension(d);
    Subspace kt = kappa_T_kernel(model, frame, d);
    Subspace tw(k), res(k);
    for (const auto& xi : report.chambers.directions) {
      tw = tw + tw_subspace(model, xi, Side::Minus, d) + tw_subspace(model, xi, Side::Plus, d);
      res = res + residue_kernel_S(model, xi, d).kernel;
    }
    auto a = compare(d, k, kt, tw, model.labels(d));
    auto b = compare(d, k, kt, res, model.labels(d));
    if (!a.equal && !report.chambers.exact && kt.contains(tw))
      report.warnings.push_back("degree " + std::to_string(d) +
                                ": chamber sum is strictly smaller than ker kappa_T; the lattice search may be incomplete");
    report.pass = report.pass && a.equal && b.equal;
    report.tolman_weitsman.push_back(std::move(a));
    report.residue_sum.push_back(std::move(b));
  }
  return report;
}

AlphaPlusReport validate_alpha_plus(const HamiltonianSpace& space, std::size_t component,
                                    const RestrictedClass& candidate, const CircleDirection& xi) {
  auto g = is_generic(space, xi);
  if (!g.generic) throw GenericityError("circle " + xi.to_string() + " is not generic: " + g.violations.front());
  AlphaPlusReport report;
  auto f = [&](std::size_t i) {
    Rational d = 0;
    for (std::size_t j = 0; j < xi.xi.size(); ++j) d += space.components()[i].moment[j] * xi.xi[j];
    return d;
  };
  const auto& comp = space.components()[component];
  for (std::size_t i = 0; i < space.components().size(); ++i)
    if (f(i) > f(component) && !candidate.at(i).is_zero())
      report.failures.push_back("restriction to " + space.components()[i].name + " (above " + comp.name +
                                ") is not zero");
  EulerData positive{comp.algebra, {}};
  for (const auto& line : comp.normal_lines) {
    long d = 0;
    for (std::size_t j = 0; j < xi.xi.size(); ++j) d += line.weight[j] * xi.xi[j];
    if (d > 0) positive.lines.push_back({LinearForm::from_ints(line.weight), line.chern});
  }
  if (!(candidate.at(component) == euler_product(positive, space.nvars())))
    report.failures.push_back("restriction to " + comp.name + " is not the Euler class of the positive normal bundle");
  report.pass = report.failures.empty();
  return report;
}

}  // namespace eqloc
