#include "eqloc/graded_algebra.hpp"

#include <algorithm>
#include <set>

namespace eqloc {

GradedAlgebra::GradedAlgebra(std::vector<std::string> names, std::vector<int> degrees,
                             const std::vector<StructureConstant>& table,
                             std::vector<Rational> integral, int top_degree)
    : names_(std::move(names)),
      degrees_(std::move(degrees)),
      table_(names_.size() * names_.size()),
      integral_(std::move(integral)),
      top_degree_(top_degree) {
  std::size_t n = names_.size();
  if (n == 0) throw AlgebraError("algebra has an empty basis");
  if (degrees_.size() != n) throw AlgebraError("degrees list does not match basis size");
  if (integral_.size() != n) throw AlgebraError("integral list does not match basis size");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != n) throw AlgebraError("basis names must be distinct");
  for (const auto& e : table) {
    if (e.left >= n || e.right >= n || e.result >= n)
      throw AlgebraError("multiplication entry references basis index out of range");
    if (e.value == 0) continue;
    auto& row = table_[e.left * n + e.right];
    bool merged = false;
    for (auto& [k, v] : row)
      if (k == e.result) {
        v += e.value;
        merged = true;
      }
    if (!merged) row.emplace_back(e.result, e.value);
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  validate();
}

void GradedAlgebra::validate() const {
  std::size_t n = dim();
  auto nm = [&](std::size_t i) { return "'" + names_[i] + "'"; };
  if (degrees_[0] != 0) throw AlgebraError("basis element 0 must be the degree-0 unit");
  if (top_degree_ < 0 || top_degree_ % 2 != 0) throw AlgebraError("top degree must be even and non-negative");
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees_[i] < 0 || degrees_[i] % 2 != 0)
      throw AlgebraError("basis element " + nm(i) + " has odd or negative degree");
    if (degrees_[i] > top_degree_)
      throw AlgebraError("basis element " + nm(i) + " exceeds the top degree");
    if (i > 0 && degrees_[i] == 0)
      throw AlgebraError("only the unit may have degree 0 (element " + nm(i) + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    Element e = basis(i);
    if (multiply(unit(), e) != e || multiply(e, unit()) != e)
      throw AlgebraError("unit law fails for " + nm(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, v] : product(i, j))
        if (degrees_[k] != degrees_[i] + degrees_[j])
          throw AlgebraError("product " + nm(i) + "*" + nm(j) + " is not graded");
      if (multiply(basis(i), basis(j)) != multiply(basis(j), basis(i)))
        throw AlgebraError("commutativity fails for " + nm(i) + ", " + nm(j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element lhs = multiply(multiply(basis(i), basis(j)), basis(k));
        Element rhs = multiply(basis(i), multiply(basis(j), basis(k)));
        if (lhs != rhs)
          throw AlgebraError("associativity fails for (" + names_[i] + ", " + names_[j] + ", " +
                             names_[k] + ")");
      }
  for (std::size_t i = 0; i < n; ++i)
    if (integral_[i] != 0 && degrees_[i] != top_degree_)
      throw AlgebraError("integral is nonzero on " + nm(i) + " outside the top degree");
  for (std::size_t i = 1; i < n; ++i) {
    int idx = nilpotency_index(basis(i));
    if (idx == 0 || idx > top_degree_ / 2 + 1)
      throw AlgebraError("positive-degree element " + nm(i) + " is not nilpotent");
  }
}

GradedAlgebra GradedAlgebra::point() {
  return GradedAlgebra({"1"}, {0}, {{0, 0, 0, Rational(1)}}, {Rational(1)}, 0);
}

GradedAlgebra GradedAlgebra::projective(int k, const std::string& generator) {
  std::vector<std::string> names{"1"};
  std::vector<int> degrees{0};
  for (int i = 1; i <= k; ++i) {
    names.push_back(i == 1 ? generator : generator + "^" + std::to_string(i));
    degrees.push_back(2 * i);
  }
  std::vector<StructureConstant> table;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; i + j <= k; ++j)
      table.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                       static_cast<std::size_t>(i + j), Rational(1)});
  std::vector<Rational> integral(static_cast<std::size_t>(k + 1));
  integral.back() = 1;
  return GradedAlgebra(names, degrees, table, integral, 2 * k);
}

GradedAlgebra GradedAlgebra::tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
  std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<Rational> integral;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      std::string n;
      if (i == 0 && j == 0)
        n = "1";
      else if (i == 0)
        n = b.names_[j];
      else if (j == 0)
        n = a.names_[i];
      else
        n = a.names_[i] + "*" + b.names_[j];
      names.push_back(n);
      degrees.push_back(a.degrees_[i] + b.degrees_[j]);
      integral.push_back(a.integral_[i] * b.integral_[j]);
    }
  std::vector<StructureConstant> table;
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          for (const auto& [ka, va] : a.product(i1, i2))
            for (const auto& [kb, vb] : b.product(j1, j2))
              table.push_back({i1 * nb + j1, i2 * nb + j2, ka * nb + kb, va * vb});
  return GradedAlgebra(names, degrees, table, integral, a.top_degree_ + b.top_degree_);
}

std::vector<StructureConstant> GradedAlgebra::table_entries() const {
  std::vector<StructureConstant> out;
  std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : product(i, j)) out.push_back({i, j, k, v});
  return out;
}

GradedAlgebra::Element GradedAlgebra::unit() const { return basis(0); }

GradedAlgebra::Element GradedAlgebra::basis(std::size_t i) const {
  Element e(dim());
  e.at(i) = 1;
  return e;
}

GradedAlgebra::Element GradedAlgebra::multiply(const Element& a, const Element& b) const {
  std::size_t n = dim();
  Element r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      Rational ab = a[i] * b[j];
      for (const auto& [k, v] : product(i, j)) r[k] += ab * v;
    }
  }
  return r;
}

Rational GradedAlgebra::integrate(const Element& a) const {
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s += a[i] * integral_[i];
  return s;
}

bool GradedAlgebra::is_zero(const Element& a) const {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

int GradedAlgebra::nilpotency_index(const Element& a) const {
  Element p = a;
  for (int k = 1; k <= top_degree_ / 2 + 2; ++k) {
    if (is_zero(p)) return k;
    p = multiply(p, a);
  }
  return 0;
}

bool GradedAlgebra::is_homogeneous(const Element& a, int degree) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (a[i] != 0 && degrees_[i] != degree) return false;
  return true;
}

bool GradedAlgebra::operator==(const GradedAlgebra& o) const {
  return names_ == o.names_ && degrees_ == o.degrees_ && table_ == o.table_ &&
         integral_ == o.integral_ && top_degree_ == o.top_degree_;
}

AlgebraPtr make_algebra(GradedAlgebra algebra) {
  return std::make_shared<const GradedAlgebra>(std::move(algebra));
}

AlgebraPtr point_algebra() {
  static const AlgebraPtr instance = make_algebra(GradedAlgebra::point());
  return instance;
}

}  // namespace eqloc
