#include "eqloc/model.hpp"

#include <stdexcept>

namespace eqloc {

namespace {

struct Product {
  RestrictedClass value;
  std::string label;
  std::size_t last;
};

std::string monomial_label(const Exponents& e, const Variables& vars) {
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (!e[j]) continue;
    if (!s.empty()) s += "*";
    s += vars[j];
    if (e[j] > 1) s += "^" + std::to_string(e[j]);
  }
  return s;
}

}  // namespace

DegreeTruncatedModel::DegreeTruncatedModel(HamiltonianSpace space, int max_degree)
    : space_(std::move(space)), max_degree_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
  const std::size_t n = space_.nvars();
  // generator products by degree, each multiset once
  std::vector<std::vector<Product>> products(static_cast<std::size_t>(max_degree / 2 + 1));
  std::vector<Product> frontier = {{space_.unit(), "", 0}};
  products[0].push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<Product> next;
    for (const auto& p : frontier)
      for (std::size_t g = p.last; g < space_.generators().size(); ++g) {
        const auto& gen = space_.generators()[g];
        if (gen.degree <= 0 || p.value.degree() + gen.degree > max_degree) continue;
        Product q{p.value * gen.value, p.label.empty() ? gen.name : p.label + "*" + gen.name, g};
        products[static_cast<std::size_t>(q.value.degree() / 2)].push_back(q);
        next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  for (int d = 0; d <= max_degree; d += 2) {
    Slice s;
    Echelon echelon;
    std::size_t width = 0;
    for (int pd = 0; pd <= d; pd += 2) {
      for (const auto& p : products[static_cast<std::size_t>(pd / 2)]) {
        for (const auto& e : monomials_of_degree(n, (d - pd) / 2)) {
          RestrictedClass c = p.value.times(Polynomial::monomial(e), d - pd);
          Vector coords = c.coordinates();
          width = coords.size();
          Matrix trial = echelon.rows;
          trial.push_back(coords);
          Echelon grown = rref(std::move(trial), width);
          if (grown.pivots.size() == echelon.pivots.size()) continue;
          echelon = std::move(grown);
          std::string mono = monomial_label(e, space_.variables());
          std::string label = mono.empty() ? (p.label.empty() ? "1" : p.label)
                                           : (p.label.empty() ? mono : mono + "*" + p.label);
          s.labels.push_back(label);
          s.coordinates.push_back(std::move(coords));
          s.classes.push_back(std::move(c));
        }
      }
    }
    slices_.push_back(std::move(s));
  }
}

const DegreeTruncatedModel::Slice& DegreeTruncatedModel::slice(int degree) const {
  static const Slice empty;
  if (degree < 0 || degree % 2 || degree > max_degree_) return empty;
  return slices_[static_cast<std::size_t>(degree / 2)];
}

const std::vector<RestrictedClass>& DegreeTruncatedModel::basis(int degree) const { return slice(degree).classes; }

const std::vector<std::string>& DegreeTruncatedModel::labels(int degree) const { return slice(degree).labels; }

RestrictedClass DegreeTruncatedModel::combination(int degree, const Vector& coefficients) const {
  const auto& b = basis(degree);
  if (coefficients.size() != b.size()) throw std::invalid_argument("coefficient vector has the wrong length");
  RestrictedClass sum = space_.zero(degree);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (coefficients[i] != 0) sum += b[i] * coefficients[i];
  return sum;
}

std::optional<Vector> DegreeTruncatedModel::express(const RestrictedClass& eta) const {
  const Slice& s = slice(eta.degree());
  if (eta.degree() > max_degree_) throw std::out_of_range("class degree exceeds the model window");
  Vector target = eta.coordinates();
  std::size_t k = s.classes.size();
  if (k == 0) {
    for (const auto& x : target)
      if (x != 0) return std::nullopt;
    return Vector{};
  }
  Matrix m(target.size(), Vector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < target.size(); ++r) m[r][i] = s.coordinates[i][r];
  return solve(m, target, k);
}

}  // namespace eqloc
