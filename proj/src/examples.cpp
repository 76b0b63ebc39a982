#include "eqloc/examples.hpp"

#include "eqloc/expression.hpp"

#include <stdexcept>

namespace eqloc {

namespace {

FixedComponent point(std::string name, std::vector<Rational> moment, std::vector<std::vector<long>> weights) {
  FixedComponent c{std::move(name), std::move(moment), point_algebra(), {}};
  for (auto& w : weights) c.normal_lines.push_back({std::move(w), {0}});
  return c;
}

// parts[f][b]: restriction to component f, coefficient of basis element b.
Generator generator(const std::string& name, int degree, const Variables& vars,
                    const std::vector<FixedComponent>& comps, const std::vector<std::vector<std::string>>& parts) {
  std::vector<EquivariantPolynomial> r;
  for (std::size_t f = 0; f < comps.size(); ++f) {
    EquivariantPolynomial p(comps[f].algebra, vars.count());
    for (std::size_t b = 0; b < parts[f].size(); ++b) p.add(b, parse_polynomial(parts[f][b], vars));
    r.push_back(std::move(p));
  }
  return {name, degree, RestrictedClass(std::move(r), degree)};
}

Generator unit(const Variables& vars, const std::vector<FixedComponent>& comps) {
  return generator("1", 0, vars, comps, std::vector<std::vector<std::string>>(comps.size(), {"1"}));
}

// Moments are written so that near F the moment map is mu(F) + sum w_i |z_i|^2.

Dataset s2() {
  Variables v = Variables::standard(1);
  std::vector<FixedComponent> comps = {point("N", {1}, {{-1}}), point("S", {-1}, {{1}})};
  std::vector<Generator> gens = {unit(v, comps), generator("tau", 2, v, comps, {{"0"}, {"X"}})};
  return {"s2", HamiltonianSpace(v, 2, comps, gens), std::nullopt};
}

Dataset s2xs2_t2() {
  Variables v = Variables::standard(2);
  std::vector<FixedComponent> comps;
  std::vector<std::vector<std::string>> tau1, tau2;
  for (long s1 : {1, -1})
    for (long s2 : {1, -1}) {
      std::string name = std::string(s1 > 0 ? "N" : "S") + (s2 > 0 ? "N" : "S");
      comps.push_back(point(name, {s1, s2}, {{-s1, 0}, {0, -s2}}));
      tau1.push_back({s1 < 0 ? "X" : "0"});
      tau2.push_back({s2 < 0 ? "Y1" : "0"});
    }
  std::vector<Generator> gens = {unit(v, comps), generator("tau1", 2, v, comps, tau1),
                                 generator("tau2", 2, v, comps, tau2)};
  return {"s2xs2-t2", HamiltonianSpace(v, 4, comps, gens), std::nullopt};
}

Dataset s2xs2_nonisolated() {
  // The circle rotates the first factor; the fixed set is {N} x S^2 and {S} x S^2.
  Variables v = Variables::standard(1);
  AlgebraPtr sphere = make_algebra(GradedAlgebra::projective(1));
  std::vector<FixedComponent> comps = {{"N", {1}, sphere, {{{-1}, {0, 0}}}},
                                       {"S", {-1}, sphere, {{{1}, {0, 0}}}}};
  std::vector<Generator> gens = {unit(v, comps), generator("tau", 2, v, comps, {{"0"}, {"X"}}),
                                 generator("v", 2, v, comps, {{"0", "1"}, {"0", "1"}})};
  return {"s2xs2-nonisolated", HamiltonianSpace(v, 4, comps, gens), std::nullopt};
}

Dataset s2cubed_su2() {
  // Maximal torus of SU(2) acting diagonally on three spheres.
  Variables v = Variables::standard(1);
  std::vector<FixedComponent> comps;
  std::vector<std::vector<std::vector<std::string>>> taus(3);
  std::vector<std::vector<long>> signs;
  for (long a : {1, -1})
    for (long b : {1, -1})
      for (long c : {1, -1}) {
        std::vector<long> s = {a, b, c};
        std::string name;
        for (long x : s) name += x > 0 ? "N" : "S";
        comps.push_back(point(name, {a + b + c}, {{-a}, {-b}, {-c}}));
        for (int i = 0; i < 3; ++i) taus[i].push_back({s[i] < 0 ? "X" : "0"});
        signs.push_back(s);
      }
  std::vector<Generator> gens = {unit(v, comps)};
  for (int i = 0; i < 3; ++i) gens.push_back(generator("tau" + std::to_string(i + 1), 2, v, comps, taus[i]));
  HamiltonianSpace space(v, 6, comps, gens);
  WeylElement id{{{1}}, {}, {}}, flip{{{-1}}, {}, {}};
  for (std::size_t f = 0; f < comps.size(); ++f) {
    id.perm.push_back(f);
    // the antipodal point has all signs reversed: index 7 - f
    flip.perm.push_back(comps.size() - 1 - f);
    id.algebra_maps.push_back({{1}});
    flip.algebra_maps.push_back({{1}});
  }
  WeylData weyl(space, {id, flip}, {{1}});
  return {"s2cubed-su2", std::move(space), std::move(weyl)};
}

Dataset cp2_fixed_line() {
  // Circle on CP^2 fixing a line and a point; x is the hyperplane class.
  Variables v = Variables::standard(1);
  AlgebraPtr line = make_algebra(GradedAlgebra::projective(1));
  std::vector<FixedComponent> comps = {{"L", {rational(-1, 2)}, line, {{{1}, {0, 1}}}},
                                       point("P", {rational(1, 2)}, {{-1}, {-1}})};
  std::vector<Generator> gens = {unit(v, comps), generator("x", 2, v, comps, {{"0", "1"}, {"-X"}})};
  return {"cp2-fixed-line", HamiltonianSpace(v, 4, comps, gens), std::nullopt};
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"s2", "s2xs2-t2", "s2xs2-nonisolated", "s2cubed-su2", "cp2-fixed-line"};
}

Dataset builtin_dataset(const std::string& name) {
  if (name == "s2") return s2();
  if (name == "s2xs2-t2") return s2xs2_t2();
  if (name == "s2xs2-nonisolated") return s2xs2_nonisolated();
  if (name == "s2cubed-su2") return s2cubed_su2();
  if (name == "cp2-fixed-line") return cp2_fixed_line();
  throw std::invalid_argument("unknown built-in dataset '" + name + "'");
}

}  // namespace eqloc
