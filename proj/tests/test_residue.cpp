#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace eqloc;
using namespace testing_support;

namespace {

const Variables v1 = Variables::standard(1);
const Variables v3 = Variables::standard(3);

Fraction res(const Fraction& h, ResidueMethod m = ResidueMethod::PartialFractions) { return res_x_plus(h, 0, m); }

}  // namespace

TEST_CASE("res_x_plus examples, both methods") {
  for (auto m : {ResidueMethod::PartialFractions, ResidueMethod::SeriesAtInfinity}) {
    CHECK(res(F("1", "X", v3), m) == F("1", "", v3));
    CHECK(res(F("X", "(X - Y1)*(X - Y2)", v3), m) == F("1", "", v3));
    CHECK(res(F("1", "X*(X - Y1)", v3), m).is_zero());
    CHECK(res(F("X^2", "(X - Y1)^3", v3), m) == F("1", "", v3));
  }
}

TEST_CASE("X^2/(X-Y1)^3 against the hand derivative formula") {
  // (X - Y1)^3 h = X^2; second derivative / 2! = 1
  auto h = F("X^2", "(X - Y1)^3", v3);
  auto r = residue_at_pole(h, 0, LinearForm::from_ints({1, -1, 0}));
  CHECK(r == F("1", "", v3));
}

TEST_CASE("proportional factors merge into one pole") {
  auto h = F("X", "(2*X - 2*Y1)*(X - Y1)", v3);
  CHECK(h.denominator().factors().size() == 1);
  CHECK(res(h) == F("1/2", "", v3));
  CHECK(res(h, ResidueMethod::SeriesAtInfinity) == F("1/2", "", v3));
}

TEST_CASE("denominator ordering does not matter") {
  CHECK(res(F("X^3", "(X + Y1)^2*(X - Y2)*X", v3)) == res(F("X^3", "X*(X - Y2)*(X + Y1)^2", v3)));
}

TEST_CASE("gk_residue examples") {
  auto pt = point_algebra();
  EulerData down{pt, {{LinearForm::from_ints({-1}), pt->zero()}}};
  auto one = EquivariantPolynomial::unit(pt, 1);
  CHECK(gk_residue(one, down) == P("-1", v1));
  // oracle: res_x_plus of 1/(-X)
  CHECK(res(F("1", "-X", v1)) == F("-1", "", v1));

  auto cp1 = make_algebra(GradedAlgebra::projective(1));
  EulerData up{cp1, {{LinearForm::from_ints({1}), cp1->basis(1)}}};
  auto x = EquivariantPolynomial::from_polynomial(cp1, P("X", v1));
  CHECK(gk_residue(x, up) == P("-1", v1));
  // by hand: integral of X*(1/X - u/X^2) is -1/X
  CHECK(res((x * invert_euler(up, 1)).integrate()) == F("-1", "", v1));
  auto u = EquivariantPolynomial::from_element(cp1, cp1->basis(1), 1);
  CHECK(gk_residue(u, up) == P("1", v1));
  CHECK(res((u * invert_euler(up, 1)).integrate()) == F("1", "", v1));

  EulerData flat{pt, {{LinearForm::from_ints({0, 1}), pt->zero()}}};
  CHECK_THROWS_AS(gk_residue(EquivariantPolynomial::unit(pt, 2), flat), NonGenericError);
}

TEST_CASE("iterated residues") {
  auto v2 = Variables::standard(2);
  VariableOrdering single{{0}, 3};
  CHECK(iterated_res(F("1", "X", v1), single) == 3);
  VariableOrdering y_first{{1, 0}, 1};
  CHECK(iterated_res(F("1", "X*Y1", v2), y_first) == 1);
  // By hand, Y1 first: poles Y1 = 0 and Y1 = -X give 1/X^2 - 1/X^2 = 0.
  // X first: poles X = 0 and X = -Y1 give 1/Y1^2 - 1/Y1^2 = 0.
  auto h = F("1", "X*(X + Y1)*Y1", v2);
  CHECK(res_x_plus(h, 1).is_zero());
  CHECK(res_x_plus(h, 0).is_zero());
  CHECK(iterated_res(h, y_first) == 0);
  CHECK(iterated_res(h, VariableOrdering{{0, 1}, 1}) == 0);
  CHECK_THROWS_AS(iterated_res(h, VariableOrdering{{0, 0}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(iterated_res(h, VariableOrdering{{0, 1}, 0}), std::invalid_argument);
}

TEST_CASE("selective iterated residue keeps only exponents positive on the current variable") {
  auto v2 = Variables::standard(2);
  // e^{X} / (X * Y1): stage X keeps the pole X = 0 with exponent (0, 0)... then Y1 has exponent 0
  std::vector<WeightedTerm> degenerate = {{F("1", "X*Y1", v2), {1, 0}}};
  CHECK_THROWS_AS(selective_iterated_res(degenerate), NonGenericError);
  // e^{X + Y1} / (X * Y1) -> 1; e^{-X + Y1} / (X * Y1) -> 0
  CHECK(selective_iterated_res({{F("1", "X*Y1", v2), {1, 1}}}) == 1);
  CHECK(selective_iterated_res({{F("1", "X*Y1", v2), {-1, 1}}}) == 0);
  // e^{X - Y1/2}/(X (X - Y1)): the pole X = Y1 leaves 1/Y1 with exponent 1/2, the pole X = 0 is dropped
  CHECK(selective_iterated_res({{F("1", "X*(X - Y1)", v2), {rational(1), rational(-1, 2)}}}) == 1);
}

TEST_CASE("property: partial fractions equal series at infinity") {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto h = random_fraction(rng, n);
    CHECK(res(h) == res(h, ResidueMethod::SeriesAtInfinity));
  }
}

TEST_CASE("property: residue calculus laws") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto h1 = random_fraction(rng, n);
    auto h2 = random_fraction(rng, n);
    CHECK(res(h1.derivative(0)).is_zero());
    // a free of X
    std::vector<std::pair<LinearForm, int>> yfactors;
    if (n > 1) yfactors.emplace_back(LinearForm::from_ints(n == 2 ? std::vector<long>{0, 1} : std::vector<long>{0, 1, -2}), 1);
    Fraction a(random_polynomial(rng, n, 0, 2, 2), yfactors);
    CHECK(res(a * h1 + h2) == a * res(h1) + res(h2));
    auto p = random_polynomial(rng, n, 4, 2, 4);
    CHECK(res(Fraction(p)).is_zero());
  }
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto h = random_fraction(rng, n, -2);
    if (h.numerator().degree_in(0) > h.denominator().degree_in(0) - 2) continue;
    CHECK(res(h).is_zero());
  }
}
