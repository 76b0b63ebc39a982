#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqloc/examples.hpp"
#include "eqloc/weyl.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace eqloc;
using namespace testing_support;

namespace {

const Dataset& cubed() {
  static const Dataset d = builtin_dataset("s2cubed-su2");
  return d;
}

RestrictedClass random_class(Rng& rng, const HamiltonianSpace& s, int d) {
  auto span = oracle::raw_span(s, d);
  RestrictedClass out = s.zero(d);
  for (const auto& c : span) {
    long k = uniform(rng, -2, 2);
    if (k != 0) out = out + c * Rational(k);
  }
  return out;
}

Rational pairing(const HamiltonianSpace& s, const RestrictedClass& a, const RestrictedClass& b) {
  return kappa_T_integral(s, a * b, Frame::identity(s.nvars()));
}

// Nullity of eta -> (integral(p * eta * zeta))_zeta on the span of `etas`.
std::size_t oracle_nullity(const HamiltonianSpace& s, const std::vector<RestrictedClass>& etas,
                           const std::vector<RestrictedClass>& zetas, const Polynomial& p, int pd) {
  std::vector<bool> all(s.components().size(), true);
  std::vector<std::vector<Rational>> coords;
  for (const auto& e : etas) coords.push_back(oracle::restricted_coordinates(e, all));
  std::size_t dim = oracle::rank_of(coords);
  if (zetas.empty()) return dim;
  std::vector<std::vector<Rational>> m;
  for (const auto& e : etas) {
    std::vector<Rational> row;
    for (const auto& z : zetas) row.push_back(pairing(s, e.times(p, pd), z));
    m.push_back(row);
  }
  return dim - oracle::rank_of(m);
}

std::vector<RestrictedClass> raw_invariants(const HamiltonianSpace& s, const WeylData& w, int d) {
  std::vector<RestrictedClass> out;
  if (d < 0) return out;
  for (const auto& c : oracle::raw_span(s, d)) out.push_back(symmetrize(s, w, c));
  return out;
}

std::vector<RestrictedClass> raw(const HamiltonianSpace& s, int d) {
  return d < 0 ? std::vector<RestrictedClass>{} : oracle::raw_span(s, d);
}

}  // namespace

TEST_CASE("group structure of the flip") {
  const auto& s = cubed().space;
  const auto& w = *cubed().weyl;
  REQUIRE(w.order() == 2);
  std::size_t flip = 1 - w.identity();
  CHECK(w.compose(flip, flip) == w.identity());
  CHECK(w.inverse(flip) == flip);
  CHECK(w.epsilon(flip) == -1);
  CHECK(w.epsilon(w.identity()) == 1);
  CHECK(w.D() == P("X", s.variables()));
  CHECK(w.d_degree() == 2);
}

TEST_CASE("action on classes") {
  const auto& s = cubed().space;
  const auto& w = *cubed().weyl;
  std::size_t flip = 1 - w.identity();
  const auto& tau1 = s.generators()[*s.generator_index("tau1")].value;
  CHECK(w_act(s, w, w.identity(), tau1) == tau1);
  // tau1 is X on the points with a = -1; flipped it is -X on the points with a = +1
  RestrictedClass t = w_act(s, w, flip, tau1);
  for (std::size_t f = 0; f < 8; ++f) {
    Polynomial expected = f < 4 ? P("-X", s.variables()) : Polynomial(1);
    CHECK(t.at(f).coefficient(0) == expected);
  }
  CHECK(t == s.constant_class(P("-X", s.variables())) + tau1);

  Rng rng(71);
  for (int i = 0; i < 30; ++i) {
    auto a = random_class(rng, s, 2 * static_cast<int>(uniform(rng, 0, 2)));
    auto b = random_class(rng, s, 2 * static_cast<int>(uniform(rng, 0, 2)));
    CHECK(w_act(s, w, flip, w_act(s, w, flip, a)) == a);
    CHECK(w_act(s, w, flip, a * b) == w_act(s, w, flip, a) * w_act(s, w, flip, b));
  }
}

TEST_CASE("symmetrize, antisymmetrize and Brion division") {
  const auto& s = cubed().space;
  const auto& w = *cubed().weyl;
  CHECK(antisymmetrize(s, w, s.unit()).is_zero());
  CHECK(symmetrize(s, w, s.unit()) == s.unit() * Rational(2));
  RestrictedClass d = s.constant_class(w.D());
  CHECK(is_anti_invariant(s, w, d));
  CHECK(antisymmetrize(s, w, d) == d * Rational(2));
  CHECK(brion_divide(s, w, d) == s.unit());

  Rng rng(72);
  for (int i = 0; i < 40; ++i) {
    auto eta = random_class(rng, s, 2 * static_cast<int>(uniform(rng, 0, 2)));
    auto inv = symmetrize(s, w, eta);
    CHECK(is_invariant(s, w, inv));
    CHECK(brion_divide(s, w, d * inv) == inv);
    auto anti = antisymmetrize(s, w, eta);
    CHECK(is_anti_invariant(s, w, anti));
    auto q = brion_divide(s, w, anti);
    CHECK(d * q == anti);
  }
  auto tau1 = s.generators()[*s.generator_index("tau1")].value;
  CHECK_THROWS_AS(brion_divide(s, w, tau1), SymmetryError);
}

TEST_CASE("kappa_K calibration") {
  const auto& s = cubed().space;
  const auto& w = *cubed().weyl;
  Rational k = kappa_K_integral(s, w, s.unit(), Frame::identity(1));
  CHECK(k != 0);
  CHECK(k == pairing(s, s.constant_class(w.D() * w.D()), s.unit()));
  CHECK_THROWS_AS(kappa_K_integral(s, w, s.generators()[1].value, Frame::identity(1)), SymmetryError);
}

TEST_CASE("nonabelian theorem through degree 6") {
  const auto& s = cubed().space;
  const auto& w = *cubed().weyl;
  DegreeTruncatedModel model(s, 10);
  auto report = check_theorem_nonabelian(model, w, Frame::identity(1), 6);
  CHECK(report.pass);
  REQUIRE(report.rows.size() == 4);
  const int top = s.dim_m() - 2;
  Polynomial d = w.D(), d2 = d * d;
  for (const auto& row : report.rows) {
    CAPTURE(row.degree);
    auto inv = raw_invariants(s, w, row.degree);
    std::size_t inv_dim = oracle_nullity(s, inv, {}, Polynomial::constant(1, 1), 0);
    CHECK(row.invariant_dimension == inv_dim);
    CHECK(row.kappa_K_kernel.dimension() ==
          oracle_nullity(s, inv, raw_invariants(s, w, top - 4 - row.degree), d2, 4));
    CHECK(row.d_pullback.dimension() == oracle_nullity(s, inv, raw(s, top - 2 - row.degree), d, 2));
    CHECK(row.d2_pullback.dimension() == oracle_nullity(s, inv, raw(s, top - 4 - row.degree), d2, 4));
    if (row.degree > 0) CHECK(row.kappa_K_kernel.dimension() == row.invariant_dimension);
  }
  // 1 is in none of the three subspaces
  CHECK(report.rows[0].kappa_K_kernel.dimension() == 0);
}

TEST_CASE("first characterization of ker kappa_K") {
  const auto& s = cubed().space;
  const auto& w = *cubed().weyl;
  DegreeTruncatedModel model(s, 10);
  auto fc = firstchar_kernel(model, w, Frame::identity(1), 6);
  CHECK(fc.pass);
  auto nb = check_theorem_nonabelian(model, w, Frame::identity(1), 6);
  for (std::size_t i = 0; i < fc.rows.size(); ++i) {
    CAPTURE(fc.rows[i].degree);
    CHECK(fc.rows[i].image == nb.rows[i].kappa_K_kernel);
    CHECK(fc.rows[i].kernel_T_dimension == model.slice_dimension(fc.rows[i].degree + 2) -
                                               oracle::kappa_T_rank(s, Frame::identity(1), fc.rows[i].degree + 2));
  }
}

TEST_CASE("Weyl laws on random classes") {
  const auto& s = cubed().space;
  const auto& w = *cubed().weyl;
  for (std::size_t a = 0; a < w.order(); ++a)
    for (std::size_t b = 0; b < w.order(); ++b) CHECK(w.epsilon(w.compose(a, b)) == w.epsilon(a) * w.epsilon(b));
  RestrictedClass d = s.constant_class(w.D());
  for (std::size_t x = 0; x < w.order(); ++x) CHECK(w_act(s, w, x, d) == d * Rational(w.epsilon(x)));

  Rng rng(73);
  const int top = s.dim_m() - 2;
  for (int i = 0; i < 100; ++i) {
    int da = 2 * static_cast<int>(uniform(rng, 0, 2));
    auto eta = random_class(rng, s, da);
    auto zeta = random_class(rng, s, top - da);
    for (std::size_t x = 0; x < w.order(); ++x)
      CHECK(pairing(s, w_act(s, w, x, eta), w_act(s, w, x, zeta)) == pairing(s, eta, zeta));
    auto e2 = random_class(rng, s, 2 * static_cast<int>(uniform(rng, 0, 1)));
    auto z2 = random_class(rng, s, 2 * static_cast<int>(uniform(rng, 0, 1)));
    CHECK(pairing(s, d * e2, d * z2) == pairing(s, d * d * e2, z2));
    auto anti = antisymmetrize(s, w, eta);
    CHECK(d * brion_divide(s, w, anti) == anti);
  }
}

TEST_CASE("Weyl data validation") {
  const auto& s = cubed().space;
  const auto& w = *cubed().weyl;
  auto elements = w.elements();
  auto bad = elements;
  bad[1].perm[0] = 1;
  CHECK_THROWS_AS(WeylData(s, bad, {{1}}), SymmetryError);
  bad = elements;
  bad[1].matrix = {{2}};
  CHECK_THROWS_AS(WeylData(s, bad, {{1}}), SymmetryError);
  CHECK_THROWS_AS(WeylData(s, {elements[1]}, {{1}}), SymmetryError);
  // D = X^2 is invariant, not anti-invariant
  CHECK_THROWS_AS(WeylData(s, elements, {{1}, {1}}), SymmetryError);
}
