#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqloc/examples.hpp"
#include "eqloc/kernels.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <set>

using namespace eqloc;
using namespace testing_support;

namespace {

RestrictedClass gen(const HamiltonianSpace& s, const std::string& name) {
  return s.generators()[*s.generator_index(name)].value;
}

std::vector<RestrictedClass> classes(const DegreeTruncatedModel& m, const Subspace& sub, int d) {
  std::vector<RestrictedClass> out;
  for (const auto& v : sub.basis()) out.push_back(m.combination(d, v));
  return out;
}

std::vector<int> signs_of(const HamiltonianSpace& s, const std::vector<long>& xi) {
  std::vector<int> out;
  for (const auto& c : s.components()) {
    Rational v = 0;
    for (std::size_t i = 0; i < xi.size(); ++i) v += c.moment[i] * xi[i];
    out.push_back(sgn(v));
  }
  return out;
}

// Independent verification of ker_res(kappa_S) = K_- + K_+ (direct) in degree d.
void verify_secondmain(const DegreeTruncatedModel& m, const std::vector<long>& xi, int d) {
  const auto& s = m.space();
  CircleDirection dir(xi);
  auto signs = signs_of(s, xi);
  auto minus = tw_subspace(m, dir, Side::Minus, d);
  auto plus = tw_subspace(m, dir, Side::Plus, d);
  auto ker = residue_kernel_S(m, dir, d);
  std::size_t slice = oracle::slice_dim(s, d);
  CHECK(m.slice_dimension(d) == slice);
  CHECK(minus.dimension() == slice - oracle::restriction_rank(s, xi, -1, d));
  CHECK(plus.dimension() == slice - oracle::restriction_rank(s, xi, 1, d));
  std::size_t kernel_dim = slice - oracle::kappa_S_rank(s, xi, d);
  CHECK(ker.kernel.dimension() == kernel_dim);
  CHECK(ker.stable);
  // K_- and K_+ classes vanish where claimed and pair to zero
  std::vector<std::vector<Rational>> together;
  std::vector<bool> all(s.components().size(), true);
  for (auto [sub, side] : {std::pair{minus, -1}, std::pair{plus, 1}})
    for (const auto& c : classes(m, sub, d)) {
      for (std::size_t f = 0; f < s.components().size(); ++f)
        if (signs[f] == side) CHECK(c.at(f).is_zero());
      for (int t = 0; t <= s.dim_m() - 2; t += 2)
        for (const auto& z : oracle::raw_span(s, t)) CHECK(kappa_S_integral(s, c * z, dir).value.is_zero());
      together.push_back(oracle::restricted_coordinates(c, all));
    }
  // direct sum whose dimension equals the kernel dimension
  CHECK(oracle::rank_of(together) == minus.dimension() + plus.dimension());
  CHECK(oracle::rank_of(together) == kernel_dim);
}

}  // namespace

TEST_CASE("partition") {
  auto s2 = builtin_dataset("s2").space;
  CHECK(partition(s2, CircleDirection({1})) == std::vector<int>{1, -1});
  CHECK(partition(s2, CircleDirection({-1})) == std::vector<int>{-1, 1});
  auto t2 = builtin_dataset("s2xs2-t2").space;
  CHECK(partition(t2, CircleDirection({1, 2})) == signs_of(t2, {1, 2}));
  CHECK_THROWS_AS(partition(t2, CircleDirection({1, 1})), GenericityError);
}

TEST_CASE("Tolman-Weitsman subspaces on S^2") {
  auto s = builtin_dataset("s2").space;
  DegreeTruncatedModel m(s, 4);
  CircleDirection xi({1});
  auto plus = tw_subspace(m, xi, Side::Plus, 2);
  auto minus = tw_subspace(m, xi, Side::Minus, 2);
  REQUIRE(plus.dimension() == 1);
  REQUIRE(minus.dimension() == 1);
  // solve by hand in the basis {X, tau}: a X + b tau vanishes at N iff a = 0
  auto kp = classes(m, plus, 2)[0];
  CHECK(kp.at(0).is_zero());
  CHECK(kp == gen(s, "tau") * kp.at(1).coefficient(0).coefficient({1}));
  auto km = classes(m, minus, 2)[0];
  CHECK(km.at(1).is_zero());
  CHECK_FALSE(km.at(0).is_zero());
  for (int d = 0; d <= 4; d += 2)
    CHECK(tw_subspace(m, xi, Side::Plus, d).intersect(tw_subspace(m, xi, Side::Minus, d)).dimension() == 0);
  CHECK(tw_subspace(m, xi, Side::Plus, 0).dimension() == 0);
  CHECK(tw_subspace(m, xi, Side::Minus, 0).dimension() == 0);
}

TEST_CASE("residue kernel on S^2") {
  auto s = builtin_dataset("s2").space;
  DegreeTruncatedModel m(s, 4);
  CircleDirection xi({1});
  auto k2 = residue_kernel_S(m, xi, 2);
  CHECK(k2.kernel.dimension() == 2);
  CHECK(k2.kernel == Subspace::full(2));
  // 1 pairs with itself to kappa_S(1) = -1
  CHECK(residue_kernel_S(m, xi, 0).kernel.dimension() == 0);
  for (int d = 0; d <= 4; d += 2) {
    auto k = residue_kernel_S(m, xi, d).kernel;
    CHECK(k.contains(tw_subspace(m, xi, Side::Plus, d)));
    CHECK(k.contains(tw_subspace(m, xi, Side::Minus, d)));
  }
}

TEST_CASE("secondmain theorem, independently verified") {
  for (const auto& [name, xis] : std::vector<std::pair<std::string, std::vector<std::vector<long>>>>{
           {"s2", {{1}, {-1}}},
           {"s2xs2-t2", {{1, 2}, {2, 1}, {-1, 2}, {1, -3}}},
           {"s2xs2-nonisolated", {{1}, {-1}}},
           {"cp2-fixed-line", {{1}}}}) {
    auto s = builtin_dataset(name).space;
    DegreeTruncatedModel m(s, std::max(4, s.dim_m()));
    for (const auto& xi : xis) {
      auto report = check_theorem_secondmain(m, CircleDirection(xi), 4);
      CHECK_MESSAGE(report.pass, name);
      for (int d = 0; d <= 4; d += 2) verify_secondmain(m, xi, d);
    }
  }
}

TEST_CASE("K_+ for xi is K_- for -xi") {
  auto s = builtin_dataset("s2xs2-t2").space;
  DegreeTruncatedModel m(s, 4);
  for (const auto& xi : std::vector<std::vector<long>>{{1, 2}, {3, -1}}) {
    CircleDirection d(xi);
    for (int deg = 0; deg <= 4; deg += 2) {
      CHECK(tw_subspace(m, d, Side::Plus, deg) == tw_subspace(m, -d, Side::Minus, deg));
      CHECK(tw_subspace(m, d, Side::Minus, deg) == tw_subspace(m, -d, Side::Plus, deg));
    }
  }
}

TEST_CASE("chamber enumeration") {
  auto s2 = builtin_dataset("s2").space;
  auto e1 = enumerate_generic_directions(s2);
  REQUIRE(e1.directions.size() == 2);
  CHECK(e1.exact);
  std::set<std::vector<long>> got;
  for (const auto& d : e1.directions) got.insert(d.xi);
  CHECK(got == std::set<std::vector<long>>{{1}, {-1}});

  auto t2 = builtin_dataset("s2xs2-t2").space;
  auto e2 = enumerate_generic_directions(t2);
  // oracle: count sign patterns of generic directions in a box
  std::set<std::vector<int>> sampled;
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      auto p = sign_pattern(t2, {a, b});
      if (std::find(p.begin(), p.end(), 0) == p.end()) sampled.insert(p);
    }
  CHECK(sampled.size() == 8);
  CHECK(e2.directions.size() == 8);
  std::set<std::vector<int>> found(e2.patterns.begin(), e2.patterns.end());
  CHECK(found == sampled);
  for (const auto& d : e2.directions) CHECK(is_generic(t2, d).generic);

  auto lattice = enumerate_generic_directions(t2, ChamberStrategy::Lattice, 3);
  CHECK_FALSE(lattice.exact);
  CHECK_FALSE(lattice.warnings.empty());
  CHECK(lattice.directions.size() == 8);

  Variables v = Variables::standard(1);
  std::vector<FixedComponent> comps = {{"P", {1}, point_algebra(), {{{1}, {0}}}}};
  HamiltonianSpace single(v, 2, comps, {{"1", 0, RestrictedClass({EquivariantPolynomial::unit(point_algebra(), 1)}, 0)}});
  CHECK(enumerate_generic_directions(single).directions.size() == 2);
}

TEST_CASE("exact chambers of random rank-3 arrangements match sampling") {
  Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<std::vector<long>> normals;
    int count = static_cast<int>(uniform(rng, 1, 5));
    for (int i = 0; i < count; ++i) {
      std::vector<long> a(3);
      do {
        for (auto& x : a) x = uniform(rng, -2, 2);
      } while (a == std::vector<long>{0, 0, 0});
      normals.push_back(a);
    }
    auto reps = chamber_representatives(normals, 3);
    std::set<std::vector<int>> exact;
    for (const auto& r : reps) {
      std::vector<int> s;
      for (const auto& a : normals) {
        long d = a[0] * r[0] + a[1] * r[1] + a[2] * r[2];
        CHECK(d != 0);
        s.push_back(d > 0 ? 1 : -1);
      }
      exact.insert(s);
    }
    CHECK(exact.size() == reps.size());
    std::set<std::vector<int>> sampled;
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b)
        for (long c = -12; c <= 12; ++c) {
          std::vector<int> s;
          bool ok = true;
          for (const auto& n : normals) {
            long d = n[0] * a + n[1] * b + n[2] * c;
            if (d == 0) ok = false;
            s.push_back(d > 0 ? 1 : -1);
          }
          if (ok) sampled.insert(s);
        }
    // sampling can only find chambers that exist
    for (const auto& s : sampled) CHECK(exact.count(s) == 1);
  }
}

TEST_CASE("full kernel: Tolman-Weitsman sum equals ker kappa_T") {
  for (const std::string name : {"s2", "s2xs2-t2"}) {
    auto s = builtin_dataset(name).space;
    DegreeTruncatedModel m(s, std::max(4, s.dim_m()));
    Frame f = suggest_frame(s);
    auto report = full_kernel(m, f, 4);
    CHECK_MESSAGE(report.pass, name);
    CHECK(report.chambers.exact);
    for (int d = 0; d <= 4; d += 2) {
      auto kt = kappa_T_kernel(m, f, d);
      CHECK(kt.dimension() == oracle::slice_dim(s, d) - oracle::kappa_T_rank(s, f, d));
      // each chamber contribution lies in ker kappa_T by direct evaluation
      int comp = s.dim_m() - 2 * static_cast<int>(s.nvars()) - d;
      for (const auto& xi : report.chambers.directions)
        for (auto side : {Side::Minus, Side::Plus})
          for (const auto& c : classes(m, tw_subspace(m, xi, side, d), d))
            for (const auto& z : oracle::raw_span(s, comp)) CHECK(kappa_T_integral(s, c * z, f) == 0);
    }
  }
}

TEST_CASE("ker kappa_S is inside ker kappa_T") {
  auto s = builtin_dataset("s2xs2-t2").space;
  DegreeTruncatedModel m(s, 4);
  Frame f = suggest_frame(s);
  for (const auto& xi : enumerate_generic_directions(s).directions)
    for (int d = 0; d <= 4; d += 2) CHECK(kappa_T_kernel(m, f, d).contains(residue_kernel_S(m, xi, d).kernel));
}

TEST_CASE("rescaled pairings give identical kernels") {
  Matrix a = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  Matrix b = a;
  for (auto& row : b)
    for (auto& x : row) x *= rational(-7, 3);
  CHECK(Subspace(nullspace(a, 3), 3) == Subspace(nullspace(b, 3), 3));
}

TEST_CASE("alpha plus candidates") {
  auto s = builtin_dataset("s2").space;
  CircleDirection xi({1});
  // S is the minimum; the class tau vanishes at N and restricts to X at S
  auto ok = validate_alpha_plus(s, 1, gen(s, "tau"), xi);
  CHECK(ok.pass);
  // N is the maximum with no positive lines: the candidate must restrict to 1
  auto bad = validate_alpha_plus(s, 0, s.zero(0), xi);
  CHECK_FALSE(bad.pass);
  CHECK(bad.failures.size() == 1);
  CHECK(validate_alpha_plus(s, 0, s.unit(), xi).pass);
  // wrong candidate at the minimum: the unit does not vanish at N
  auto wrong = validate_alpha_plus(s, 1, s.unit(), xi);
  CHECK(wrong.failures.size() == 2);
}
