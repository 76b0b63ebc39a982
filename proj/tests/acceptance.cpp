// Acceptance run: one line per criterion, nonzero exit if any fails.
// Usage: acceptance <path to eqloc binary> <data directory>

#include "cli/commands.hpp"
#include "eqloc/weyl.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace eqloc;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Runner {
  int failures = 0;

  void run(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = limit_seconds <= 0 || secs <= limit_seconds;
    bool ok = o.pass && in_time;
    if (!ok) ++failures;
    char timing[64];
    if (limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << name << "  [" << o.detail << "; "
              << timing << (in_time ? "" : ", over time limit") << "]" << std::endl;
  }
};

Fraction res(const Fraction& h, ResidueMethod m = ResidueMethod::PartialFractions) { return res_x_plus(h, 0, m); }

Outcome method_equivalence() {
  Rng rng(1001);
  int cases = 0, gk_cases = 0, bad = 0;
  auto cp1 = make_algebra(GradedAlgebra::projective(1));
  for (; cases < 500; ++cases) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    Fraction h = random_fraction(rng, n);
    Fraction pf = res(h);
    if (!(pf == res(h, ResidueMethod::SeriesAtInfinity))) ++bad;
    bool applicable = true;
    for (const auto& [form, k] : h.denominator().factors()) applicable = applicable && form[0] != 0;
    if (!applicable) continue;
    // point algebra, then a CP^1 fibre with Chern class u on the first line
    auto pt = point_algebra();
    EulerData e{pt, {}}, twisted{cp1, {}};
    for (const auto& [form, k] : h.denominator().factors())
      for (int i = 0; i < k; ++i) {
        e.lines.push_back({form, pt->zero()});
        twisted.lines.push_back({form, twisted.lines.empty() ? cp1->basis(1) : cp1->zero()});
      }
    if (!(Fraction(gk_residue(EquivariantPolynomial::from_polynomial(pt, h.numerator()), e)) == pf)) ++bad;
    auto alpha = EquivariantPolynomial::from_polynomial(cp1, h.numerator()) +
                 EquivariantPolynomial::from_element(cp1, cp1->basis(1), n) * random_polynomial(rng, n, 2, 1, 2);
    Fraction oracle = res((alpha * invert_euler(twisted, n)).integrate());
    if (!(Fraction(gk_residue(alpha, twisted)) == oracle)) ++bad;
    gk_cases += 2;
  }
  return {bad == 0, std::to_string(cases) + " sections, " + std::to_string(gk_cases) + " Guillemin-Kalkman comparisons, " +
                        std::to_string(bad) + " mismatches"};
}

Outcome calculus_laws() {
  Rng rng(1002);
  int bad = 0, derivative = 0, linear = 0, poly = 0, gap = 0;
  while (derivative < 200 || linear < 200 || poly < 200) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto h1 = random_fraction(rng, n);
    auto h2 = random_fraction(rng, n);
    if (!res(h1.derivative(0)).is_zero()) ++bad;
    ++derivative;
    std::vector<std::pair<LinearForm, int>> yfactors;
    if (n > 1) yfactors.emplace_back(random_form(rng, n, false), 1);
    if (n > 1 && yfactors[0].first[0] != 0) yfactors.clear();
    Fraction a(random_polynomial(rng, n, 0, 2, 2), yfactors);
    if (!(res(a * h1 + h2) == a * res(h1) + res(h2))) ++bad;
    ++linear;
    if (!res(Fraction(random_polynomial(rng, n, 4, 2, 4))).is_zero()) ++bad;
    ++poly;
  }
  while (gap < 200) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto h = random_fraction(rng, n, -2);
    if (h.numerator().is_zero() || h.numerator().degree_in(0) > h.denominator().degree_in(0) - 2) continue;
    if (!res(h).is_zero() || !res(h, ResidueMethod::SeriesAtInfinity).is_zero()) ++bad;
    ++gap;
  }
  return {bad == 0, std::to_string(derivative) + " derivative, " + std::to_string(linear) + " linearity, " +
                        std::to_string(poly) + " polynomial, " + std::to_string(gap) + " degree-gap cases, " +
                        std::to_string(bad) + " failures"};
}

Outcome abbv_validity() {
  int products = 0;
  bool ok = true;
  for (const char* name : {"s2", "s2xs2-t2", "s2xs2-nonisolated", "s2cubed-su2"}) {
    cli::Report r = cli::cmd_validate(builtin_dataset(name), {});
    ok = ok && r.pass;
    products += static_cast<int>(r.results["abbv"].size());
  }
  return {ok, std::to_string(products) + " generator products on 4 datasets"};
}

// Per degree: library verdict plus the oracle dimensions of K_- and K_+.
bool secondmain_with_oracle(const DegreeTruncatedModel& m, const CircleDirection& xi, int max_degree) {
  auto rep = check_theorem_secondmain(m, xi, max_degree);
  bool ok = rep.pass;
  const auto& s = m.space();
  for (const auto& row : rep.rows) {
    int d = row.comparison.degree;
    std::size_t slice = oracle::slice_dim(s, d);
    ok = ok && row.comparison.slice == slice;
    ok = ok && row.minus.dimension() == slice - oracle::restriction_rank(s, xi.xi, +1, d);
    ok = ok && row.plus.dimension() == slice - oracle::restriction_rank(s, xi.xi, -1, d);
    ok = ok && row.comparison.left.dimension() == slice - oracle::kappa_S_rank(s, xi.xi, d);
  }
  return ok;
}

Outcome residue_kernel_theorem() {
  int checks = 0;
  bool ok = true;
  for (const char* name : {"s2", "s2xs2-t2", "s2xs2-nonisolated"}) {
    auto d = builtin_dataset(name);
    DegreeTruncatedModel m(d.space, std::max(4, d.space.dim_m()));
    auto chambers = enumerate_generic_directions(d.space, ChamberStrategy::Exact);
    for (const auto& xi : chambers.directions) {
      ok = ok && secondmain_with_oracle(m, xi, 4);
      ++checks;
    }
  }
  return {ok, std::to_string(checks) + " chamber directions, degrees 0..4"};
}

Outcome full_kernel_theorem() {
  bool ok = true;
  std::string detail;
  for (const char* name : {"s2", "s2xs2-t2"}) {
    auto d = builtin_dataset(name);
    DegreeTruncatedModel m(d.space, std::max(4, d.space.dim_m()));
    Frame f = suggest_frame(d.space);
    auto rep = full_kernel(m, f, 4, ChamberStrategy::Exact);
    ok = ok && rep.pass && rep.chambers.exact;
    for (const auto& c : rep.tolman_weitsman)
      ok = ok && c.left.dimension() == c.slice - oracle::kappa_T_rank(d.space, f, c.degree);
    detail += (detail.empty() ? "" : ", ") + std::string(name) + ": " + std::to_string(rep.chambers.directions.size()) +
              " chambers";
  }
  return {ok, detail + ", degrees 0..4"};
}

Outcome nonabelian_theorem() {
  auto d = builtin_dataset("s2cubed-su2");
  DegreeTruncatedModel m(d.space, 10);
  auto rep = check_theorem_nonabelian(m, *d.weyl, suggest_frame(d.space), 6);
  std::string dims;
  for (const auto& r : rep.rows) dims += (dims.empty() ? "" : " ") + std::to_string(r.kappa_K_kernel.dimension()) + "/" +
                                        std::to_string(r.invariant_dimension);
  return {rep.pass && rep.rows.size() == 4, "kernel/invariant dims by degree 0..6: " + dims};
}

Outcome firstchar() {
  auto d = builtin_dataset("s2cubed-su2");
  DegreeTruncatedModel m(d.space, 10);
  auto rep = firstchar_kernel(m, *d.weyl, suggest_frame(d.space), 6);
  std::string dims;
  for (const auto& r : rep.rows) dims += (dims.empty() ? "" : " ") + std::to_string(r.image.dimension());
  return {rep.pass, "span dims by degree 0..6: " + dims};
}

RestrictedClass random_class(Rng& rng, const HamiltonianSpace& s, int d) {
  RestrictedClass out = s.zero(d);
  for (const auto& c : oracle::raw_span(s, d)) {
    long k = uniform(rng, -2, 2);
    if (k != 0) out = out + c * Rational(k);
  }
  return out;
}

Outcome weyl_laws() {
  auto data = builtin_dataset("s2cubed-su2");
  const auto& s = data.space;
  const auto& w = *data.weyl;
  Frame f = suggest_frame(s);
  auto pairing = [&](const RestrictedClass& a, const RestrictedClass& b) { return kappa_T_integral(s, a * b, f); };
  RestrictedClass D = s.constant_class(w.D());
  int bad = 0, cases = 0;
  for (std::size_t a = 0; a < w.order(); ++a) {
    for (std::size_t b = 0; b < w.order(); ++b)
      if (w.epsilon(w.compose(a, b)) != w.epsilon(a) * w.epsilon(b)) ++bad;
    if (!(w_act(s, w, a, D) == D * Rational(w.epsilon(a)))) ++bad;
  }
  Rng rng(1008);
  const int top = s.dim_m() - 2 * static_cast<int>(s.nvars());
  for (; cases < 100; ++cases) {
    int da = 2 * static_cast<int>(uniform(rng, 0, top / 2));
    auto eta = random_class(rng, s, da);
    auto zeta = random_class(rng, s, top - da);
    for (std::size_t x = 0; x < w.order(); ++x)
      if (pairing(w_act(s, w, x, eta), w_act(s, w, x, zeta)) != pairing(eta, zeta)) ++bad;
    auto e2 = random_class(rng, s, 2 * static_cast<int>(uniform(rng, 0, 1)));
    auto z2 = random_class(rng, s, 2 * static_cast<int>(uniform(rng, 0, 1)));
    if (pairing(D * e2, D * z2) != pairing(D * D * e2, z2)) ++bad;
    auto anti = antisymmetrize(s, w, random_class(rng, s, 2 * static_cast<int>(uniform(rng, 0, 3))));
    if (!(D * brion_divide(s, w, anti) == anti)) ++bad;
  }
  return {bad == 0, std::to_string(cases) + " random cases, " + std::to_string(bad) + " failures"};
}

std::string run_capture(const std::string& command, int& status) {
  std::string out;
  FILE* p = popen(command.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  status = pclose(p);
  return out;
}

Outcome determinism(const std::string& binary, const std::string& data_dir) {
  std::vector<std::string> commands;
  for (const auto& name : builtin_names()) {
    commands.push_back("validate builtin:" + name);
    commands.push_back("validate " + data_dir + "/" + name + ".json");
  }
  for (const auto& entry : std::filesystem::directory_iterator(data_dir + "/residue"))
    commands.push_back("residue " + entry.path().string());
  commands.push_back("kernel builtin:s2 --circle 1 --max-degree 4");
  commands.push_back("kernel builtin:s2xs2-t2 --circle 2,1 --max-degree 4");
  commands.push_back("kernel builtin:s2xs2-nonisolated --circle -1 --max-degree 4");
  commands.push_back("kernel builtin:s2xs2-t2 --full --max-degree 4");
  commands.push_back("kernel builtin:s2xs2-t2 --full --max-degree 4 --frame \"1,2;0,1\" --delta -1");
  commands.push_back("kernel builtin:s2 --full --max-degree 4 --ordering X");
  commands.push_back("kernel builtin:s2cubed-su2 --nonabelian --max-degree 6 --calibrate 1");
  commands.push_back("integrate builtin:s2xs2-t2 --class tau1*tau2 --circle 1,2");
  std::sort(commands.begin() + static_cast<long>(2 * builtin_names().size()), commands.end());
  int runs = 0, diffs = 0, errors = 0;
  for (const auto& c : commands)
    for (const char* format : {"json", "text"}) {
      std::string full = "\"" + binary + "\" " + c + " --format " + format + " 2>&1";
      int s1 = 0, s2 = 0;
      std::string a = run_capture(full, s1), b = run_capture(full, s2);
      runs += 2;
      if (a != b || s1 != s2) ++diffs;
      if (s1 != 0 || a.empty()) ++errors;
    }
  return {diffs == 0 && errors == 0, std::to_string(runs) + " runs of " + std::to_string(commands.size()) +
                                         " commands, " + std::to_string(diffs) + " differing, " +
                                         std::to_string(errors) + " failing"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <eqloc binary> <data directory>\n";
    return 2;
  }
  Runner r;
  r.run(1, "residue methods agree", 60, method_equivalence);
  r.run(2, "residue calculus laws", 0, calculus_laws);
  r.run(3, "ABBV polynomiality and vanishing", 30, abbv_validity);
  r.run(4, "residue kernel equals K_- + K_+", 120, residue_kernel_theorem);
  r.run(5, "ker kappa_T equals the chamber sum", 120, full_kernel_theorem);
  r.run(6, "nonabelian kernel characterizations agree", 120, nonabelian_theorem);
  r.run(7, "Brion-divided antisymmetrizations span ker kappa_K", 0, firstchar);
  r.run(8, "Weyl laws", 0, weyl_laws);
  r.run(9, "byte-identical CLI reports", 0, [&] { return determinism(argv[1], argv[2]); });
  return r.failures == 0 ? 0 : 1;
}
