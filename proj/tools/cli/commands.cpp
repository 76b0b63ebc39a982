#include "cli/commands.hpp"

#include "eqloc/expression.hpp"
#include "eqloc/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eqloc::cli {

std::vector<long> parse_integer_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(what, "expected comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw InputError(what, "empty list");
  return out;
}

std::vector<std::vector<long>> parse_columns(const std::string& text, const std::string& what) {
  std::vector<std::vector<long>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_integer_list(item, what));
  return out;
}

RestrictedClass parse_class(const HamiltonianSpace& s, const std::string& text) {
  std::vector<std::string> names = s.variables().names();
  std::vector<std::size_t> gen_of;
  for (std::size_t g = 0; g < s.generators().size(); ++g) {
    const auto& gen = s.generators()[g];
    if (gen.degree == 0 || s.variables().index_of(gen.name)) continue;
    names.push_back(gen.name);
    gen_of.push_back(g);
  }
  const std::size_t n = s.nvars();
  Polynomial p;
  try {
    p = parse_polynomial(text, Variables(names));
  } catch (const ParseError& e) {
    throw InputError("class", e.what());
  }
  std::optional<RestrictedClass> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents torus(e.begin(), e.begin() + static_cast<long>(n));
    RestrictedClass term = s.constant_class(Polynomial::monomial(torus, c));
    for (std::size_t k = 0; k < gen_of.size(); ++k)
      for (int i = 0; i < e[n + k]; ++i) term = term * s.generators()[gen_of[k]].value;
    if (out && out->degree() != term.degree()) throw InputError("class", "'" + text + "' is not homogeneous");
    out = out ? *out + term : term;
  }
  if (!out) throw InputError("class", "'" + text + "' is zero");
  return *out;
}

namespace {

Json subspace_json(const Subspace& s) {
  Json j;
  j["dimension"] = s.dimension();
  j["basis"] = matrix_json(s.basis());
  return j;
}

Json comparison_json(const DegreeComparison& c, const char* left, const char* right) {
  Json j;
  j["degree"] = c.degree;
  j["slice_dimension"] = c.slice;
  j[left] = subspace_json(c.left);
  j[right] = subspace_json(c.right);
  j["equal"] = c.equal;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

Json labels_json(const DegreeTruncatedModel& m, int max_degree) {
  Json j = Json::object();
  for (int d = 0; d <= max_degree; d += 2) j[std::to_string(d)] = m.labels(d);
  return j;
}

Frame choose_frame(const HamiltonianSpace& s, const std::optional<std::vector<std::string>>& ordering,
                   const std::optional<std::vector<std::vector<long>>>& columns, const Rational& delta) {
  if (delta == 0) throw InputError("--delta", "must be nonzero");
  if (ordering && columns) throw InputError("--frame", "give either --ordering or --frame");
  if (columns) {
    const std::size_t n = s.nvars();
    if (columns->size() != n) throw InputError("--frame", "expected " + std::to_string(n) + " columns");
    Frame f{IntMatrix(n, std::vector<long>(n)), delta};
    for (std::size_t j = 0; j < n; ++j) {
      if ((*columns)[j].size() != n) throw InputError("--frame", "expected " + std::to_string(n) + " entries per column");
      for (std::size_t i = 0; i < n; ++i) f.basis[i][j] = (*columns)[j][i];
    }
    Rational det = determinant(f.basis);
    if (det != 1 && det != -1) throw InputError("--frame", "basis is not unimodular");
    return f;
  }
  if (!ordering) {
    Frame f = suggest_frame(s);
    f.delta = delta;
    return f;
  }
  VariableOrdering o;
  o.delta = delta;
  for (const auto& item : *ordering) {
    if (auto i = s.variables().index_of(item)) {
      o.order.push_back(*i);
      continue;
    }
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      o.order.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InputError("--ordering", "unknown variable '" + item + "'");
    }
  }
  try {
    o.validate(s.nvars());
  } catch (const std::exception& e) {
    throw InputError("--ordering", e.what());
  }
  return Frame::from_ordering(o);
}

CircleDirection circle(const HamiltonianSpace& s, const std::vector<long>& xi) {
  if (xi.size() != s.nvars()) throw InputError("--circle", "expected " + std::to_string(s.nvars()) + " integers");
  try {
    CircleDirection c(xi);
    auto g = is_generic(s, c);
    if (!g.generic) {
      std::vector<Issue> issues;
      for (const auto& v : g.violations) issues.push_back({"--circle", v});
      throw InputError(issues);
    }
    return c;
  } catch (const std::invalid_argument& e) {
    throw InputError("--circle", e.what());
  }
}

Json frame_json(const Frame& f) {
  Json j;
  Json cols = Json::array();
  for (std::size_t c = 0; c < f.basis.size(); ++c) {
    Json col = Json::array();
    for (const auto& row : f.basis) col.push_back(row[c]);
    cols.push_back(col);
  }
  j["columns"] = cols;
  j["delta"] = rational_json(f.delta);
  return j;
}

void require_generic_frame(const HamiltonianSpace& s, const Frame& f) {
  auto g = frame_is_generic(s, f);
  if (g.generic) return;
  std::vector<Issue> issues;
  for (const auto& v : g.violations) issues.push_back({"frame", v});
  throw InputError(issues);
}

}  // namespace

Report cmd_validate(const Dataset& d, const ValidateOptions& opt) {
  const auto& s = d.space;
  Report r;
  r.command = "validate";
  r.input_digest = dataset_digest(d);
  const int max_degree = opt.max_degree.value_or(s.dim_m());
  if (max_degree < 0) throw InputError("--max-degree", "must be nonnegative");
  r.parameters["max_degree"] = max_degree;

  Json structure;
  structure["torus_rank"] = s.nvars();
  structure["dim_M"] = s.dim_m();
  Json comps = Json::array();
  for (const auto& c : s.components()) {
    Json cj;
    cj["name"] = c.name;
    cj["dimension"] = c.dimension();
    cj["euler_class"] = c.euler_class(s.nvars()).to_string(s.variables().names());
    comps.push_back(cj);
  }
  structure["components"] = comps;
  structure["weyl_order"] = d.weyl ? d.weyl->order() : 0;
  r.results["structure"] = structure;

  // generator products as nondecreasing index sequences
  std::vector<std::size_t> gens;
  for (std::size_t g = 0; g < s.generators().size(); ++g)
    if (s.generators()[g].degree > 0) gens.push_back(g);
  Json products = Json::array();
  std::vector<std::pair<std::vector<std::size_t>, RestrictedClass>> frontier = {{{}, s.unit()}};
  while (!frontier.empty()) {
    std::vector<std::pair<std::vector<std::size_t>, RestrictedClass>> next;
    for (const auto& [word, cls] : frontier) {
      std::string name;
      for (std::size_t g : word) name += (name.empty() ? "" : "*") + s.generators()[g].name;
      if (name.empty()) name = "1";
      AbbvResult a = abbv_sum(s, cls);
      Json pj;
      pj["class"] = name;
      pj["degree"] = cls.degree();
      pj["polynomial"] = a.polynomial;
      bool ok = a.polynomial;
      if (a.polynomial) {
        pj["integral"] = a.value.to_string(s.variables().names());
        if (cls.degree() < s.dim_m() && !a.value.is_zero()) ok = false;
      } else {
        pj["sum"] = a.sum.to_string(s.variables().names());
      }
      pj["pass"] = ok;
      r.pass = r.pass && ok;
      products.push_back(pj);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!word.empty() && gens[k] < word.back()) continue;
        const auto& g = s.generators()[gens[k]];
        if (cls.degree() + g.degree > max_degree) continue;
        auto w2 = word;
        w2.push_back(gens[k]);
        next.emplace_back(std::move(w2), cls * g.value);
      }
    }
    frontier = std::move(next);
  }
  r.results["abbv"] = products;
  return r;
}

Report cmd_residue(const std::string& text, const std::string& source) {
  ResidueProblem p;
  try {
    p = parse_residue_problem(text);
  } catch (const ParseError& e) {
    throw InputError(source, e.what());
  }
  const auto& names = p.variables.names();
  Report r;
  r.command = "residue";
  r.input_digest = fnv1a64(text);
  r.parameters["variables"] = names;
  r.parameters["variable"] = names[p.residue_variable];
  r.parameters["numerator"] = p.numerator_text;
  r.parameters["denominator"] = p.denominator_text;
  Fraction pf = res_x_plus(p.expression, p.residue_variable, ResidueMethod::PartialFractions);
  Fraction si = res_x_plus(p.expression, p.residue_variable, ResidueMethod::SeriesAtInfinity);
  r.results["partial_fractions"] = pf.reduced().to_string(names);
  r.results["series_at_infinity"] = si.reduced().to_string(names);
  r.results["agree"] = pf == si;
  r.pass = pf == si;

  // the Guillemin-Kalkman route applies when X is the residue variable and
  // every denominator form involves it
  const auto& den = p.expression.denominator();
  bool gk = p.residue_variable == 0;
  for (const auto& [form, k] : den.factors()) gk = gk && form[0] != 0;
  if (gk) {
    auto pt = point_algebra();
    EulerData e{pt, {}};
    for (const auto& [form, k] : den.factors())
      for (int i = 0; i < k; ++i) e.lines.push_back({form, pt->zero()});
    Polynomial v = gk_residue(EquivariantPolynomial::from_polynomial(pt, p.expression.numerator()), e);
    bool ok = Fraction(v) == pf;
    r.results["guillemin_kalkman"] = v.to_string(names);
    r.results["guillemin_kalkman_agrees"] = ok;
    r.pass = r.pass && ok;
  }
  return r;
}

Report cmd_kernel(const Dataset& d, const KernelOptions& opt) {
  const auto& s = d.space;
  int modes = (opt.circle ? 1 : 0) + (opt.full ? 1 : 0) + (opt.nonabelian ? 1 : 0);
  if (modes != 1) throw InputError("flags", "choose exactly one of --circle, --full, --nonabelian");
  if (opt.max_degree < 0) throw InputError("--max-degree", "must be nonnegative");
  if (opt.chamber_box < 1) throw InputError("--chamber-box", "must be positive");
  const int max_degree = opt.max_degree - opt.max_degree % 2;
  Report r;
  r.command = "kernel";
  r.input_digest = dataset_digest(d);
  r.parameters["max_degree"] = max_degree;
  std::optional<RestrictedClass> calibration;
  if (opt.calibrate) {
    calibration = parse_class(s, *opt.calibrate);
    r.parameters["calibrate"] = *opt.calibrate;
  }

  if (opt.circle) {
    CircleDirection xi = circle(s, *opt.circle);
    r.parameters["mode"] = "circle";
    r.parameters["circle"] = xi.xi;
    DegreeTruncatedModel model(s, std::max(max_degree, s.dim_m()));
    auto rep = check_theorem_secondmain(model, xi, max_degree);
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
      Json j = comparison_json(row.comparison, "residue_kernel", "tolman_weitsman_sum");
      j["minus"] = subspace_json(row.minus);
      j["plus"] = subspace_json(row.plus);
      j["direct_sum"] = row.direct;
      j["test_set_stable"] = row.stable;
      rows.push_back(j);
    }
    r.results["labels"] = labels_json(model, max_degree);
    r.results["degrees"] = rows;
    if (calibration) r.results["calibration"] = kappa_S_integral(s, *calibration, xi).value.to_string(s.variables().names());
    r.pass = rep.pass;
    return r;
  }

  Frame frame = choose_frame(s, opt.ordering, opt.frame, opt.delta);
  require_generic_frame(s, frame);
  r.parameters["frame"] = frame_json(frame);

  if (opt.full) {
    r.parameters["mode"] = "full";
    r.parameters["chamber_box"] = opt.chamber_box;
    DegreeTruncatedModel model(s, std::max(max_degree, s.dim_m()));
    auto rep = full_kernel(model, frame, max_degree, ChamberStrategy::Auto, opt.chamber_box);
    Json chambers;
    chambers["exact"] = rep.chambers.exact;
    Json dirs = Json::array();
    for (const auto& c : rep.chambers.directions) dirs.push_back(c.xi);
    chambers["directions"] = dirs;
    r.results["chambers"] = chambers;
    r.results["labels"] = labels_json(model, max_degree);
    Json tw = Json::array(), rs = Json::array();
    for (const auto& c : rep.tolman_weitsman) tw.push_back(comparison_json(c, "kernel_kappa_T", "chamber_sum"));
    for (const auto& c : rep.residue_sum) rs.push_back(comparison_json(c, "kernel_kappa_T", "residue_kernel_sum"));
    r.results["tolman_weitsman"] = tw;
    r.results["residue_kernels"] = rs;
    if (calibration) r.results["calibration"] = rational_json(kappa_T_integral(s, *calibration, frame));
    r.warnings = rep.warnings;
    r.pass = rep.pass;
    return r;
  }

  if (!d.weyl) throw InputError("--nonabelian", "dataset has no Weyl data");
  const auto& w = *d.weyl;
  r.parameters["mode"] = "nonabelian";
  DegreeTruncatedModel model(s, std::max(max_degree + 2 * w.d_degree(), s.dim_m()));
  auto rep = check_theorem_nonabelian(model, w, frame, max_degree);
  auto fc = firstchar_kernel(model, w, frame, max_degree);
  Json rows = Json::array();
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    Json j;
    j["degree"] = row.degree;
    j["invariant_basis"] = matrix_json(invariant_slice(model, w, row.degree).basis);
    j["kappa_K_kernel"] = subspace_json(row.kappa_K_kernel);
    j["D_pullback"] = subspace_json(row.d_pullback);
    j["D2_pullback"] = subspace_json(row.d2_pullback);
    j["equal"] = row.equal;
    if (!row.witness.empty()) j["witness"] = row.witness;
    j["firstchar_image"] = subspace_json(fc.rows[i].image);
    j["firstchar_equal"] = fc.rows[i].equal;
    if (!fc.rows[i].witness.empty()) j["firstchar_witness"] = fc.rows[i].witness;
    rows.push_back(j);
  }
  r.results["labels"] = labels_json(model, max_degree);
  r.results["degrees"] = rows;
  if (calibration) {
    if (!is_invariant(s, w, *calibration)) throw InputError("--calibrate", "class is not W-invariant");
    r.results["calibration"] = rational_json(kappa_K_integral(s, w, *calibration, frame));
  }
  r.pass = rep.pass && fc.pass;
  return r;
}

Report cmd_integrate(const Dataset& d, const IntegrateOptions& opt) {
  const auto& s = d.space;
  RestrictedClass eta = parse_class(s, opt.expression);
  Report r;
  r.command = "integrate";
  r.input_digest = dataset_digest(d);
  r.parameters["class"] = opt.expression;
  r.results["degree"] = eta.degree();
  AbbvResult a = abbv_sum(s, eta);
  r.results["abbv_polynomial"] = a.polynomial;
  r.results["abbv"] = a.polynomial ? a.value.to_string(s.variables().names()) : a.sum.to_string(s.variables().names());
  r.pass = a.polynomial;
  if (opt.circle) {
    CircleDirection xi = circle(s, *opt.circle);
    r.parameters["circle"] = xi.xi;
    r.results["kappa_S"] = kappa_S_integral(s, eta, xi).value.to_string(s.variables().names());
  }
  Frame frame = choose_frame(s, opt.ordering, opt.frame, opt.delta);
  require_generic_frame(s, frame);
  r.parameters["frame"] = frame_json(frame);
  r.results["kappa_T"] = rational_json(kappa_T_integral(s, eta, frame));
  if (d.weyl && is_invariant(s, *d.weyl, eta)) r.results["kappa_K"] = rational_json(kappa_K_integral(s, *d.weyl, eta, frame));
  return r;
}

}  // namespace eqloc::cli
