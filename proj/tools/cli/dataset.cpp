#include "cli/dataset.hpp"

#include "cli/report.hpp"
#include "eqloc/weyl.hpp"

#include <fstream>
#include <sstream>

namespace eqloc::cli {

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::string out;
  for (const auto& i : issues) {
    if (!out.empty()) out += "\n";
    out += i.path + ": " + i.message;
  }
  return out;
}

// Collects schema problems instead of stopping at the first one.
class Reader {
 public:
  std::vector<Issue> issues;

  void fail(const std::string& path, const std::string& message) { issues.push_back({path, message}); }

  const Json* field(const Json& obj, const std::string& path, const char* key, bool required = true) {
    if (!obj.is_object()) {
      fail(path, "expected an object");
      return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path + "." + key, "missing");
      return nullptr;
    }
    return &*it;
  }

  bool array(const Json* j, const std::string& path) {
    if (!j) return false;
    if (!j->is_array()) {
      fail(path, "expected an array");
      return false;
    }
    return true;
  }

  long integer(const Json* j, const std::string& path, long fallback = 0) {
    if (!j) return fallback;
    if (!j->is_number_integer()) {
      fail(path, "expected an integer");
      return fallback;
    }
    return j->get<long>();
  }

  std::string string(const Json* j, const std::string& path) {
    if (!j) return "";
    if (!j->is_string()) {
      fail(path, "expected a string");
      return "";
    }
    return j->get<std::string>();
  }

  Rational rational(const Json* j, const std::string& path) {
    if (!j) return 0;
    if (j->is_number_integer()) return Rational(j->get<long>());
    if (!j->is_string()) {
      fail(path, "expected a rational string \"p/q\"");
      return 0;
    }
    try {
      return parse_rational(j->get<std::string>());
    } catch (const std::exception& e) {
      fail(path, e.what());
      return 0;
    }
  }

  std::vector<Rational> rationals(const Json* j, const std::string& path) {
    std::vector<Rational> out;
    if (!array(j, path)) return out;
    for (std::size_t i = 0; i < j->size(); ++i) out.push_back(rational(&(*j)[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

  std::vector<long> integers(const Json* j, const std::string& path) {
    std::vector<long> out;
    if (!array(j, path)) return out;
    for (std::size_t i = 0; i < j->size(); ++i) out.push_back(integer(&(*j)[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

  void check() const {
    if (!issues.empty()) throw InputError(issues);
  }
};

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

AlgebraPtr read_algebra(Reader& r, const Json& j, const std::string& path) {
  const std::size_t before = r.issues.size();
  std::vector<std::string> names;
  const Json* basis = r.field(j, path, "basis");
  if (r.array(basis, path + ".basis"))
    for (std::size_t i = 0; i < basis->size(); ++i) names.push_back(r.string(&(*basis)[i], at(path + ".basis", i)));
  std::vector<int> degrees;
  for (long d : r.integers(r.field(j, path, "degrees"), path + ".degrees")) degrees.push_back(static_cast<int>(d));
  std::vector<StructureConstant> table;
  const Json* mt = r.field(j, path, "mult_table");
  if (r.array(mt, path + ".mult_table"))
    for (std::size_t i = 0; i < mt->size(); ++i) {
      std::string p = at(path + ".mult_table", i);
      const Json& e = (*mt)[i];
      if (!e.is_array() || e.size() != 4) {
        r.fail(p, "expected a triple with value [i, j, k, \"p/q\"]");
        continue;
      }
      long a = r.integer(&e[0], p + "[0]"), b = r.integer(&e[1], p + "[1]"), c = r.integer(&e[2], p + "[2]");
      Rational v = r.rational(&e[3], p + "[3]");
      long n = static_cast<long>(names.size());
      if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n) {
        r.fail(p, "basis index out of range");
        continue;
      }
      table.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), static_cast<std::size_t>(c), v});
    }
  std::vector<Rational> integral = r.rationals(r.field(j, path, "integral"), path + ".integral");
  long top = r.integer(r.field(j, path, "top_degree"), path + ".top_degree");
  if (degrees.size() != names.size()) r.fail(path + ".degrees", "length differs from basis");
  if (integral.size() != names.size()) r.fail(path + ".integral", "length differs from basis");
  if (r.issues.size() != before) return nullptr;
  try {
    return make_algebra(GradedAlgebra(names, degrees, table, integral, static_cast<int>(top)));
  } catch (const std::exception& e) {
    r.fail(path, e.what());
    return nullptr;
  }
}


Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

}  // namespace

InputError::InputError(std::vector<Issue> issues) : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

Dataset dataset_from_json(const Json& j, const std::string& name) {
  Reader r;
  long rank = r.integer(r.field(j, "$", "torus_rank"), "$.torus_rank");
  long dim_m = r.integer(r.field(j, "$", "dim_M"), "$.dim_M");
  std::vector<std::string> var_names;
  const Json* vars = r.field(j, "$", "variables");
  if (r.array(vars, "$.variables"))
    for (std::size_t i = 0; i < vars->size(); ++i) var_names.push_back(r.string(&(*vars)[i], at("$.variables", i)));
  if (rank < 1) r.fail("$.torus_rank", "must be positive");
  if (static_cast<long>(var_names.size()) != rank) r.fail("$.variables", "expected torus_rank names");
  if (rank < 1 || static_cast<long>(var_names.size()) != rank) r.check();
  Variables variables(var_names);
  const std::size_t n = var_names.size();

  std::vector<FixedComponent> comps;
  const Json* cj = r.field(j, "$", "components");
  if (r.array(cj, "$.components"))
    for (std::size_t c = 0; c < cj->size(); ++c) {
      std::string p = at("$.components", c);
      const Json& e = (*cj)[c];
      FixedComponent fc;
      fc.name = r.string(r.field(e, p, "name"), p + ".name");
      fc.moment = r.rationals(r.field(e, p, "moment"), p + ".moment");
      if (fc.moment.size() != n) r.fail(p + ".moment", "expected torus_rank entries");
      const Json* aj = r.field(e, p, "algebra");
      if (aj) fc.algebra = read_algebra(r, *aj, p + ".algebra");
      const Json* lj = r.field(e, p, "normal_lines");
      if (r.array(lj, p + ".normal_lines"))
        for (std::size_t l = 0; l < lj->size(); ++l) {
          std::string lp = at(p + ".normal_lines", l);
          NormalLine line;
          line.weight = r.integers(r.field((*lj)[l], lp, "weight"), lp + ".weight");
          line.chern = r.rationals(r.field((*lj)[l], lp, "chern"), lp + ".chern");
          if (line.weight.size() != n) r.fail(lp + ".weight", "expected torus_rank entries");
          if (fc.algebra && line.chern.size() != fc.algebra->dim())
            r.fail(lp + ".chern", "expected one coefficient per algebra basis element");
          fc.normal_lines.push_back(std::move(line));
        }
      comps.push_back(std::move(fc));
    }
  r.check();

  std::vector<Generator> gens;
  const Json* gj = r.field(j, "$", "generators");
  if (r.array(gj, "$.generators"))
    for (std::size_t g = 0; g < gj->size(); ++g) {
      std::string p = at("$.generators", g);
      const Json& e = (*gj)[g];
      Generator gen;
      gen.name = r.string(r.field(e, p, "name"), p + ".name");
      gen.degree = static_cast<int>(r.integer(r.field(e, p, "degree"), p + ".degree"));
      std::vector<EquivariantPolynomial> parts;
      for (const auto& c : comps) parts.emplace_back(c.algebra, n);
      const Json* rj = r.field(e, p, "restrictions");
      if (rj && !rj->is_object()) r.fail(p + ".restrictions", "expected an object keyed by component name");
      if (rj && rj->is_object())
        for (const auto& [cname, terms] : rj->items()) {
          std::string rp = p + ".restrictions." + cname;
          std::size_t ci = comps.size();
          for (std::size_t c = 0; c < comps.size(); ++c)
            if (comps[c].name == cname) ci = c;
          if (ci == comps.size()) {
            r.fail(rp, "unknown component");
            continue;
          }
          if (!r.array(&terms, rp)) continue;
          for (std::size_t t = 0; t < terms.size(); ++t) {
            std::string tp = at(rp, t);
            Rational coeff = r.rational(r.field(terms[t], tp, "coeff"), tp + ".coeff");
            std::vector<long> ex = r.integers(r.field(terms[t], tp, "exponents"), tp + ".exponents");
            long b = r.integer(r.field(terms[t], tp, "basis_index"), tp + ".basis_index");
            if (ex.size() != n) {
              r.fail(tp + ".exponents", "expected torus_rank entries");
              continue;
            }
            if (std::any_of(ex.begin(), ex.end(), [](long x) { return x < 0; })) {
              r.fail(tp + ".exponents", "negative exponent");
              continue;
            }
            if (b < 0 || b >= static_cast<long>(comps[ci].algebra->dim())) {
              r.fail(tp + ".basis_index", "out of range");
              continue;
            }
            Exponents e2(ex.begin(), ex.end());
            parts[ci].add(static_cast<std::size_t>(b), Polynomial::monomial(e2) * coeff);
          }
        }
      try {
        if (r.issues.empty()) gen.value = RestrictedClass(std::move(parts), gen.degree);
      } catch (const std::exception& ex) {
        r.fail(p, ex.what());
      }
      gens.push_back(std::move(gen));
    }
  r.check();

  std::optional<HamiltonianSpace> space;
  try {
    space.emplace(variables, static_cast<int>(dim_m), std::move(comps), std::move(gens));
  } catch (const std::exception& e) {
    throw InputError("$", e.what());
  }

  std::optional<WeylData> weyl;
  const Json* wj = r.field(j, "$", "weyl", false);
  if (wj) {
    std::vector<WeylElement> elements;
    const Json* ej = r.field(*wj, "$.weyl", "elements");
    if (r.array(ej, "$.weyl.elements"))
      for (std::size_t w = 0; w < ej->size(); ++w) {
        std::string p = at("$.weyl.elements", w);
        const Json& e = (*ej)[w];
        WeylElement el;
        const Json* mj = r.field(e, p, "matrix");
        if (r.array(mj, p + ".matrix"))
          for (std::size_t i = 0; i < mj->size(); ++i) el.matrix.push_back(r.integers(&(*mj)[i], at(p + ".matrix", i)));
        for (long f : r.integers(r.field(e, p, "perm"), p + ".perm")) {
          if (f < 0 || f >= static_cast<long>(space->components().size())) r.fail(p + ".perm", "component index out of range");
          el.perm.push_back(static_cast<std::size_t>(std::max(0L, f)));
        }
        const Json* aj = r.field(e, p, "algebra_maps");
        if (r.array(aj, p + ".algebra_maps"))
          for (std::size_t f = 0; f < aj->size(); ++f) {
            std::string fp = at(p + ".algebra_maps", f);
            RationalMatrix m;
            if (r.array(&(*aj)[f], fp))
              for (std::size_t i = 0; i < (*aj)[f].size(); ++i) m.push_back(r.rationals(&(*aj)[f][i], at(fp, i)));
            el.algebra_maps.push_back(std::move(m));
          }
        elements.push_back(std::move(el));
      }
    std::vector<std::vector<long>> roots;
    const Json* rj = r.field(*wj, "$.weyl", "positive_roots");
    if (r.array(rj, "$.weyl.positive_roots"))
      for (std::size_t i = 0; i < rj->size(); ++i) roots.push_back(r.integers(&(*rj)[i], at("$.weyl.positive_roots", i)));
    r.check();
    try {
      weyl.emplace(*space, std::move(elements), std::move(roots));
    } catch (const std::exception& e) {
      throw InputError("$.weyl", e.what());
    }
  }
  return Dataset{name, std::move(*space), std::move(weyl)};
}

Json dataset_to_json(const Dataset& d) {
  const auto& s = d.space;
  Json j;
  j["torus_rank"] = s.nvars();
  j["dim_M"] = s.dim_m();
  j["variables"] = s.variables().names();
  Json comps = Json::array();
  for (const auto& c : s.components()) {
    Json cj;
    cj["name"] = c.name;
    cj["moment"] = rationals_json(c.moment);
    Json a;
    a["basis"] = c.algebra->names();
    a["degrees"] = c.algebra->degrees();
    Json table = Json::array();
    for (const auto& e : c.algebra->table_entries()) table.push_back(Json::array({e.left, e.right, e.result, rational_json(e.value)}));
    a["mult_table"] = table;
    a["integral"] = rationals_json(c.algebra->integral());
    a["top_degree"] = c.algebra->top_degree();
    cj["algebra"] = a;
    Json lines = Json::array();
    for (const auto& l : c.normal_lines) {
      Json lj;
      lj["weight"] = l.weight;
      lj["chern"] = rationals_json(l.chern);
      lines.push_back(lj);
    }
    cj["normal_lines"] = lines;
    comps.push_back(cj);
  }
  j["components"] = comps;
  Json gens = Json::array();
  for (const auto& g : s.generators()) {
    Json gj;
    gj["name"] = g.name;
    gj["degree"] = g.degree;
    Json res = Json::object();
    for (std::size_t f = 0; f < s.components().size(); ++f) {
      Json terms = Json::array();
      const auto& part = g.value.at(f);
      for (std::size_t b = 0; b < part.algebra()->dim(); ++b)
        for (const auto& [e, c] : part.coefficient(b).terms()) {
          Json t;
          t["coeff"] = rational_json(c);
          t["exponents"] = e;
          t["basis_index"] = b;
          terms.push_back(t);
        }
      res[s.components()[f].name] = terms;
    }
    gj["restrictions"] = res;
    gens.push_back(gj);
  }
  j["generators"] = gens;
  if (d.weyl) {
    Json w;
    Json els = Json::array();
    for (const auto& e : d.weyl->elements()) {
      Json ej;
      ej["matrix"] = e.matrix;
      ej["perm"] = e.perm;
      Json maps = Json::array();
      for (const auto& m : e.algebra_maps) {
        Json mj = Json::array();
        for (const auto& row : m) mj.push_back(rationals_json(row));
        maps.push_back(mj);
      }
      ej["algebra_maps"] = maps;
      els.push_back(ej);
    }
    w["elements"] = els;
    w["positive_roots"] = d.weyl->positive_roots();
    j["weyl"] = w;
  }
  return j;
}

Dataset load_dataset(const std::string& reference) {
  const std::string prefix = "builtin:";
  if (reference.rfind(prefix, 0) == 0) {
    try {
      return builtin_dataset(reference.substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw InputError("dataset", e.what());
    }
  }
  std::ifstream in(reference);
  if (!in) throw InputError("dataset", "cannot open '" + reference + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("dataset", std::string("invalid JSON: ") + e.what());
  }
  return dataset_from_json(j, reference);
}

}  // namespace eqloc::cli
