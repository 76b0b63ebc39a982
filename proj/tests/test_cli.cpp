#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli/commands.hpp"
#include "eqloc/localization.hpp"

using namespace eqloc;
using namespace eqloc::cli;

namespace {

Json exported(const std::string& name) { return dataset_to_json(builtin_dataset(name)); }

bool has_issue(const InputError& e, const std::string& path, const std::string& fragment) {
  for (const auto& i : e.issues())
    if (i.path == path && i.message.find(fragment) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("every bundled dataset validates and round-trips") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    Json j = exported(name);
    Dataset back = dataset_from_json(j, name);
    CHECK(dataset_to_json(back) == j);
    CHECK(dataset_digest(back) == dataset_digest(builtin_dataset(name)));
    Report r = cmd_validate(back, {});
    CHECK(r.pass);
    CHECK(r.exit_code() == kPass);
  }
}

TEST_CASE("flipped Euler weight is reported as non-polynomial") {
  Json j = exported("s2");
  j["components"][1]["normal_lines"][0]["weight"] = Json::array({-1});
  Report r = cmd_validate(dataset_from_json(j), {});
  CHECK_FALSE(r.pass);
  CHECK(r.exit_code() == kCheckFailure);
  const auto& unit = r.results["abbv"][0];
  CHECK(unit["class"] == "1");
  CHECK(unit["polynomial"] == false);
  CHECK(unit["sum"] == "(-2)/((X))");
}

TEST_CASE("non-associative table names the triple") {
  Json j = exported("s2");
  Json alg;
  alg["basis"] = {"1", "a", "d", "b", "c"};
  alg["degrees"] = {0, 2, 2, 4, 6};
  Json table = Json::array();
  for (int i = 0; i < 5; ++i) {
    table.push_back({0, i, i, "1"});
    if (i) table.push_back({i, 0, i, "1"});
  }
  for (auto t : {std::array<int, 3>{1, 1, 3}, {1, 3, 4}, {3, 1, 4}, {2, 3, 4}, {3, 2, 4}})
    table.push_back({t[0], t[1], t[2], "1"});
  alg["mult_table"] = table;
  alg["integral"] = {"0", "0", "0", "0", "1"};
  alg["top_degree"] = 6;
  j["components"][0]["algebra"] = alg;
  j["components"][0]["normal_lines"][0]["chern"] = {"0", "0", "0", "0", "0"};
  try {
    dataset_from_json(j);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(has_issue(e, "$.components[0].algebra", "associativity fails for (a, a, d)"));
  }
}

TEST_CASE("schema violations are itemized with paths") {
  Json j = exported("s2xs2-t2");
  j.erase("dim_M");
  j["components"][2]["moment"][1] = "1/0";
  j["components"][3]["normal_lines"][0]["weight"] = {1};
  try {
    dataset_from_json(j);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.issues().size() == 3);
    CHECK(has_issue(e, "$.dim_M", "missing"));
    CHECK(has_issue(e, "$.components[2].moment[1]", ""));
    CHECK(has_issue(e, "$.components[3].normal_lines[0].weight", "torus_rank"));
  }
  Json g = exported("s2");
  g["generators"][1]["restrictions"]["Q"] = Json::array();
  CHECK_THROWS_AS(dataset_from_json(g), InputError);
  CHECK_THROWS_AS(load_dataset("builtin:nope"), InputError);
  CHECK_THROWS_AS(load_dataset("/nonexistent/file.json"), InputError);
}

TEST_CASE("residue command") {
  struct Case {
    const char* text;
    const char* value;
  };
  for (auto c : {Case{"variables: X\nnumerator: 1\ndenominator: X\n", "1"},
                 Case{"variables: X Y1 Y2\nnumerator: X\ndenominator: (X - Y1)*(X - Y2)\n", "1"},
                 Case{"variables: X Y1\nnumerator: 1\ndenominator: X*(X - Y1)\n", "0"},
                 Case{"variables: X Y1\nnumerator: X^2\ndenominator: (X - Y1)^3\n", "1"}}) {
    CAPTURE(c.text);
    Report r = cmd_residue(c.text, "input");
    CHECK(r.pass);
    CHECK(r.results["partial_fractions"] == c.value);
    CHECK(r.results["series_at_infinity"] == c.value);
    CHECK(r.results["guillemin_kalkman"] == c.value);
  }
  // Y1 is the residue variable: no Guillemin-Kalkman route
  Report y = cmd_residue("variables: X Y1\nvariable: Y1\nnumerator: 1\ndenominator: Y1*(X - Y1)\n", "input");
  CHECK(y.pass);
  CHECK_FALSE(y.results.contains("guillemin_kalkman"));
  try {
    cmd_residue("variables: X\nnumerator: X +* 2\ndenominator: X\n", "input");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.issues()[0].message.rfind("2:", 0) == 0);
  }
}

TEST_CASE("kernel command verdicts") {
  KernelOptions circle;
  circle.circle = std::vector<long>{1};
  Report s2 = cmd_kernel(builtin_dataset("s2"), circle);
  CHECK(s2.pass);
  CHECK(s2.results["degrees"].size() == 3);

  KernelOptions full;
  full.full = true;
  Report t2 = cmd_kernel(builtin_dataset("s2xs2-t2"), full);
  CHECK(t2.pass);
  CHECK(t2.results["chambers"]["directions"].size() == 8);
  CHECK(t2.results["chambers"]["exact"] == true);

  KernelOptions na;
  na.nonabelian = true;
  na.max_degree = 6;
  na.calibrate = "1";
  Report su2 = cmd_kernel(builtin_dataset("s2cubed-su2"), na);
  CHECK(su2.pass);
  CHECK(su2.results["calibration"] == "2");
  CHECK(su2.results["degrees"][0]["kappa_K_kernel"]["dimension"] == 0);

  CHECK_THROWS_AS(cmd_kernel(builtin_dataset("s2"), na), InputError);
  KernelOptions none;
  CHECK_THROWS_AS(cmd_kernel(builtin_dataset("s2"), none), InputError);
  KernelOptions both = circle;
  both.full = true;
  CHECK_THROWS_AS(cmd_kernel(builtin_dataset("s2"), both), InputError);
}

TEST_CASE("genericity failures name the component") {
  KernelOptions opt;
  opt.circle = std::vector<long>{1, 1};
  try {
    cmd_kernel(builtin_dataset("s2xs2-t2"), opt);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    bool named = false;
    for (const auto& i : e.issues()) named = named || i.message.find("NS") != std::string::npos;
    CHECK(named);
  }
  KernelOptions ordered;
  ordered.full = true;
  ordered.ordering = std::vector<std::string>{"X", "Y1"};
  CHECK_THROWS_AS(cmd_kernel(builtin_dataset("s2xs2-t2"), ordered), InputError);
  ordered.ordering = std::vector<std::string>{"X", "Z"};
  CHECK_THROWS_AS(cmd_kernel(builtin_dataset("s2xs2-t2"), ordered), InputError);
}

TEST_CASE("class expressions and integrate") {
  const auto d = builtin_dataset("s2xs2-t2");
  RestrictedClass c = parse_class(d.space, "tau1*tau2");
  CHECK(c.degree() == 4);
  CHECK(c == d.space.generators()[1].value * d.space.generators()[2].value);
  CHECK_THROWS_AS(parse_class(d.space, "tau1 + tau1*tau2"), InputError);
  CHECK_THROWS_AS(parse_class(d.space, "tau3"), InputError);

  IntegrateOptions opt;
  opt.expression = "tau1*tau2";
  opt.circle = std::vector<long>{2, 1};
  Report r = cmd_integrate(d, opt);
  CHECK(r.pass);
  CHECK(r.results["abbv"] == "1");
  opt.expression = "1";
  CHECK(cmd_integrate(d, opt).results["kappa_T"] == "1");
}

TEST_CASE("reports are deterministic") {
  KernelOptions full;
  full.full = true;
  auto a = render(cmd_kernel(builtin_dataset("s2xs2-t2"), full), "json");
  auto b = render(cmd_kernel(builtin_dataset("s2xs2-t2"), full), "json");
  CHECK(a == b);
  auto ta = render(cmd_validate(builtin_dataset("s2cubed-su2"), {}), "text");
  auto tb = render(cmd_validate(builtin_dataset("s2cubed-su2"), {}), "text");
  CHECK(ta == tb);
  CHECK(fnv1a64("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
}

TEST_CASE("explicit frames") {
  KernelOptions opt;
  opt.full = true;
  opt.frame = std::vector<std::vector<long>>{{1, 2}, {0, 1}};
  opt.delta = -1;
  Report r = cmd_kernel(builtin_dataset("s2xs2-t2"), opt);
  CHECK(r.pass);
  CHECK(r.parameters["frame"]["columns"][0] == Json::array({1, 2}));
  opt.frame = std::vector<std::vector<long>>{{2, 0}, {0, 1}};
  CHECK_THROWS_AS(cmd_kernel(builtin_dataset("s2xs2-t2"), opt), InputError);
  opt.ordering = std::vector<std::string>{"X", "Y1"};
  CHECK_THROWS_AS(cmd_kernel(builtin_dataset("s2xs2-t2"), opt), InputError);
  CHECK(parse_columns("1,2;0,1", "f") == std::vector<std::vector<long>>{{1, 2}, {0, 1}});
}
