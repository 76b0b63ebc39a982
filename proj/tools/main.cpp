#include "cli/commands.hpp"

#include "eqloc/expression.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/residue.hpp"
#include "eqloc/weyl.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace eqloc;
using namespace eqloc::cli;

namespace {

struct Output {
  std::string path;
  std::string format = "json";
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("--output", out.path, "Write the report to this file");
  cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "text"}));
}

int emit(const Report& r, const Output& out) {
  std::string text = render(r, out.format);
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw InputError("--output", "cannot write '" + out.path + "'");
    f << text;
  }
  return r.exit_code();
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(item);
  }
  return out;
}

Rational parse_delta(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw InputError("--delta", e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("expression", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact localization and kernel computations for Hamiltonian torus spaces"};
  app.require_subcommand(1);
  Output out;
  std::string dataset, expression_file, circle_text, ordering_text, frame_text, delta_text = "1", calibrate, class_text, export_dir;
  int max_degree = 4;
  int validate_degree = -1;
  long box = 8;
  bool full = false, nonabelian = false;

  auto* validate = app.add_subcommand("validate", "Structural checks and ABBV polynomiality");
  validate->add_option("dataset", dataset, "Dataset file or builtin:<name>")->required();
  validate->add_option("--max-degree", validate_degree, "Highest degree of generator products (default dim_M)");
  add_output(validate, out);

  auto* residue = app.add_subcommand("residue", "Res_X^+ of an expression file by both methods");
  residue->add_option("expression", expression_file, "Expression file")->required();
  add_output(residue, out);

  auto* kernel = app.add_subcommand("kernel", "Kernel theorems");
  kernel->add_option("dataset", dataset, "Dataset file or builtin:<name>")->required();
  kernel->add_option("--circle", circle_text, "Circle direction, comma-separated integers");
  kernel->add_flag("--full", full, "Full torus kernel against chamber sums");
  kernel->add_flag("--nonabelian", nonabelian, "Weyl-invariant kernel theorem");
  kernel->add_option("--max-degree", max_degree, "Highest degree checked");
  kernel->add_option("--ordering", ordering_text, "Residue order: variable names or indices, comma-separated");
  kernel->add_option("--frame", frame_text, "Residue basis by columns, e.g. 2,1;1,0");
  kernel->add_option("--delta", delta_text, "Orientation scalar p/q");
  kernel->add_option("--calibrate", calibrate, "Class to integrate as a sign check");
  kernel->add_option("--chamber-box", box, "Box radius for lattice chamber search");
  add_output(kernel, out);

  auto* integrate = app.add_subcommand("integrate", "Integrals of one class");
  integrate->add_option("dataset", dataset, "Dataset file or builtin:<name>")->required();
  integrate->add_option("--class", class_text, "Polynomial in torus variables and generators")->required();
  integrate->add_option("--circle", circle_text, "Circle direction for kappa_S");
  integrate->add_option("--ordering", ordering_text, "Residue order for kappa_T");
  integrate->add_option("--frame", frame_text, "Residue basis by columns for kappa_T");
  integrate->add_option("--delta", delta_text, "Orientation scalar p/q");
  add_output(integrate, out);

  auto* exporter = app.add_subcommand("export", "Write the built-in datasets as JSON");
  exporter->add_option("directory", export_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) {
      ValidateOptions opt;
      if (validate_degree >= 0) opt.max_degree = validate_degree;
      return emit(cmd_validate(load_dataset(dataset), opt), out);
    }
    if (*residue) return emit(cmd_residue(read_file(expression_file), expression_file), out);
    if (*kernel) {
      KernelOptions opt;
      if (!circle_text.empty()) opt.circle = parse_integer_list(circle_text, "--circle");
      opt.full = full;
      opt.nonabelian = nonabelian;
      opt.max_degree = max_degree;
      if (!ordering_text.empty()) opt.ordering = split_names(ordering_text);
      if (!frame_text.empty()) opt.frame = parse_columns(frame_text, "--frame");
      opt.delta = parse_delta(delta_text);
      if (!calibrate.empty()) opt.calibrate = calibrate;
      opt.chamber_box = box;
      return emit(cmd_kernel(load_dataset(dataset), opt), out);
    }
    if (*integrate) {
      IntegrateOptions opt;
      opt.expression = class_text;
      if (!circle_text.empty()) opt.circle = parse_integer_list(circle_text, "--circle");
      if (!ordering_text.empty()) opt.ordering = split_names(ordering_text);
      if (!frame_text.empty()) opt.frame = parse_columns(frame_text, "--frame");
      opt.delta = parse_delta(delta_text);
      return emit(cmd_integrate(load_dataset(dataset), opt), out);
    }
    if (*exporter) {
      std::filesystem::create_directories(export_dir);
      for (const auto& name : builtin_names()) {
        std::ofstream f(std::filesystem::path(export_dir) / (name + ".json"), std::ios::binary);
        f << dataset_to_json(builtin_dataset(name)).dump(2) << "\n";
      }
      return kPass;
    }
  } catch (const InputError& e) {
    for (const auto& i : e.issues()) std::cerr << "error: " << i.path << ": " << i.message << "\n";
    return kInputError;
  } catch (const GenericityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NonGenericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SymmetryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
