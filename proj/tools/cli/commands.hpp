#pragma once

#include "cli/report.hpp"

#include <optional>

namespace eqloc::cli {

struct ValidateOptions {
  /// Highest degree of generator products tested; defaults to dim_M.
  std::optional<int> max_degree;
};

struct KernelOptions {
  std::optional<std::vector<long>> circle;
  bool full = false;
  bool nonabelian = false;
  int max_degree = 4;
  /// Variable names or indices, in the order the residues are taken.
  std::optional<std::vector<std::string>> ordering;
  /// Unimodular basis given by its columns; excludes `ordering`.
  std::optional<std::vector<std::vector<long>>> frame;
  Rational delta = 1;
  std::optional<std::string> calibrate;
  long chamber_box = 8;
};

struct IntegrateOptions {
  std::string expression;
  std::optional<std::vector<long>> circle;
  std::optional<std::vector<std::string>> ordering;
  std::optional<std::vector<std::vector<long>>> frame;
  Rational delta = 1;
};

Report cmd_validate(const Dataset& d, const ValidateOptions& opt);
Report cmd_residue(const std::string& text, const std::string& source);
Report cmd_kernel(const Dataset& d, const KernelOptions& opt);
Report cmd_integrate(const Dataset& d, const IntegrateOptions& opt);

/// Class given as a polynomial in the torus variables and generator names,
/// e.g. "tau1*tau2 - X*tau1".
RestrictedClass parse_class(const HamiltonianSpace& s, const std::string& text);

/// Comma-separated integers.
std::vector<long> parse_integer_list(const std::string& text, const std::string& what);

/// Columns separated by ';', entries by ','.
std::vector<std::vector<long>> parse_columns(const std::string& text, const std::string& what);

}  // namespace eqloc::cli
