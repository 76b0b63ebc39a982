#pragma once

#include "cli/dataset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eqloc::cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kInputError = 2 };

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

/// Digest of the canonical serialization, so a built-in and its exported
/// file hash alike.
std::string dataset_digest(const Dataset& d);

struct Report {
  std::string command;
  std::string input_digest;
  Json parameters = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;
  bool pass = true;

  Json to_json() const;
  std::string to_text() const;
  int exit_code() const { return pass ? kPass : kCheckFailure; }
};

std::string render(const Report& r, const std::string& format);

Json rational_json(const Rational& q);
Json vector_json(const std::vector<Rational>& v);
Json matrix_json(const std::vector<std::vector<Rational>>& m);

}  // namespace eqloc::cli
