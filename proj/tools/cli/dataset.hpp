#pragma once

#include "eqloc/examples.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace eqloc::cli {

using Json = nlohmann::ordered_json;

struct Issue {
  std::string path;
  std::string message;
};

/// Unusable input; carries every problem found, each with a JSON path.
class InputError : public std::runtime_error {
 public:
  explicit InputError(std::vector<Issue> issues);
  InputError(const std::string& path, const std::string& message) : InputError(std::vector<Issue>{{path, message}}) {}
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

Dataset dataset_from_json(const Json& j, const std::string& name = "dataset");
Json dataset_to_json(const Dataset& d);

/// "builtin:<name>" or a path to a JSON file.
Dataset load_dataset(const std::string& reference);

}  // namespace eqloc::cli
