#pragma once

#include "eqloc/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eqloc {

struct Dataset {
  std::string name;
  HamiltonianSpace space;
  std::optional<WeylData> weyl;
};

/// s2, s2xs2-t2, s2xs2-nonisolated, s2cubed-su2, cp2-fixed-line.
std::vector<std::string> builtin_names();
Dataset builtin_dataset(const std::string& name);

}  // namespace eqloc
