#pragma once

#include "eqloc/space.hpp"

#include <string>
#include <vector>

namespace eqloc {

enum class ChamberStrategy { Auto, Exact, Lattice };

struct ChamberEnumeration {
  std::vector<CircleDirection> directions;
  /// Sign vectors: one entry per component moment, then per normal line.
  std::vector<std::vector<int>> patterns;
  bool exact = true;
  std::vector<std::string> warnings;
};

/// One integer point in every chamber of the central arrangement with the
/// given nonzero integer normals in Z^dim.
std::vector<std::vector<long>> chamber_representatives(const std::vector<std::vector<long>>& normals, std::size_t dim);

/// Signs of <mu(F), xi> for every F followed by <w, xi> for every line.
std::vector<int> sign_pattern(const HamiltonianSpace& space, const std::vector<long>& xi);

/// Auto uses the exact traversal up to rank 3 and lattice search above.
ChamberEnumeration enumerate_generic_directions(const HamiltonianSpace& space,
                                                ChamberStrategy strategy = ChamberStrategy::Auto, long box = 8);

}  // namespace eqloc
