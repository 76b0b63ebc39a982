#pragma once

#include "eqloc/chambers.hpp"
#include "eqloc/localization.hpp"
#include "eqloc/model.hpp"

#include <string>
#include <vector>

namespace eqloc {

enum class Side { Minus, Plus };

/// Sign of <mu(F), xi> per component (+1 or -1); throws GenericityError.
std::vector<int> partition(const HamiltonianSpace& space, const CircleDirection& xi);

/// Subspaces below are held in coordinates over model.basis(degree).

/// Classes of the given degree vanishing on every F with
/// side * <mu(F), xi> > 0.
Subspace tw_subspace(const DegreeTruncatedModel& model, const CircleDirection& xi, Side side, int degree);

struct ResidueKernel {
  Subspace kernel;
  /// Number of test classes zeta used.
  std::size_t tests = 0;
  /// The null space is unchanged when test degrees go up to dim_M.
  bool stable = true;
};

/// Classes eta with kappa_S(eta * zeta) = 0 for every model class zeta of
/// degree <= dim_M - 2. Needs model.max_degree() >= max(degree, dim_M).
ResidueKernel residue_kernel_S(const DegreeTruncatedModel& model, const CircleDirection& xi, int degree);

/// Classes eta with kappa_T(eta * zeta) = 0 for every zeta of the
/// complementary degree.
Subspace kappa_T_kernel(const DegreeTruncatedModel& model, const Frame& frame, int degree);

struct DegreeComparison {
  int degree = 0;
  std::size_t slice = 0;
  Subspace left, right;
  bool equal = false;
  /// Label of a basis vector in one side but not the other, if any.
  std::string witness;
};

struct SecondMainReport {
  CircleDirection xi;
  struct Row {
    DegreeComparison comparison;  // residue kernel vs K_- + K_+
    Subspace minus, plus;
    bool direct = false;
    bool stable = false;
  };
  std::vector<Row> rows;
  bool pass = true;
};

SecondMainReport check_theorem_secondmain(const DegreeTruncatedModel& model, const CircleDirection& xi,
                                          int max_degree);

struct FullKernelReport {
  Frame frame;
  ChamberEnumeration chambers;
  /// ker kappa_T against the sum over chambers of K_- + K_+.
  std::vector<DegreeComparison> tolman_weitsman;
  /// ker kappa_T against the sum over chambers of the residue kernels.
  std::vector<DegreeComparison> residue_sum;
  std::vector<std::string> warnings;
  bool pass = true;
};

FullKernelReport full_kernel(const DegreeTruncatedModel& model, const Frame& frame, int max_degree,
                             ChamberStrategy strategy = ChamberStrategy::Auto, long box = 8);

struct AlphaPlusReport {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Checks candidate|_G = 0 whenever f(G) > f(F), and candidate|_F equal to
/// the Euler class of the lines with <w, xi> > 0, where f = <mu, xi>.
AlphaPlusReport validate_alpha_plus(const HamiltonianSpace& space, std::size_t component,
                                    const RestrictedClass& candidate, const CircleDirection& xi);

/// Human-readable witness: the first basis vector of `a` missing from `b`.
std::string subspace_witness(const Subspace& a, const Subspace& b, const std::vector<std::string>& labels);

}  // namespace eqloc
