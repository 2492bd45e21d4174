#pragma once

#include <optional>

#include "toricq/distance.hpp"
#include "toricq/toric.hpp"

namespace toricq {

/// Asymmetric CSS code assembled from two nested classical codes:
/// k = k1 + k2 - n, d_z/d_x from the two relative minimum weights, X-type
/// stabilizers from the dual of the second code and Z-type from the dual
/// of the first. Every row of gx is orthogonal to every row of gz.
struct AsymmetricCssCode {
  int n = 0;
  int k = 0;
  DistanceResult dz;
  DistanceResult dx;
  bool pure_x = false;  // wt(C1) equals wt(C1 minus dual(C2))
  bool pure_z = false;  // wt(C2) equals wt(C2 minus dual(C1))
  bool purity_exact = false;  // the four weights behind the flags are exact
  Mat gx;
  Mat gz;
};

/// Family predictions, transcribed formulas only; nothing here is trusted
/// by the construction path.
struct FamilyParams {
  int q = 0, r = 0, b1 = 0, b2 = 0;
  long long predicted_n = 0;
  long long predicted_k = 0;
  long long predicted_dz = 0;
  long long predicted_dx = 0;
  bool purity_predicted = false;
};

/// Witness data for a failed inclusion check.
struct NestingFailure {
  bool dual1_in_c2 = false;  // rowspace(dual C1) inside C2
  bool dual2_in_c1 = false;  // rowspace(dual C2) inside C1
  int dim_c1 = 0, dim_c2 = 0;
  int dim_dual1 = 0, dim_dual2 = 0;
  int rank_c2_with_dual1 = 0;  // rank of C2 stacked with dual(C1)
  int rank_c1_with_dual2 = 0;
};

/// True iff rowspace(dual c1) lies inside rowspace(c2). The symmetric
/// inclusion is equivalent and is asserted as a self-check.
bool check_nesting(const LinearCode& c1, const LinearCode& c2);

/// CSS construction; verifies nesting computationally and throws
/// NestingError when it fails. Needs k1 + k2 > n so both relative weights
/// are defined.
AsymmetricCssCode build_css(const LinearCode& c1, const LinearCode& c2,
                            const ScanOptions& opt = {});

/// Closed-form predictions for the family member (q, r, b1, b2);
/// requires 0 <= b_i <= (r-1)(q-2)/r and b1 + b2 >= (r-1)(q-2)/r.
FamilyParams predicted_family_params(int q, int r, int b1, int b2);

struct FamilyBuild {
  FamilyParams predicted;
  std::optional<AsymmetricCssCode> code;     // set on success
  std::optional<NestingFailure> failure;     // set when an inclusion fails
};

/// Builds the two family codes, checks both claimed inclusions
/// computationally, and either assembles the CSS code or reports which
/// inclusion failed with witness dimensions.
FamilyBuild build_family_code(int q, int r, int b1, int b2,
                              const ScanOptions& opt = {});

}  // namespace toricq
