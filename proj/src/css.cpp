#include "toricq/css.hpp"

#include <string>

#include "toricq/errors.hpp"

namespace toricq {

bool check_nesting(const LinearCode& c1, const LinearCode& c2) {
  if (c1.n() != c2.n() || !c1.field().same_field(c2.field()))
    throw DimensionError("nesting check: mismatched codes");
  LinearCode d1 = dual_code(c1);
  bool forward = is_subspace(d1.generator(), c2.generator());
  bool backward = is_subspace(nullspace(c2.generator()), c1.generator());
  if (forward != backward)
    throw Error("nesting self-check failed: the two inclusions disagree");
  return forward;
}

AsymmetricCssCode build_css(const LinearCode& c1, const LinearCode& c2,
                            const ScanOptions& opt) {
  LinearCode d1 = dual_code(c1);
  LinearCode d2 = dual_code(c2);
  if (!is_subspace(d1.generator(), c2.generator()) ||
      !is_subspace(d2.generator(), c1.generator()))
    throw NestingError("dual codes are not nested in the partners (dims " +
                       std::to_string(d1.k()) + " vs " +
                       std::to_string(c2.k()) + " and " +
                       std::to_string(d2.k()) + " vs " +
                       std::to_string(c1.k()) + ")");
  int n = c1.n();
  int k = c1.k() + c2.k() - n;
  if (k <= 0)
    throw NestingError("quantum dimension k1+k2-n = " + std::to_string(k) +
                       "; the relative weights are undefined");

  bool symmetric = c1.generator() == c2.generator();
  DistanceResult w1 = relative_min_weight(c1, d2, opt);
  DistanceResult w2 = symmetric ? w1 : relative_min_weight(c2, d1, opt);
  DistanceResult plain1 = min_weight(c1, opt);
  DistanceResult plain2 = symmetric ? plain1 : min_weight(c2, opt);

  AsymmetricCssCode out;
  out.n = n;
  out.k = k;
  out.dx = w1.value <= w2.value ? w1 : w2;
  out.dz = w1.value <= w2.value ? w2 : w1;
  out.dx.exact = out.dz.exact = w1.exact && w2.exact;
  out.pure_x = plain1.value == w1.value;
  out.pure_z = plain2.value == w2.value;
  out.purity_exact =
      w1.exact && w2.exact && plain1.exact && plain2.exact;
  out.gx = d2.generator();
  out.gz = d1.generator();
  return out;
}

FamilyParams predicted_family_params(int q, int r, int b1, int b2) {
  // validates q, r and the box bounds for both shifts
  predicted_lattice_count(q, r, b1);
  predicted_lattice_count(q, r, b2);
  int bound = (r - 1) * (q - 2) / r;
  if (b1 > bound || b2 > bound)
    throw RangeError("family shift above (r-1)(q-2)/r = " +
                     std::to_string(bound));
  if (b1 + b2 < bound)
    throw RangeError("b1 + b2 = " + std::to_string(b1 + b2) +
                     " below the nesting threshold " + std::to_string(bound));

  FamilyParams p;
  p.q = q;
  p.r = r;
  p.b1 = b1;
  p.b2 = b2;
  long long s = (q - 2) / r;
  p.predicted_n = static_cast<long long>(q - 1) * (q - 1);
  p.predicted_k = (s + 1) * q / 2 +
                  static_cast<long long>(b1 + b2) * (q - 1);
  p.predicted_dz =
      static_cast<long long>(q - 1 - std::min(b1, b2)) * (q - 1);
  p.predicted_dx =
      static_cast<long long>(q - 1 - std::max(b1, b2)) * (q - 1);
  p.purity_predicted = (b1 + b2 != bound);
  return p;
}

FamilyBuild build_family_code(int q, int r, int b1, int b2,
                              const ScanOptions& opt) {
  FamilyBuild out{predicted_family_params(q, r, b1, b2), {}, {}};
  LinearCode c1 = code_from_polytope(q, r, b1);
  LinearCode c2 = code_from_polytope(q, r, b2);
  LinearCode d1 = dual_code(c1);
  LinearCode d2 = dual_code(c2);

  NestingFailure check;
  check.dim_c1 = c1.k();
  check.dim_c2 = c2.k();
  check.dim_dual1 = d1.k();
  check.dim_dual2 = d2.k();
  check.rank_c2_with_dual1 = rank_of(stack(c2.generator(), d1.generator()));
  check.rank_c1_with_dual2 = rank_of(stack(c1.generator(), d2.generator()));
  check.dual1_in_c2 = check.rank_c2_with_dual1 == c2.k();
  check.dual2_in_c1 = check.rank_c1_with_dual2 == c1.k();

  if (!check.dual1_in_c2 || !check.dual2_in_c1) {
    out.failure = check;
    return out;
  }
  out.code = build_css(c1, c2, opt);
  return out;
}

}  // namespace toricq
