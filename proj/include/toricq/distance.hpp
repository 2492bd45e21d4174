#pragma once

#include <cstdint>
#include <vector>

#include "toricq/toric.hpp"

namespace toricq {

struct DistanceResult {
  int value = 0;
  bool exact = false;  // false: stochastic upper bound only
  unsigned long long enumerated = 0;
  bool budget_hit = false;
};

struct ScanOptions {
  /// Budget in codewords enumerated; exhaustive scans run iff q^k fits.
  unsigned long long budget = 100'000'000ULL;
  /// <= 0 picks the hardware thread count. Results never depend on it.
  int workers = 1;
  /// Early-exit floor: stop once the running minimum reaches this value.
  /// <= 0 disables. The visit count then depends on the partitioning, so
  /// the verification harness leaves it off.
  int floor = 0;
  /// Seed for the stochastic path.
  std::uint64_t seed = 0xA5C3;
};

/// Exact minimum Hamming weight when q^k fits the budget (exhaustive scan
/// over all nonzero messages, each codeword derived from the previous by
/// one row addition); otherwise a seeded stochastic upper bound from
/// random-permutation re-encodings.
DistanceResult min_weight(const LinearCode& c, const ScanOptions& opt = {});

/// Minimum weight over codewords of c outside the subcode d.
/// Requires rowspace(d) inside rowspace(c) and dim d < dim c.
DistanceResult relative_min_weight(const LinearCode& c, const LinearCode& d,
                                   const ScanOptions& opt = {});

/// Exact counts A_0..A_n; throws BudgetError when q^k exceeds the budget.
std::vector<unsigned long long> weight_distribution(
    const LinearCode& c, unsigned long long budget = 100'000'000ULL,
    int workers = 1);

/// A(q-1) + (q-1-A)*max(0, q-2-A*r) for A strata of full vanishing;
/// requires 0 <= strata <= a.
long long zero_count_bound(int q, int r, int a, int strata);

/// Weight distribution of the dual of a [n, k]_q code with the given
/// distribution. Exact integer arithmetic; throws if the transform does
/// not divide evenly (which would indicate a broken distribution).
std::vector<unsigned long long> macwilliams_transform(
    const std::vector<unsigned long long>& dist, int q, int k);

}  // namespace toricq
