#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "toricq/distance.hpp"
#include "toricq/errors.hpp"
#include "toricq/toric.hpp"

using namespace toricq;

namespace {

// Independent oracle: walk every message the slow way, re-encoding from
// scratch, and take the minimum weight. No incremental updates shared with
// the engine under test.
int oracle_min_weight(const LinearCode& c) {
  const Gf& f = c.field();
  int q = f.q();
  int k = c.k();
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= q;
  int best = c.n();
  for (long long msg = 1; msg < total; ++msg) {
    long long rest = msg;
    std::vector<Elem> coeffs(k);
    for (int i = 0; i < k; ++i) {
      coeffs[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    int weight = 0;
    for (int j = 0; j < c.n(); ++j) {
      Elem v = 0;
      for (int i = 0; i < k; ++i)
        v = f.add(v, f.mul(coeffs[i], c.generator().at(i, j)));
      weight += (v != 0);
    }
    best = std::min(best, weight);
  }
  return best;
}

ExponentSet random_exponents(int q, std::mt19937& rng, std::size_t max_size) {
  std::vector<Point> h;
  for (long long x = 0; x <= q - 2; ++x)
    for (long long y = 0; y <= q - 2; ++y) h.push_back({x, y});
  std::shuffle(h.begin(), h.end(), rng);
  std::uniform_int_distribution<std::size_t> size(
      1, std::min(max_size, h.size()));
  h.resize(size(rng));
  return ExponentSet(q, std::move(h));
}

}  // namespace

TEST_CASE("exact minimum weights") {
  auto gf3 = Gf::make(3, 1);
  LinearCode rep = build_code(gf3, ExponentSet(3, {{0, 0}}));
  DistanceResult d = min_weight(rep);
  CHECK(d.value == 4);
  CHECK(d.exact);
  CHECK(d.enumerated == 2);
  CHECK_FALSE(d.budget_hit);

  LinearCode c0 = code_from_polytope(4, 2, 0);
  DistanceResult d0 = min_weight(c0);
  CHECK(d0.value == 3);
  CHECK(d0.exact);
  CHECK(d0.enumerated == 255);
  CHECK(oracle_min_weight(c0) == 3);

  auto gf4 = Gf::make(2, 2);
  std::vector<Point> h;
  for (long long x = 0; x <= 2; ++x)
    for (long long y = 0; y <= 2; ++y) h.push_back({x, y});
  LinearCode full = build_code(gf4, ExponentSet(4, h));
  CHECK(min_weight(full).value == 1);
}

TEST_CASE("minimum weight needs a nonzero dimension") {
  auto gf4 = Gf::make(2, 2);
  std::vector<Point> h;
  for (long long x = 0; x <= 2; ++x)
    for (long long y = 0; y <= 2; ++y) h.push_back({x, y});
  LinearCode full = build_code(gf4, ExponentSet(4, h));
  LinearCode zero = dual_code(full);
  CHECK(zero.k() == 0);
  CHECK_THROWS_AS(min_weight(zero), DimensionError);
}

TEST_CASE("relative minimum weight") {
  // Codewords like (1+x)(y-y1)(y-y2) have weight 2 and lie outside the
  // dual, whose nonzero weights are 6 and 9, so the relative minimum is 2.
  LinearCode c1 = code_from_polytope(4, 2, 1);
  LinearCode d1 = dual_code(c1);
  DistanceResult rel = relative_min_weight(c1, d1);
  CHECK(rel.value == 2);
  CHECK(rel.exact);
  CHECK(rel.enumerated == (1ULL << 14) - 1);  // 4^7 - 1 visited
  CHECK(min_weight(c1).value == 2);

  // the zero subcode reduces to the plain minimum weight
  auto gf4 = Gf::make(2, 2);
  std::vector<Point> h;
  for (long long x = 0; x <= 2; ++x)
    for (long long y = 0; y <= 2; ++y) h.push_back({x, y});
  LinearCode full = build_code(gf4, ExponentSet(4, h));
  LinearCode zero = dual_code(full);
  LinearCode c0 = code_from_polytope(4, 2, 0);
  CHECK(relative_min_weight(c0, zero).value == min_weight(c0).value);

  CHECK_THROWS_AS(relative_min_weight(c1, c1), DimensionError);
  CHECK_THROWS_AS(relative_min_weight(c0, c1), DimensionError);
}

TEST_CASE("weight distribution") {
  auto gf3 = Gf::make(3, 1);
  LinearCode rep = build_code(gf3, ExponentSet(3, {{0, 0}}));
  CHECK(weight_distribution(rep) ==
        std::vector<unsigned long long>{1, 0, 0, 0, 2});

  std::vector<Point> h3{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  LinearCode full3 = build_code(gf3, ExponentSet(3, h3));
  CHECK(weight_distribution(full3) ==
        std::vector<unsigned long long>{1, 8, 24, 32, 16});

  LinearCode c0 = code_from_polytope(4, 2, 0);
  auto dist = weight_distribution(c0);
  unsigned long long sum = 0;
  for (auto v : dist) sum += v;
  CHECK(sum == 256);
  CHECK(dist[0] == 1);

  CHECK_THROWS_AS(weight_distribution(c0, 100), BudgetError);
}

TEST_CASE("the two exact engines agree") {
  std::mt19937 rng(23);
  for (int q : {3, 4}) {
    auto f = field_for_order(q);
    for (int trial = 0; trial < 10; ++trial) {
      LinearCode c = build_code(f, random_exponents(q, rng, 7));
      auto dist = weight_distribution(c);
      int support_min = 0;
      for (int w = 1; w < static_cast<int>(dist.size()); ++w)
        if (dist[w] != 0) {
          support_min = w;
          break;
        }
      CHECK(min_weight(c).value == support_min);
    }
  }
}

TEST_CASE("MacWilliams transform matches the dual distribution") {
  std::mt19937 rng(29);
  for (int q : {3, 4}) {
    auto f = field_for_order(q);
    for (int trial = 0; trial < 8; ++trial) {
      LinearCode c = build_code(f, random_exponents(q, rng, 6));
      LinearCode d = dual_code(c);
      auto transformed = macwilliams_transform(weight_distribution(c), q, c.k());
      CHECK(transformed == weight_distribution(d));
      if (d.k() > 0) {
        int first = 0;
        for (int w = 1; w < static_cast<int>(transformed.size()); ++w)
          if (transformed[w] != 0) {
            first = w;
            break;
          }
        CHECK(min_weight(d).value == first);
      }
    }
  }
}

TEST_CASE("stratified zero-count bound values") {
  CHECK(zero_count_bound(4, 2, 1, 1) == 3);
  CHECK(zero_count_bound(4, 2, 1, 0) == 6);
  CHECK(zero_count_bound(8, 2, 3, 3) == 21);
  CHECK_THROWS_AS(zero_count_bound(4, 2, 1, 2), RangeError);
}

TEST_CASE("stochastic path upper-bounds the exact value") {
  std::mt19937 rng(31);
  for (int q : {3, 4, 5}) {
    auto f = field_for_order(q);
    for (int trial = 0; trial < 6; ++trial) {
      LinearCode c = build_code(f, random_exponents(q, rng, 6));
      DistanceResult exact = min_weight(c);
      ScanOptions tiny;
      tiny.budget = 2;  // q^k >= 3, so this always forces the stochastic path
      DistanceResult bound = min_weight(c, tiny);
      CHECK(exact.exact);
      CHECK_FALSE(bound.exact);
      CHECK(bound.budget_hit);
      CHECK(bound.value >= exact.value);
      CHECK(bound.value <= c.n());
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  LinearCode c1 = code_from_polytope(4, 2, 1);
  LinearCode d1 = dual_code(c1);

  auto same = [](const DistanceResult& a, const DistanceResult& b) {
    return a.value == b.value && a.exact == b.exact &&
           a.enumerated == b.enumerated && a.budget_hit == b.budget_hit;
  };

  ScanOptions base;
  DistanceResult ref = min_weight(c1, base);
  DistanceResult rel_ref = relative_min_weight(c1, d1, base);
  ScanOptions tiny;
  tiny.budget = 500;
  DistanceResult stoch_ref = min_weight(c1, tiny);
  for (int workers : {2, 3, 5}) {
    ScanOptions opt = base;
    opt.workers = workers;
    CHECK(same(min_weight(c1, opt), ref));
    CHECK(same(relative_min_weight(c1, d1, opt), rel_ref));
    ScanOptions st = tiny;
    st.workers = workers;
    CHECK(same(min_weight(c1, st), stoch_ref));
  }
}

TEST_CASE("early-exit floor stays exact only at one") {
  auto gf4 = Gf::make(2, 2);
  std::vector<Point> h;
  for (long long x = 0; x <= 2; ++x)
    for (long long y = 0; y <= 2; ++y) h.push_back({x, y});
  LinearCode full = build_code(gf4, ExponentSet(4, h));
  ScanOptions opt;
  opt.floor = 1;
  DistanceResult d = min_weight(full, opt);
  CHECK(d.value == 1);
  CHECK(d.exact);
  CHECK(d.enumerated < (1ULL << 18) - 1);  // stopped early
}
