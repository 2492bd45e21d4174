#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "toricq/errors.hpp"
#include "toricq/io.hpp"
#include "toricq/toric.hpp"

using namespace toricq;

namespace {

std::vector<Point> all_exponents(int q) {
  std::vector<Point> h;
  for (long long x = 0; x <= q - 2; ++x)
    for (long long y = 0; y <= q - 2; ++y) h.push_back({x, y});
  return h;
}

ExponentSet random_exponents(int q, std::mt19937& rng) {
  std::vector<Point> h = all_exponents(q);
  std::shuffle(h.begin(), h.end(), rng);
  std::uniform_int_distribution<std::size_t> size(1, h.size());
  h.resize(size(rng));
  return ExponentSet(q, std::move(h));
}

std::vector<std::pair<int, int>> family_members(int q) {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= q - 2; ++r)
    if ((q - 2) % r == 0)
      for (int b = 0; b + (q - 2) / r <= q - 2; ++b) out.push_back({r, b});
  return out;
}

}  // namespace

TEST_CASE("evaluation points") {
  auto gf3 = Gf::make(3, 1);
  CHECK(evaluation_points(*gf3) ==
        std::vector<std::pair<Elem, Elem>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  auto gf4 = Gf::make(2, 2);
  auto pts = evaluation_points(*gf4);
  CHECK(pts.size() == 9);
  CHECK(pts.front() == std::pair<Elem, Elem>{1, 1});
}

TEST_CASE("monomial evaluation") {
  auto gf4 = Gf::make(2, 2);
  CHECK(eval_monomial(*gf4, {0, 0}, {3, 2}) == 1);
  CHECK(eval_monomial(*gf4, {1, 2}, {2, 2}) == 1);  // w * w^2 = w^3 = 1
  CHECK_THROWS_AS(eval_monomial(*gf4, {1, 0}, {0, 1}), FieldError);
  // exponents act modulo q-1 on the torus
  for (auto t : evaluation_points(*gf4))
    CHECK(eval_monomial(*gf4, {1, 2}, t) ==
          eval_monomial(*gf4, {1 + 3, 2}, t));
}

TEST_CASE("build_code basics") {
  auto gf3 = Gf::make(3, 1);
  LinearCode rep = build_code(gf3, ExponentSet(3, {{0, 0}}));
  CHECK(rep.n() == 4);
  CHECK(rep.k() == 1);
  for (int j = 0; j < 4; ++j) CHECK(rep.generator().at(0, j) == 1);

  auto gf4 = Gf::make(2, 2);
  LinearCode c0 = code_from_polytope(4, 2, 0);
  CHECK(c0.n() == 9);
  CHECK(c0.k() == 4);

  LinearCode full = build_code(gf4, ExponentSet(4, all_exponents(4)));
  CHECK(full.k() == 9);

  CHECK_THROWS_AS(build_code(gf3, ExponentSet(3, {})), RangeError);
}

TEST_CASE("family code dimensions") {
  CHECK(code_from_polytope(4, 2, 1).k() == 7);
  LinearCode big = code_from_polytope(8, 2, 2);
  CHECK(big.n() == 49);
  CHECK(big.k() == 30);
}

TEST_CASE("monomial independence over random exponent sets") {
  std::mt19937 rng(11);
  for (int q : {3, 4, 5})
    for (int trial = 0; trial < 30; ++trial) {
      ExponentSet u = random_exponents(q, rng);
      LinearCode c = build_code(field_for_order(q), u);
      CHECK(c.k() == static_cast<int>(u.size()));
    }
}

TEST_CASE("dual code") {
  auto gf3 = Gf::make(3, 1);
  LinearCode rep = build_code(gf3, ExponentSet(3, {{0, 0}}));
  LinearCode dual = dual_code(rep);
  CHECK(dual.k() == 3);
  for (int i = 0; i < dual.generator().rows(); ++i) {
    Elem sum = 0;
    for (int j = 0; j < 4; ++j)
      sum = gf3->add(sum, dual.generator().at(i, j));
    CHECK(sum == 0);
  }
  CHECK(same_rowspace(dual_code(dual).generator(), rep.generator()));

  for (auto [r, b] : family_members(4)) {
    LinearCode c = code_from_polytope(4, r, b);
    CHECK(c.k() + dual_code(c).k() == c.n());
  }
}

TEST_CASE("dual exponent set") {
  CHECK_THROWS_AS(ExponentSet(3, {{0, 2}}), RangeError);
  CHECK_THROWS_AS(ExponentSet(4, {{-1, 0}}), RangeError);

  ExponentSet u3(3, {{0, 0}});
  CHECK(dual_exponent_set(u3) ==
        ExponentSet(3, {{0, 1}, {1, 0}, {1, 1}}));

  ExponentSet u4(4, {{0, 0}, {0, 1}, {0, 2}, {1, 0}});
  CHECK(dual_exponent_set(u4) ==
        ExponentSet(4, {{1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}));

  std::mt19937 rng(13);
  for (int q : {3, 4, 5})
    for (int trial = 0; trial < 20; ++trial) {
      ExponentSet u = random_exponents(q, rng);
      CHECK(dual_exponent_set(u).size() ==
            static_cast<std::size_t>((q - 1) * (q - 1)) - u.size());
    }
}

TEST_CASE("dual rule equals the nullspace dual") {
  std::mt19937 rng(17);
  for (int q : {3, 4, 5}) {
    auto f = field_for_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      ExponentSet u = random_exponents(q, rng);
      ExponentSet du = dual_exponent_set(u);
      LinearCode c = build_code(f, u);
      if (du.size() == 0) {
        CHECK(c.k() == c.n());
        continue;
      }
      CHECK(same_rowspace(build_code(f, du).generator(),
                          dual_code(c).generator()));
    }
  }
  for (int q : {4, 8})
    for (auto [r, b] : family_members(q)) {
      auto f = field_for_order(q);
      LinearCode c = code_from_polytope(q, r, b);
      ExponentSet du = dual_exponent_set(*c.source());
      CHECK(same_rowspace(build_code(f, du).generator(),
                          dual_code(c).generator()));
    }
}

TEST_CASE("exponent-set semantics carry over to the codes") {
  auto f = field_for_order(4);
  ExponentSet a(4, {{0, 0}, {1, 2}, {0, 1}});
  ExponentSet b(4, {{1, 2}, {0, 1}, {0, 0}, {0, 0}});
  CHECK(a == b);
  CHECK(build_code(f, a).generator() == build_code(f, b).generator());

  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    ExponentSet u = random_exponents(4, rng);
    ExponentSet v = random_exponents(4, rng);
    bool set_contained = v.contains(u);
    bool code_contained = is_subspace(build_code(f, u).generator(),
                                      build_code(f, v).generator());
    CHECK(set_contained == code_contained);
  }
}

TEST_CASE("predicted parameters") {
  PredictedParams a = predicted_params(4, 2, 0);
  CHECK(a.n == 9);
  CHECK(a.k == 4);
  CHECK(a.d == 6);
  PredictedParams b = predicted_params(8, 2, 2);
  CHECK(b.n == 49);
  CHECK(b.k == 30);
  CHECK(b.d == 14);
  PredictedParams c = predicted_params(5, 1, 0);
  CHECK(c.n == 16);
  CHECK(c.k == 10);
  CHECK(c.d == 4);
}

TEST_CASE("dual polytope rule disagrees with the exact dual") {
  DualRuleCheck a = check_dual_polytope_rule(4, 2, 0);
  CHECK(a.claimed.size() == 7);
  CHECK(a.exact_dual.k() == 5);
  CHECK_FALSE(a.agrees);

  DualRuleCheck b = check_dual_polytope_rule(4, 2, 1);
  CHECK(b.claimed.size() == 4);
  CHECK(b.exact_dual.k() == 2);
  CHECK_FALSE(b.agrees);

  // dimension gap between the claimed and the exact dual is (q-2)/r + 1
  for (int q : {4, 8})
    for (auto [r, b2] : family_members(q)) {
      if (b2 > (r - 1) * (q - 2) / r) continue;
      DualRuleCheck check = check_dual_polytope_rule(q, r, b2);
      CHECK(static_cast<long long>(check.claimed.size()) -
                check.exact_dual.k() ==
            (q - 2) / r + 1);
    }
}

TEST_CASE("polytope and stabilizer export formats") {
  std::ostringstream os;
  write_polytope(os, 4, 2, 1, box_polytope(4, 2, 1));
  CHECK(os.str() ==
        "polytope q=4 r=2 b=1\n"
        "0 0\n"
        "2 0\n"
        "1 2\n"
        "0 2\n");

  LinearCode c1 = code_from_polytope(4, 2, 1);
  AsymmetricCssCode css = build_css(c1, c1);
  std::ostringstream cs;
  write_css(cs, 4, 2, 1, 1, css);
  std::string text = cs.str();
  CHECK(text.find("css q=4 r=2 b1=1 b2=1 n=9 k=5\nGX\n") == 0);
  CHECK(text.find("\nGZ\n") != std::string::npos);
  CHECK(text.find("rows=2 cols=9") != std::string::npos);
}

TEST_CASE("code export formats") {
  auto gf3 = Gf::make(3, 1);
  LinearCode rep = build_code(gf3, ExponentSet(3, {{0, 0}}));
  std::ostringstream os;
  write_code(os, rep);
  CHECK(os.str() ==
        "exponents: 0,0\n"
        "q=3 p=3 m=1 modulus=0,1 rows=1 cols=4\n"
        "1 1 1 1\n");

  std::ostringstream os2;
  write_code(os2, code_from_polytope(4, 2, 0), 2, 0);
  std::istringstream is(os2.str());
  std::string provenance;
  std::getline(is, provenance);
  CHECK(provenance == "toric q=4 r=2 b=0 g=2");
  CHECK(read_matrix(is) == code_from_polytope(4, 2, 0).generator());
}
