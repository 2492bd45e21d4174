#include <doctest.h>

#include <algorithm>
#include <vector>

#include "toricq/errors.hpp"
#include "toricq/lattice.hpp"

using namespace toricq;

namespace {

// Independent membership oracle for the family polygon, straight from the
// vertex description: x >= 0, y >= 0, y <= q-2, r*x + y <= r*a.
std::vector<Point> oracle_box_points(int q, int r, int b) {
  long long a = b + (q - 2) / r;
  std::vector<Point> out;
  for (long long x = 0; x <= a; ++x)
    for (long long y = 0; y <= q - 2; ++y)
      if (r * x + y <= r * a) out.push_back({x, y});
  return out;
}

std::vector<std::pair<int, int>> valid_slopes(int q) {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= q - 2; ++r)
    if ((q - 2) % r == 0)
      for (int b = 0; b + (q - 2) / r <= q - 2; ++b) out.push_back({r, b});
  return out;
}

}  // namespace

TEST_CASE("family polygon vertices") {
  CHECK(box_polytope(4, 2, 1).vertices() ==
        std::vector<Point>{{0, 0}, {2, 0}, {1, 2}, {0, 2}});
  CHECK(box_polytope(4, 2, 0).vertices() ==
        std::vector<Point>{{0, 0}, {1, 0}, {0, 2}});
  CHECK_THROWS_AS(box_polytope(4, 2, 2), RangeError);
  CHECK_THROWS_AS(box_polytope(5, 2, 0), DivisibilityError);
  CHECK_THROWS_AS(box_polytope(2, 1, 0), RangeError);
}

TEST_CASE("hull canonicalization is input-order independent") {
  std::vector<Point> pts{{1, 2}, {0, 0}, {0, 2}, {2, 0}, {1, 1}, {0, 0}};
  Polytope a = Polytope::hull(pts);
  std::reverse(pts.begin(), pts.end());
  CHECK(a == Polytope::hull(pts));
  CHECK(a == box_polytope(4, 2, 1));
}

TEST_CASE("lattice point enumeration") {
  CHECK(lattice_points(box_polytope(4, 2, 0)) ==
        std::vector<Point>{{0, 0}, {0, 1}, {0, 2}, {1, 0}});
  CHECK(lattice_points(box_polytope(4, 2, 1)).size() == 7);
  CHECK(lattice_points(Polytope::single({3, 5})) ==
        std::vector<Point>{{3, 5}});
  CHECK(lattice_points(Polytope::segment({0, 0}, {2, 4})) ==
        std::vector<Point>{{0, 0}, {1, 2}, {2, 4}});
}

TEST_CASE("lattice points match the independent oracle and the formula") {
  CHECK(predicted_lattice_count(4, 2, 0) == 4);
  CHECK(predicted_lattice_count(4, 2, 1) == 7);
  CHECK(predicted_lattice_count(8, 2, 2) == 30);
  for (int q : {3, 4, 5, 8, 16})
    for (auto [r, b] : valid_slopes(q)) {
      auto pts = lattice_points(box_polytope(q, r, b));
      CHECK(pts == oracle_box_points(q, r, b));
      CHECK(static_cast<long long>(pts.size()) ==
            predicted_lattice_count(q, r, b));
    }
}

TEST_CASE("Minkowski sum") {
  Polytope seg = Polytope::segment({0, 0}, {1, 0});
  CHECK(minkowski_sum(seg, box_polytope(4, 2, 0)) == box_polytope(4, 2, 1));

  Polytope p = box_polytope(4, 2, 1);
  CHECK(minkowski_sum(p, Polytope::single({0, 0})) == p);

  CHECK(minkowski_sum(Polytope::segment({0, 0}, {2, 0}),
                      Polytope::segment({0, 0}, {3, 0})) ==
        Polytope::segment({0, 0}, {5, 0}));

  for (int q : {4, 8})
    for (auto [r, b] : valid_slopes(q))
      CHECK(minkowski_sum(Polytope::segment({0, 0}, {b, 0}),
                          box_polytope(q, r, 0)) == box_polytope(q, r, b));
}

TEST_CASE("support function") {
  Polytope box0 = box_polytope(4, 2, 0);
  CHECK(support_function(box0, {1, 0}) == 0);
  CHECK(support_function(box0, {-1, 0}) == -1);
  CHECK(support_function(box0, {-2, -1}) == -2);
  for (Point m : lattice_points(box0))
    CHECK(support_function(box0, {-2, -1}) <= dot(m, {-2, -1}));
}

TEST_CASE("refined normal fan") {
  Fan fan = refined_normal_fan(4, 2);
  REQUIRE(fan.rays.size() == 4);
  CHECK(fan.rays[0].gen == Point{1, 0});
  CHECK(fan.rays[1].gen == Point{0, 1});
  CHECK(fan.rays[2].gen == Point{-1, 0});
  CHECK(fan.rays[3].gen == Point{-2, -1});
  CHECK(fan.cones[3].linear == Point{0, 2});

  for (int q : {4, 8, 16})
    for (int r : {1, 2}) {
      Fan f = refined_normal_fan(q, r);
      Polytope box0 = box_polytope(q, r, 0);
      for (std::size_t i = 0; i < f.rays.size(); ++i) {
        Point a = f.rays[i].gen;
        Point b = f.rays[(i + 1) % f.rays.size()].gen;
        CHECK(cross(a, b) == 1);  // successive pairs generate the lattice
      }
      for (const Cone& cone : f.cones) {
        for (int ray : {cone.ray_a, cone.ray_b}) {
          Point n = f.rays[ray].gen;
          CHECK(dot(cone.linear, n) == support_function(box0, n));
        }
      }
    }
}

TEST_CASE("divisor coefficients") {
  CHECK(divisor_of_h0(4, 2).coeff == std::vector<long long>{0, 0, 1, 2});
  CHECK(divisor_of_h0(8, 2).coeff == std::vector<long long>{0, 0, 3, 6});
  for (int q : {4, 8, 16})
    for (int r : {1, 2}) {
      Fan fan = refined_normal_fan(q, r);
      Polytope box0 = box_polytope(q, r, 0);
      DivisorData d = divisor_of_h0(q, r);
      for (std::size_t i = 0; i < fan.rays.size(); ++i)
        CHECK(d.coeff[i] == -support_function(box0, fan.rays[i].gen));
    }
}

TEST_CASE("intersection numbers") {
  Fan fan4 = refined_normal_fan(4, 2);
  CHECK(intersection_number(fan4, box_polytope(4, 2, 0), 0) == 2);
  Fan fan8 = refined_normal_fan(8, 2);
  CHECK(intersection_number(fan8, box_polytope(8, 2, 0), 0) == 6);

  // invariance under translating the polytope (a global linear shift of h)
  Polytope box0 = box_polytope(4, 2, 0);
  std::vector<Point> shifted;
  for (Point v : box0.vertices()) shifted.push_back(v + Point{5, -3});
  Polytope moved = Polytope::hull(shifted);
  for (int ray = 0; ray < 4; ++ray)
    CHECK(intersection_number(fan4, moved, ray) ==
          intersection_number(fan4, box0, ray));
}

TEST_CASE("self intersection") {
  Fan fan4 = refined_normal_fan(4, 2);
  CHECK(self_intersection(fan4, 0) == 2);
  Fan fan8 = refined_normal_fan(8, 2);
  CHECK(self_intersection(fan8, 0) == 2);
  // consistency: n(rho2) + n(rho4) = -2 n(rho1) exactly
  Point sum = fan4.rays[1].gen + fan4.rays[3].gen;
  CHECK(sum == Point{-2, 0});
}

TEST_CASE("zero bound formula") {
  CHECK(zero_bound(4, 2, 0) == 2);
  CHECK(zero_bound(4, 2, 1) == 0);
  CHECK(zero_bound(8, 2, 2) == 2);
  CHECK(zero_bound(4, 2, 2) == -2);  // may go negative, callers clamp
}

TEST_CASE("dual shift") {
  CHECK(dual_shift(4, 2, 0) == 1);
  CHECK(dual_shift(8, 2, 3) == 0);
  CHECK_THROWS_AS(dual_shift(4, 2, 2), RangeError);
  for (int q : {4, 8})
    for (int r : {1, 2}) {
      int bound = (r - 1) * (q - 2) / r;
      for (int b = 0; b <= bound; ++b) {
        CHECK(dual_shift(q, r, dual_shift(q, r, b)) == b);
        CHECK(dual_shift(q, r, b) + (q - 2) / r == q - 2 - b);
      }
    }
}

TEST_CASE("polytope containment") {
  CHECK(polytope_contains(box_polytope(8, 2, 1),
                          box_polytope(8, 2, dual_shift(8, 2, 3))));
  CHECK_FALSE(polytope_contains(box_polytope(4, 2, 0), box_polytope(4, 2, 1)));
  Polytope p = box_polytope(4, 2, 1);
  CHECK(polytope_contains(p, p));

  // family claim: b1 + b2 >= (r-1)(q-2)/r forces the inclusion
  for (int q : {4, 8})
    for (int r : {1, 2}) {
      int bound = (r - 1) * (q - 2) / r;
      for (int b1 = 0; b1 <= bound; ++b1)
        for (int b2 = 0; b2 <= bound; ++b2)
          if (b1 + b2 >= bound)
            CHECK(polytope_contains(box_polytope(q, r, b1),
                                    box_polytope(q, r, dual_shift(q, r, b2))));
    }
}

TEST_CASE("half-plane reconstruction round trip") {
  for (int q : {4, 8, 16})
    for (int r : {1, 2})
      for (auto [rr, b] : valid_slopes(q)) {
        if (rr != r) continue;
        Polytope box = box_polytope(q, r, b);
        auto normals = edge_normal_rays(box);
        CHECK(halfplane_points(box, normals) == lattice_points(box));

        std::vector<Point> fan_rays;
        for (const Ray& ray : refined_normal_fan(q, r).rays)
          fan_rays.push_back(ray.gen);
        CHECK(halfplane_points(box, fan_rays) == lattice_points(box));
      }
}
