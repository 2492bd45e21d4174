#pragma once

#include <span>
#include <string>
#include <vector>

namespace toricq {

struct Point {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  // lexicographic, x then y
  friend bool operator<(const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
};

inline long long dot(const Point& m, const Point& n) {
  return m.x * n.x + m.y * n.y;
}
inline long long cross(const Point& a, const Point& b) {
  return a.x * b.y - a.y * b.x;
}

/// Convex lattice polygon in canonical form: counterclockwise minimal
/// vertex list (no three consecutive collinear) starting at the
/// lexicographically least vertex. Degenerate cases (segment, point) keep
/// the two/one defining vertices. All arithmetic is exact.
class Polytope {
 public:
  /// Convex hull of the given points, canonicalized.
  static Polytope hull(std::span<const Point> points);
  static Polytope segment(Point a, Point b);
  static Polytope single(Point a) { return hull(std::vector<Point>{a}); }

  const std::vector<Point>& vertices() const { return verts_; }

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  std::vector<Point> verts_;
};

/// The family polygon with vertices (0,0), (a,0), (b,q-2), (0,q-2) where
/// a = b + (q-2)/r; collapses to the triangle (0,0), (a,0), (0,q-2) at b=0.
/// Requires r | (q-2) (DivisibilityError) and 0 <= b with a <= q-2
/// (RangeError). Warns once per (q,r) on stderr when r does not divide q.
Polytope box_polytope(int q, int r, int b);

/// Closed-form count of lattice points of box_polytope(q,r,b):
/// ((q-2)/r + 1)*q/2 + b*(q-1).
long long predicted_lattice_count(int q, int r, int b);

/// All integral points of p, ordered lexicographically.
std::vector<Point> lattice_points(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// min over vertices of <m, n>; the polytope must be nonempty.
long long support_function(const Polytope& p, Point n);

bool contains_point(const Polytope& p, Point m);

/// Every vertex of inner satisfies all half-planes of outer.
bool polytope_contains(const Polytope& outer, const Polytope& inner);

struct Ray {
  Point gen;          // primitive generator in the dual lattice
  std::string label;  // "rho1".."rho4"
};

struct Cone {
  int ray_a;  // face indices into Fan::rays, counterclockwise pair
  int ray_b;
  Point linear;  // l with h = <l, .> on the cone
};

struct Fan {
  std::vector<Ray> rays;
  std::vector<Cone> cones;
};

/// The four-ray refined normal fan of box_polytope(q, r, 0):
/// rays (1,0), (0,1), (-1,0), (-r,-1) with the unimodular-pair property,
/// and the four two-dimensional cones with their linear functionals.
Fan refined_normal_fan(int q, int r);

struct DivisorData {
  std::vector<long long> coeff;  // one per fan ray, aligned with Fan::rays
};

/// Divisor of the b=0 support function: coefficient -h0(n(ray)) per ray,
/// i.e. {0, 0, (q-2)/r, q-2}.
DivisorData divisor_of_h0(int q, int r);

/// Intersection number of the divisor of p's support function with the
/// orbit closure of the given ray: -(hbar(n') + hbar(n'')) over the two
/// neighbor rays, hbar = h - <l_ray, .>. Independent of the choice of
/// l_ray; requires p's normal fan to refine to fan.
long long intersection_number(const Fan& fan, const Polytope& p, int ray);

/// The integer c with n' + n'' + c*n(ray) = 0 over the neighbor rays.
long long self_intersection(const Fan& fan, int ray);

/// (q-2) - A*r; may be negative, callers clamp.
long long zero_bound(int q, int r, long long strata);

/// The complementary shift (r-1)(q-2)/r - b; requires b in [0, (r-1)(q-2)/r].
int dual_shift(int q, int r, int b);

/// Primitive inner edge normals of p (one per edge, counterclockwise).
std::vector<Point> edge_normal_rays(const Polytope& p);

/// Lattice points of {m : <m, ray> >= support_function(p, ray) for all
/// rays}, scanned over the bounding box of p. With p's own edge normals
/// (or any superset) this reproduces lattice_points(p).
std::vector<Point> halfplane_points(const Polytope& p,
                                    std::span<const Point> rays);

}  // namespace toricq
