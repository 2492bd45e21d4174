#include "toricq/lattice.hpp"

#include <algorithm>
#include <iostream>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "toricq/errors.hpp"

namespace toricq {

Polytope Polytope::hull(std::span<const Point> points) {
  if (points.empty()) throw RangeError("hull of no points");
  std::vector<Point> p(points.begin(), points.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());

  Polytope out;
  if (p.size() == 1) {
    out.verts_ = p;
    return out;
  }

  // Andrew monotone chain; popping on cross <= 0 drops collinear points,
  // giving the minimal counterclockwise vertex list starting at the
  // lexicographically least vertex.
  auto build = [&](auto begin, auto end, std::vector<Point>& chain) {
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross({chain.back().x - chain[chain.size() - 2].x,
                    chain.back().y - chain[chain.size() - 2].y},
                   {it->x - chain[chain.size() - 2].x,
                    it->y - chain[chain.size() - 2].y}) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
  };
  std::vector<Point> lower, upper;
  build(p.begin(), p.end(), lower);
  build(p.rbegin(), p.rend(), upper);
  lower.pop_back();
  upper.pop_back();
  out.verts_ = std::move(lower);
  out.verts_.insert(out.verts_.end(), upper.begin(), upper.end());
  if (out.verts_.size() == 2 && out.verts_[1] < out.verts_[0])
    std::swap(out.verts_[0], out.verts_[1]);
  return out;
}

Polytope Polytope::segment(Point a, Point b) {
  return hull(std::vector<Point>{a, b});
}

namespace {

void validate_family(int q, int r, int b) {
  if (q < 3) throw RangeError("field size must be >= 3, got " + std::to_string(q));
  if (r < 1) throw RangeError("slope parameter must be >= 1, got " + std::to_string(r));
  if ((q - 2) % r != 0)
    throw DivisibilityError("r = " + std::to_string(r) +
                            " does not divide q-2 = " + std::to_string(q - 2));
  int a = b + (q - 2) / r;
  if (b < 0 || a > q - 2)
    throw RangeError("shift b = " + std::to_string(b) +
                     " puts a = " + std::to_string(a) +
                     " outside [0, " + std::to_string(q - 2) + "]");
  if (q % r != 0) {
    static std::mutex mu;
    static std::set<std::pair<int, int>> warned;
    std::lock_guard<std::mutex> lock(mu);
    if (warned.insert({q, r}).second)
      std::cerr << "warning: r = " << r << " does not divide q = " << q
                << "; the construction only needs r | q-2\n";
  }
}

long long gcd_ll(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

Polytope box_polytope(int q, int r, int b) {
  validate_family(q, r, b);
  long long a = b + (q - 2) / r;
  std::vector<Point> verts = {
      {0, 0}, {a, 0}, {b, q - 2}, {0, q - 2}};
  return Polytope::hull(verts);
}

long long predicted_lattice_count(int q, int r, int b) {
  validate_family(q, r, b);
  long long s = (q - 2) / r;
  return (s + 1) * q / 2 + static_cast<long long>(b) * (q - 1);
}

std::vector<Point> lattice_points(const Polytope& p) {
  const auto& v = p.vertices();
  std::vector<Point> out;
  if (v.size() == 1) {
    out.push_back(v[0]);
    return out;
  }
  if (v.size() == 2) {
    Point d{v[1].x - v[0].x, v[1].y - v[0].y};
    long long g = gcd_ll(d.x, d.y);
    Point step{d.x / g, d.y / g};
    for (long long i = 0; i <= g; ++i)
      out.push_back({v[0].x + i * step.x, v[0].y + i * step.y});
    std::sort(out.begin(), out.end());
    return out;
  }
  long long xlo = v[0].x, xhi = v[0].x, ylo = v[0].y, yhi = v[0].y;
  for (const Point& m : v) {
    xlo = std::min(xlo, m.x);
    xhi = std::max(xhi, m.x);
    ylo = std::min(ylo, m.y);
    yhi = std::max(yhi, m.y);
  }
  for (long long x = xlo; x <= xhi; ++x)
    for (long long y = ylo; y <= yhi; ++y)
      if (contains_point(p, {x, y})) out.push_back({x, y});
  return out;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const Point& a : p.vertices())
    for (const Point& b : q.vertices()) sums.push_back(a + b);
  return Polytope::hull(sums);
}

long long support_function(const Polytope& p, Point n) {
  const auto& v = p.vertices();
  if (v.empty()) throw RangeError("support function of empty polytope");
  long long best = dot(v[0], n);
  for (const Point& m : v) best = std::min(best, dot(m, n));
  return best;
}

bool contains_point(const Polytope& p, Point m) {
  const auto& v = p.vertices();
  if (v.size() == 1) return m == v[0];
  if (v.size() == 2) {
    Point d{v[1].x - v[0].x, v[1].y - v[0].y};
    Point w{m.x - v[0].x, m.y - v[0].y};
    if (cross(d, w) != 0) return false;
    long long t = dot(w, d);
    return t >= 0 && t <= dot(d, d);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    if (cross({b.x - a.x, b.y - a.y}, {m.x - a.x, m.y - a.y}) < 0)
      return false;
  }
  return true;
}

bool polytope_contains(const Polytope& outer, const Polytope& inner) {
  for (const Point& m : inner.vertices())
    if (!contains_point(outer, m)) return false;
  return true;
}

Fan refined_normal_fan(int q, int r) {
  validate_family(q, r, 0);
  long long s = (q - 2) / r;
  Fan fan;
  fan.rays = {{{1, 0}, "rho1"},
              {{0, 1}, "rho2"},
              {{-1, 0}, "rho3"},
              {{-r, -1}, "rho4"}};
  fan.cones = {{0, 1, {0, 0}},
               {1, 2, {s, 0}},
               {2, 3, {s, 0}},
               {3, 0, {0, q - 2}}};
  return fan;
}

DivisorData divisor_of_h0(int q, int r) {
  validate_family(q, r, 0);
  return DivisorData{{0, 0, (q - 2) / r, q - 2}};
}

namespace {

// The two rays adjacent to `ray` through the fan's two-dimensional cones.
std::pair<Point, Point> neighbor_rays(const Fan& fan, int ray) {
  if (ray < 0 || ray >= static_cast<int>(fan.rays.size()))
    throw RangeError("ray index out of range");
  std::vector<Point> nb;
  for (const Cone& c : fan.cones) {
    if (c.ray_a == ray) nb.push_back(fan.rays[c.ray_b].gen);
    else if (c.ray_b == ray) nb.push_back(fan.rays[c.ray_a].gen);
  }
  if (nb.size() != 2)
    throw RangeError("ray is not the common face of two cones");
  return {nb[0], nb[1]};
}

}  // namespace

long long intersection_number(const Fan& fan, const Polytope& p, int ray) {
  auto [n1, n2] = neighbor_rays(fan, ray);
  Point g = fan.rays[ray].gen;
  // Lexicographically least vertex attaining the support minimum serves
  // as l_ray; the result does not depend on this choice.
  long long h = support_function(p, g);
  Point l{0, 0};
  bool found = false;
  for (const Point& v : p.vertices()) {
    if (dot(v, g) != h) continue;
    if (!found || v < l) l = v;
    found = true;
  }
  long long h1 = support_function(p, n1) - dot(l, n1);
  long long h2 = support_function(p, n2) - dot(l, n2);
  return -(h1 + h2);
}

long long self_intersection(const Fan& fan, int ray) {
  auto [n1, n2] = neighbor_rays(fan, ray);
  Point g = fan.rays[ray].gen;
  Point s{n1.x + n2.x, n1.y + n2.y};
  // solve s + c*g = 0
  long long c;
  if (g.x != 0) {
    if (s.x % g.x != 0) throw Error("neighbors not aligned with the ray");
    c = -s.x / g.x;
  } else {
    if (g.y == 0 || s.y % g.y != 0)
      throw Error("neighbors not aligned with the ray");
    c = -s.y / g.y;
  }
  if (s.x + c * g.x != 0 || s.y + c * g.y != 0)
    throw Error("neighbors not aligned with the ray");
  return c;
}

long long zero_bound(int q, int r, long long strata) {
  if (strata < 0) throw RangeError("stratum count must be >= 0");
  return (q - 2) - strata * r;
}

int dual_shift(int q, int r, int b) {
  validate_family(q, r, 0);
  int bound = (r - 1) * (q - 2) / r;
  if (b < 0 || b > bound)
    throw RangeError("shift b = " + std::to_string(b) + " outside [0, " +
                     std::to_string(bound) + "]");
  return bound - b;
}

std::vector<Point> edge_normal_rays(const Polytope& p) {
  const auto& v = p.vertices();
  std::vector<Point> rays;
  if (v.size() < 2) return rays;
  std::size_t edges = v.size() == 2 ? 2 : v.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const Point& a = v[i % v.size()];
    const Point& b = v[(i + 1) % v.size()];
    Point d{b.x - a.x, b.y - a.y};
    long long g = gcd_ll(d.x, d.y);
    rays.push_back({-d.y / g, d.x / g});
  }
  return rays;
}

std::vector<Point> halfplane_points(const Polytope& p,
                                    std::span<const Point> rays) {
  std::vector<long long> bounds;
  bounds.reserve(rays.size());
  for (const Point& n : rays) bounds.push_back(support_function(p, n));

  const auto& v = p.vertices();
  long long xlo = v[0].x, xhi = v[0].x, ylo = v[0].y, yhi = v[0].y;
  for (const Point& m : v) {
    xlo = std::min(xlo, m.x);
    xhi = std::max(xhi, m.x);
    ylo = std::min(ylo, m.y);
    yhi = std::max(yhi, m.y);
  }
  std::vector<Point> out;
  for (long long x = xlo; x <= xhi; ++x)
    for (long long y = ylo; y <= yhi; ++y) {
      bool ok = true;
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (dot({x, y}, rays[i]) < bounds[i]) {
          ok = false;
          break;
        }
      if (ok) out.push_back({x, y});
    }
  return out;
}

}  // namespace toricq
