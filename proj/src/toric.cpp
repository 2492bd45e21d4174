#include "toricq/toric.hpp"

#include <algorithm>
#include <string>

#include "toricq/errors.hpp"

namespace toricq {

namespace {

// Generator matrices stay desk-scale; (q-1)^2 columns past this point would
// not be enumerable anyway.
constexpr long long kMaxCodeLength = 1 << 24;

}  // namespace

ExponentSet::ExponentSet(int q, std::vector<Point> points)
    : q_(q), points_(std::move(points)) {
  if (q < 3) throw RangeError("exponent sets need q >= 3");
  for (const Point& m : points_)
    if (m.x < 0 || m.x > q - 2 || m.y < 0 || m.y > q - 2)
      throw RangeError("exponent outside {0,...,q-2}^2");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

ExponentSet ExponentSet::from_polytope(int q, const Polytope& p) {
  return ExponentSet(q, lattice_points(p));
}

bool ExponentSet::contains(Point m) const {
  return std::binary_search(points_.begin(), points_.end(), m);
}

bool ExponentSet::contains(const ExponentSet& other) const {
  return std::includes(points_.begin(), points_.end(),
                       other.points_.begin(), other.points_.end());
}

LinearCode LinearCode::from_generator(Mat gen,
                                      std::optional<ExponentSet> source) {
  RrefResult r = rref(gen);
  if (r.rank != gen.rows())
    throw DimensionError("generator rows are dependent: rank " +
                         std::to_string(r.rank) + " of " +
                         std::to_string(gen.rows()));
  return LinearCode(std::move(gen), std::move(r), std::move(source));
}

std::vector<std::pair<Elem, Elem>> evaluation_points(const Gf& f) {
  if (f.q() < 3) throw RangeError("torus evaluation needs q >= 3");
  long long n = static_cast<long long>(f.q() - 1) * (f.q() - 1);
  if (n > kMaxCodeLength) throw RangeError("code length over the guard");
  std::vector<std::pair<Elem, Elem>> pts;
  pts.reserve(n);
  for (int i = 0; i < f.q() - 1; ++i)
    for (int j = 0; j < f.q() - 1; ++j)
      pts.emplace_back(f.antilog(i), f.antilog(j));
  return pts;
}

Elem eval_monomial(const Gf& f, Point m, std::pair<Elem, Elem> t) {
  if (t.first == 0 || t.second == 0)
    throw FieldError("monomial evaluation at a zero coordinate");
  return f.mul(f.pow(t.first, m.x), f.pow(t.second, m.y));
}

LinearCode build_code(const GfPtr& f, const ExponentSet& exponents) {
  if (exponents.size() == 0) throw RangeError("empty exponent set");
  if (f->q() != exponents.q())
    throw DimensionError("field order does not match the exponent set");
  auto pts = evaluation_points(*f);
  Mat gen(f, static_cast<int>(exponents.size()), static_cast<int>(pts.size()));
  for (int i = 0; i < gen.rows(); ++i) {
    const Point& m = exponents.points()[i];
    for (int j = 0; j < gen.cols(); ++j)
      gen.at(i, j) = eval_monomial(*f, m, pts[j]);
  }
  return LinearCode::from_generator(std::move(gen), exponents);
}

LinearCode code_from_polytope(int q, int r, int b) {
  Polytope box = box_polytope(q, r, b);
  return build_code(field_for_order(q), ExponentSet::from_polytope(q, box));
}

LinearCode dual_code(const LinearCode& c) {
  return LinearCode::from_generator(nullspace(c.generator()));
}

ExponentSet dual_exponent_set(const ExponentSet& u) {
  int q = u.q();
  auto negated = [&](Point m) {
    return Point{(q - 1 - m.x) % (q - 1), (q - 1 - m.y) % (q - 1)};
  };
  std::vector<Point> out;
  for (long long x = 0; x <= q - 2; ++x)
    for (long long y = 0; y <= q - 2; ++y)
      if (!u.contains(negated({x, y}))) out.push_back({x, y});
  return ExponentSet(q, std::move(out));
}

PredictedParams predicted_params(int q, int r, int b) {
  long long k = predicted_lattice_count(q, r, b);
  long long a = b + (q - 2) / r;
  return {static_cast<long long>(q - 1) * (q - 1), k,
          (q - 1 - a) * static_cast<long long>(q - 1)};
}

DualRuleCheck check_dual_polytope_rule(int q, int r, int b) {
  int bdual = dual_shift(q, r, b);
  ExponentSet claimed =
      ExponentSet::from_polytope(q, box_polytope(q, r, bdual));
  LinearCode exact = dual_code(code_from_polytope(q, r, b));
  bool agrees = false;
  if (static_cast<int>(claimed.size()) == exact.k()) {
    LinearCode claimed_code = build_code(exact.field_ptr(), claimed);
    agrees = same_rowspace(claimed_code.generator(), exact.generator());
  }
  return {std::move(claimed), std::move(exact), agrees};
}

}  // namespace toricq
