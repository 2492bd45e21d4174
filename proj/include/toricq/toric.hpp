#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toricq/gf.hpp"
#include "toricq/lattice.hpp"
#include "toricq/matrix.hpp"

namespace toricq {

/// A finite set of monomial exponents inside H = {0,...,q-2}^2, kept in
/// lexicographic order with set semantics.
class ExponentSet {
 public:
  ExponentSet(int q, std::vector<Point> points);
  static ExponentSet from_polytope(int q, const Polytope& p);

  int q() const { return q_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool contains(Point m) const;
  bool contains(const ExponentSet& other) const;

  friend bool operator==(const ExponentSet&, const ExponentSet&) = default;

 private:
  int q_;
  std::vector<Point> points_;
};

/// Linear code over GF(q) held by a full-rank generator matrix; the reduced
/// form is cached for containment and equality tests. Codes built from
/// exponent sets record them as provenance.
class LinearCode {
 public:
  static LinearCode from_generator(Mat gen,
                                   std::optional<ExponentSet> source = {});

  const Gf& field() const { return gen_.field(); }
  const GfPtr& field_ptr() const { return gen_.field_ptr(); }
  int n() const { return gen_.cols(); }
  int k() const { return rref_.rank; }
  const Mat& generator() const { return gen_; }
  const RrefResult& reduced() const { return rref_; }
  const std::optional<ExponentSet>& source() const { return source_; }

  bool contains_vector(std::span<const Elem> v) const {
    return in_rowspace(rref_, v);
  }

 private:
  LinearCode(Mat gen, RrefResult rref, std::optional<ExponentSet> source)
      : gen_(std::move(gen)), rref_(std::move(rref)),
        source_(std::move(source)) {}

  Mat gen_;
  RrefResult rref_;
  std::optional<ExponentSet> source_;
};

/// The (q-1)^2 torus points ordered as (g^i, g^j) for i, j = 0..q-2,
/// lexicographic in (i, j), with g the field's deterministic generator.
std::vector<std::pair<Elem, Elem>> evaluation_points(const Gf& f);

/// t_x^{m.x} * t_y^{m.y}; both coordinates of t must be nonzero.
Elem eval_monomial(const Gf& f, Point m, std::pair<Elem, Elem> t);

/// Generator rows are the monomial evaluations over the torus, one row per
/// exponent in order; the rows of a subset of H are independent, so
/// k = |exponents|.
LinearCode build_code(const GfPtr& f, const ExponentSet& exponents);

/// build_code over the lattice points of box_polytope(q, r, b).
LinearCode code_from_polytope(int q, int r, int b);

/// Exact dual: generator = nullspace of the code's generator.
LinearCode dual_code(const LinearCode& c);

/// H minus the negation of the set mod q-1; builds the dual code of
/// build_code(u) (checked against the nullspace route by the test suite).
ExponentSet dual_exponent_set(const ExponentSet& u);

struct PredictedParams {
  long long n = 0;
  long long k = 0;
  long long d = 0;
};

/// Closed-form (n, k, d) for the family code: n = (q-1)^2,
/// k = ((q-2)/r+1)q/2 + b(q-1), d = (q-1-a)(q-1) with a = b+(q-2)/r.
/// A formula transcription only; never feeds construction.
PredictedParams predicted_params(int q, int r, int b);

struct DualRuleCheck {
  ExponentSet claimed;    // lattice points of the shifted polytope
  LinearCode exact_dual;  // nullspace dual, the ground truth
  bool agrees = false;    // rowspace equality of the two routes
};

/// Compares the claimed dual polytope rule (shift b -> dual_shift(q,r,b))
/// against the exact dual, returning both sides for reporting.
DualRuleCheck check_dual_polytope_rule(int q, int r, int b);

}  // namespace toricq
