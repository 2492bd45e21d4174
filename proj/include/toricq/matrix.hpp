#pragma once

#include <span>
#include <vector>

#include "toricq/gf.hpp"

namespace toricq {

/// Dense row-major matrix over GF(q). Value semantics; treated as immutable
/// once built, so instances are safe to share across threads.
class Mat {
 public:
  Mat() = default;
  Mat(GfPtr field, int rows, int cols);

  static Mat from_rows(GfPtr field,
                       const std::vector<std::vector<Elem>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Gf& field() const { return *field_; }
  const GfPtr& field_ptr() const { return field_; }

  Elem at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<const Elem> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  bool operator==(const Mat& other) const;

 private:
  GfPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Mat reduced;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

/// Reduced row-echelon form with deterministic leftmost-pivot,
/// topmost-row tie-breaking.
RrefResult rref(const Mat& m);

/// Rows form a basis of the right kernel {v : m v^T = 0};
/// row count is cols - rank.
Mat nullspace(const Mat& m);

Mat stack(const Mat& top, const Mat& bottom);

int rank_of(const Mat& m);

/// rowspace(a) subseteq rowspace(b)
bool is_subspace(const Mat& a, const Mat& b);

bool same_rowspace(const Mat& a, const Mat& b);

/// Membership of a single vector in the row space described by an rref.
bool in_rowspace(const RrefResult& basis, std::span<const Elem> v);

}  // namespace toricq
