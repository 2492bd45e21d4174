#include "toricq/matrix.hpp"

#include <algorithm>

#include "toricq/errors.hpp"

namespace toricq {

Mat::Mat(GfPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

Mat Mat::from_rows(GfPtr field, const std::vector<std::vector<Elem>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Mat m(std::move(field), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw DimensionError("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool Mat::operator==(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  if (field_ && other.field_ && !field_->same_field(*other.field_))
    return false;
  return data_ == other.data_;
}

RrefResult rref(const Mat& m) {
  RrefResult out{m, 0, {}};
  Mat& a = out.reduced;
  const Gf& f = m.field();
  int pr = 0;
  for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
    int pivot = -1;
    for (int r = pr; r < m.rows(); ++r) {
      if (a.at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != pr)
      for (int j = 0; j < m.cols(); ++j) std::swap(a.at(pivot, j), a.at(pr, j));
    Elem scale = f.inv(a.at(pr, c));
    if (scale != 1)
      for (int j = 0; j < m.cols(); ++j) a.at(pr, j) = f.mul(scale, a.at(pr, j));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pr) continue;
      Elem factor = a.at(r, c);
      if (factor == 0) continue;
      for (int j = 0; j < m.cols(); ++j)
        a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(pr, j)));
    }
    out.pivots.push_back(c);
    ++pr;
  }
  out.rank = pr;
  return out;
}

Mat nullspace(const Mat& m) {
  RrefResult r = rref(m);
  const Gf& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivots) is_pivot[c] = true;

  Mat basis(m.field_ptr(), m.cols() - r.rank, m.cols());
  int row = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.at(row, free) = 1;
    for (int i = 0; i < r.rank; ++i)
      basis.at(row, r.pivots[i]) = f.neg(r.reduced.at(i, free));
    ++row;
  }
  return basis;
}

Mat stack(const Mat& top, const Mat& bottom) {
  if (top.cols() != bottom.cols())
    throw DimensionError("stack: column mismatch");
  if (!top.field().same_field(bottom.field()))
    throw DimensionError("stack: field mismatch");
  Mat out(top.field_ptr(), top.rows() + bottom.rows(), top.cols());
  for (int i = 0; i < top.rows(); ++i)
    for (int j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
  for (int i = 0; i < bottom.rows(); ++i)
    for (int j = 0; j < bottom.cols(); ++j)
      out.at(top.rows() + i, j) = bottom.at(i, j);
  return out;
}

int rank_of(const Mat& m) { return rref(m).rank; }

bool is_subspace(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols())
    throw DimensionError("is_subspace: column mismatch");
  if (!a.field().same_field(b.field()))
    throw DimensionError("is_subspace: field mismatch");
  return rank_of(b) == rank_of(stack(b, a));
}

bool same_rowspace(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols() || !a.field().same_field(b.field())) return false;
  RrefResult ra = rref(a);
  RrefResult rb = rref(b);
  if (ra.rank != rb.rank || ra.pivots != rb.pivots) return false;
  for (int i = 0; i < ra.rank; ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (ra.reduced.at(i, j) != rb.reduced.at(i, j)) return false;
  return true;
}

bool in_rowspace(const RrefResult& basis, std::span<const Elem> v) {
  const Mat& b = basis.reduced;
  if (static_cast<int>(v.size()) != b.cols())
    throw DimensionError("in_rowspace: length mismatch");
  const Gf& f = b.field();
  std::vector<Elem> rem(v.begin(), v.end());
  for (int i = 0; i < basis.rank; ++i) {
    Elem coeff = rem[basis.pivots[i]];
    if (coeff == 0) continue;
    for (int j = 0; j < b.cols(); ++j)
      rem[j] = f.sub(rem[j], f.mul(coeff, b.at(i, j)));
  }
  return std::all_of(rem.begin(), rem.end(), [](Elem e) { return e == 0; });
}

}  // namespace toricq
