#include "liouville/linalg.hpp"

#include <utility>

#include "liouville/errors.hpp"

namespace liouville {

RowSpace row_reduce(RationalMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  RowSpace out;
  out.basis = m.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

RationalVector RowSpace::reduce(const RationalVector& v) const {
  if (v.size() != basis.cols())
    throw Error(ErrorCode::InvalidArgument, "vector length does not match row space");
  RationalVector out = v;
  for (Eigen::Index i = 0; i < rank(); ++i) {
    const Rational factor = out(pivots[i]);
    if (factor.is_zero()) continue;
    for (Eigen::Index j = 0; j < out.size(); ++j) out(j) -= factor * basis(i, j);
  }
  return out;
}

bool RowSpace::contains(const RationalVector& v) const {
  const RationalVector rest = reduce(v);
  for (Eigen::Index j = 0; j < rest.size(); ++j)
    if (!rest(j).is_zero()) return false;
  return true;
}

Eigen::Index rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw Error(ErrorCode::InvalidArgument, "solve needs a square system");
  RationalMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  RowSpace rs = row_reduce(std::move(aug));
  if (rs.rank() != n || rs.pivots.back() != n - 1) return std::nullopt;
  return RationalVector(rs.basis.col(n));
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols())
    throw Error(ErrorCode::InvalidArgument, "vstack column mismatch");
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

}  // namespace liouville
