#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "liouville/rational.hpp"

namespace liouville {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Reduced row echelon form of a set of row vectors over Q.
///
/// `basis` holds exactly `rank()` rows, each with a unit pivot whose column is
/// zero in every other row. Membership and reduction are exact.
struct RowSpace {
  RationalMatrix basis;
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
  Eigen::Index dimension() const { return basis.cols(); }

  /// Remainder of v after eliminating every pivot column.
  RationalVector reduce(const RationalVector& v) const;
  bool contains(const RationalVector& v) const;
};

RowSpace row_reduce(RationalMatrix rows);

/// Rank of the rows of `m`.
Eigen::Index rank(const RationalMatrix& m);

/// Unique solution of a x = b for square invertible a; nullopt when singular.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Stacks the rows of two matrices with the same number of columns.
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

}  // namespace liouville
