#include <doctest.h>

#include "liouville/linalg.hpp"

using namespace liouville;

namespace {

RationalMatrix hilbert(Eigen::Index n) {
  RationalMatrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = Rational(1) / Rational(i + j + 1);
  return h;
}

}  // namespace

TEST_CASE("hilbert systems solve exactly") {
  for (Eigen::Index n = 1; n <= 8; ++n) {
    const RationalMatrix h = hilbert(n);
    RationalVector ones = RationalVector::Constant(n, Rational(1));
    const RationalVector b = h * ones;
    const auto x = solve(h, b);
    REQUIRE(x.has_value());
    CHECK(*x == ones);
    CHECK(rank(h) == n);
  }
}

TEST_CASE("singular systems report no unique solution") {
  RationalMatrix a(2, 2);
  a << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK(rank(a) == 1);
  CHECK_FALSE(solve(a, RationalVector::Ones(2)).has_value());
}

TEST_CASE("row space membership") {
  RationalMatrix a(2, 3);
  a << Rational(1), Rational(0), Rational(1), Rational(0), Rational(1), Rational(1);
  const RowSpace s = row_reduce(a);
  CHECK(s.rank() == 2);
  RationalVector in(3), out(3);
  in << Rational(2), Rational(3), Rational(5);
  out << Rational(0), Rational(0), Rational(1);
  CHECK(s.contains(in));
  CHECK_FALSE(s.contains(out));
  CHECK(rank(vstack(a, out.transpose())) == 3);
}
