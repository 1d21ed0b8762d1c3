#include <doctest.h>

#include "liouville/radical.hpp"

using namespace liouville;

TEST_CASE("exact roots stay rational") {
  const RadicalNumber c = RadicalNumber::real_root(8, 3);
  CHECK(c.is_rational());
  CHECK(c.rational_value() == 2);
  CHECK(RadicalNumber::real_root(Rational(-27, 8), 3).rational_value() == Rational(-3, 2));
}

TEST_CASE("square root of two") {
  const RadicalNumber c = RadicalNumber::real_root(2, 2);
  CHECK_FALSE(c.is_rational());
  CHECK(c.to_double() == doctest::Approx(std::sqrt(2.0)));
  CHECK(c * c == RadicalNumber(2));
  CHECK((c.inverse() * c) == RadicalNumber(1));
}

TEST_CASE("fourth root of four reduces to a quadratic field") {
  const RadicalNumber c = RadicalNumber::real_root(4, 4);
  CHECK(c.field().degree == 2);
  CHECK(c.to_double() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("negative radicand with odd index") {
  const RadicalNumber c = RadicalNumber::real_root(-2, 3);
  CHECK(c.to_double() == doctest::Approx(-std::cbrt(2.0)));
  CHECK(c * c * c == RadicalNumber(-2));
}

TEST_CASE("field arithmetic") {
  const RadicalNumber t = RadicalNumber::real_root(3, 3);
  const RadicalNumber u = RadicalNumber(1) + t + t * t;
  // (1 + t + t^2)(t - 1) = t^3 - 1 = 2
  CHECK(u * (t - RadicalNumber(1)) == RadicalNumber(2));
  CHECK(u / u == RadicalNumber(1));
  CHECK((u - u).is_zero());
}

TEST_CASE("distinct proper fields do not mix") {
  const RadicalNumber a = RadicalNumber::real_root(2, 2);
  const RadicalNumber b = RadicalNumber::real_root(3, 2);
  try {
    (void)(a + b);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  CHECK_THROWS_AS(RadicalNumber(0).inverse(), Error);
}
