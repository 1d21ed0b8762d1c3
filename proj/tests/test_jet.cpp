#include <doctest.h>

#include "liouville/jet.hpp"
#include "liouville/random.hpp"

using namespace liouville;

namespace {

Rational factorial(unsigned n) {
  Rational r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

RationalJet exp_minus_one(std::size_t n) {
  RationalJet f(n);
  for (std::size_t i = 1; i <= n; ++i) f[i] = 1 / factorial(static_cast<unsigned>(i));
  return f;
}

RationalJet log_one_plus(std::size_t n) {
  RationalJet f(n);
  for (std::size_t i = 1; i <= n; ++i) f[i] = Rational(i % 2 ? 1 : -1) / Rational(i);
  return f;
}

// [x^n] phi^{-1} = (1/n) [x^{n-1}] (x / phi)^n
RationalJet lagrange_inverse(const RationalJet& phi) {
  const std::size_t n = phi.order();
  RationalJet shifted(n);
  for (std::size_t i = 1; i <= n; ++i) shifted[i - 1] = phi[i];
  const RationalJet q = reciprocal(shifted);
  RationalJet out(n);
  RationalJet power = RationalJet::constant(n, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * q;
    out[k] = power[k - 1] / Rational(k);
  }
  return out;
}

}  // namespace

TEST_CASE("construction pads and truncates") {
  RationalJet f(3, {1, 2, 3, 4, 5});
  CHECK(f.order() == 3);
  CHECK(f[3] == 4);
  RationalJet g(4, {1});
  CHECK(g[4] == 0);
  CHECK(RationalJet::monomial(5, 2, 3)[2] == 3);
}

TEST_CASE("product truncates to the smaller order") {
  const RationalJet one_minus_x(6, {1, -1});
  const RationalJet geometric(4, {1, 1, 1, 1, 1});
  const RationalJet p = one_minus_x * geometric;
  CHECK(p.order() == 4);
  CHECK(p == RationalJet::constant(4, 1));
}

TEST_CASE("reciprocal of 1 - x is the geometric series") {
  const RationalJet r = reciprocal(RationalJet(10, {1, -1}));
  for (std::size_t i = 0; i <= 10; ++i) CHECK(r[i] == 1);
  CHECK_THROWS_AS(reciprocal(RationalJet::identity(5)), Error);
}

TEST_CASE("compose exp(log(1+x)) - 1 = x") {
  const std::size_t n = 12;
  CHECK(compose(exp_minus_one(n), log_one_plus(n)) == RationalJet::identity(n));
}

TEST_CASE("compose rejects a nonzero constant term") {
  try {
    compose(RationalJet::identity(4), RationalJet(4, {1, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroConstantTerm);
  }
}

TEST_CASE("derivative and integrate") {
  const RationalJet f(5, {3, 1, 4, 1, 5, 9});
  const RationalJet d = derivative(f);
  CHECK(d.order() == 4);
  CHECK(d[4] == 45);
  const RationalJet back = integrate(d);
  CHECK(back.order() == 5);
  CHECK(back == f - RationalJet::constant(5, 3));
}

TEST_CASE("order of vanishing") {
  CHECK(order_of_vanishing(RationalJet(6)) == std::nullopt);
  CHECK(order_of_vanishing(RationalJet::monomial(6, 4, -2)) == 4u);
  CHECK(order_of_vanishing(RationalJet::constant(6, 1)) == 0u);
}

TEST_CASE("diffeo germ validation") {
  CHECK_THROWS_AS(RationalDiffeo(RationalJet(4, {0, 0, 1})), Error);
  CHECK_THROWS_AS(RationalDiffeo(RationalJet(4, {1, 1})), Error);
  CHECK_NOTHROW(RationalDiffeo(RationalJet(4, {0, -2, 1})));
}

TEST_CASE("compositional inverse matches Lagrange inversion") {
  RandomSource rng(7);
  for (int i = 0; i < 30; ++i) {
    const RationalDiffeo phi = rng.diffeo(10, 10);
    CHECK(comp_inverse(phi).jet() == lagrange_inverse(phi.jet()));
  }
}

TEST_CASE("property: inverse composes to the identity on both sides") {
  RandomSource rng(11);
  for (int i = 0; i < 30; ++i) {
    const RationalDiffeo phi = rng.diffeo(12);
    const RationalDiffeo inv = comp_inverse(phi);
    CHECK(compose(phi, inv).jet() == RationalJet::identity(12));
    CHECK(compose(inv, phi).jet() == RationalJet::identity(12));
  }
}

TEST_CASE("property: composition is associative") {
  RandomSource rng(12);
  for (int i = 0; i < 30; ++i) {
    const RationalJet f = rng.jet(10, 0, 10);
    const RationalJet g = rng.diffeo(10).jet();
    const RationalJet h = rng.diffeo(10).jet();
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("property: chain rule") {
  RandomSource rng(13);
  for (int i = 0; i < 30; ++i) {
    const RationalJet f = rng.jet(10, 0, 10);
    const RationalJet g = rng.diffeo(10).jet();
    const RationalJet lhs = derivative(compose(f, g));
    const RationalJet rhs = compose(derivative(f), g.truncated(9)) * derivative(g);
    CHECK(agree_through(lhs, rhs, 9));
  }
}

TEST_CASE("evaluate matches a polynomial by hand") {
  const RationalJet f(3, {1, -2, 0, Rational(1, 2)});
  CHECK(evaluate(f, 2.0) == doctest::Approx(1.0 - 4.0 + 4.0));
}
