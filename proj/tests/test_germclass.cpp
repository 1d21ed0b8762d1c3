#include <doctest.h>

#include "liouville/germclass.hpp"
#include "liouville/random.hpp"

using namespace liouville;

namespace {

constexpr std::size_t N = 12;

RationalJet mono(std::size_t k, Rational c = 1) { return RationalJet::monomial(N, k, c); }

// Residue of dx / (x^2 + b x^3 + c x^4): 1/f = x^{-2} (1 - b x + (b^2 - c) x^2 - ...).
Rational residue_oracle(const Rational& b) { return -b; }

}  // namespace

TEST_CASE("rk action on the worked example") {
  RationalJet phi(N);
  for (std::size_t i = 1; i <= N; ++i) phi[i] = i % 2 ? 1 : -1;
  const RationalJet g = rk_action(RationalJet::identity(N), RationalDiffeo(phi));
  RationalJet expect(N - 1);
  expect[1] = 1;
  expect[2] = 1;
  CHECK(g == expect);
}

TEST_CASE("table models classify to their rows") {
  CHECK(classify_germ(RationalJet::constant(N, 1)) == GermClass::unit());
  CHECK(classify_germ(mono(1, 2)) == GermClass::linear(2));
  CHECK(classify_germ(mono(1, -3)) == GermClass::linear(-3));
  CHECK(classify_germ(mono(2)) == GermClass::power(2, 1));
  CHECK(classify_germ(mono(2, -5)) == GermClass::power(2, 1));
  CHECK(classify_germ(mono(3, -1)) == GermClass::power(3, -1));
  CHECK(classify_germ(mono(5, Rational(1, 7))) == GermClass::power(5, 1));
  for (std::size_t k = 2; k <= 6; ++k) {
    CHECK(classify_germ(mono(k)).codim() == k - 1);
    CHECK(classify_germ(mono(k)).symbol() == "A" + std::to_string(k - 1));
  }
  CHECK(classify_germ(mono(1, 2)).codim() == 0u);
  CHECK_FALSE(classify_germ(RationalJet::constant(N, 1)).codim().has_value());
}

TEST_CASE("flat jets are undetermined") {
  const GermClass c = classify_germ(RationalJet(N));
  CHECK(c.kind == GermClass::Kind::Undetermined);
  CHECK(c.truncation == N);
}

TEST_CASE("codimension and determinacy of monomials") {
  for (std::size_t k = 1; k <= 9; ++k) {
    CHECK(rk_codim_linear(mono(k), N) == k - 1);
    for (std::size_t j = 1; j + 1 <= N; ++j) CHECK(is_k_determined(mono(k), j) == (j >= k));
  }
}

TEST_CASE("tangent space of x^3 is spanned by x^3, x^4, ...") {
  const RowSpace t = rk_tangent_space(mono(3), 6);
  CHECK(t.rank() == 4);
  CHECK_THROWS_AS(rk_tangent_space(mono(3), N + 1), Error);
}

TEST_CASE("residue oracle") {
  for (int b = -4; b <= 4; ++b) {
    RationalJet f = mono(2);
    f[3] = b;
    f[4] = 7;
    CHECK(rk_residue(f) == residue_oracle(b));
  }
  // 1/(x^3 (1 + x)) = x^{-3}(1 - x + x^2 - ...): residue 1.
  RationalJet f = mono(3);
  f[4] = 1;
  CHECK(rk_residue(f) == 1);
}

TEST_CASE("x^2 + x^3 keeps modulus 1") {
  RationalJet f = mono(2);
  f[3] = 1;
  const Normalization n = normalizing_diffeo(f);
  CHECK(n.modulus == 1);
  CHECK(n.cls == GermClass::power(2, 1));
  RationalJet expect(N - 1);
  expect[2] = 1;
  expect[3] = 1;
  CHECK(n.form == expect);
}

TEST_CASE("unit germs normalize to 1") {
  const RationalJet f(N, {2, -1, 3});
  const Normalization n = normalizing_diffeo(f);
  const auto g = rk_action(jet_cast<RadicalNumber>(f), n.phi);
  CHECK(agree_through(g, jet_cast<RadicalNumber>(RationalJet::constant(N, 1)), N - 1));
}

TEST_CASE("scaling with an irrational constant") {
  // 2 x^3: c^2 = 1/2.
  const Normalization n = normalizing_diffeo(mono(3, 2));
  CHECK_FALSE(n.phi.jet()[1].is_rational());
  CHECK(n.phi.jet()[1].to_double() == doctest::Approx(std::sqrt(0.5)));
  const auto g = rk_action(jet_cast<RadicalNumber>(mono(3, 2)), n.phi);
  CHECK(agree_through(g, jet_cast<RadicalNumber>(mono(3)), N - 1));
}

TEST_CASE("property: classification, codimension and residue are RK invariant") {
  RandomSource rng(21);
  for (int i = 0; i < 40; ++i) {
    RationalJet f = rng.jet(N, 1, 6);
    if (f.is_zero()) f[3] = 1;
    const RationalDiffeo phi = rng.diffeo(N);
    const RationalJet g = rk_action(f, phi);
    CHECK(classify_germ(g) == classify_germ(f.truncated(N - 1)));
    CHECK(rk_codim_linear(g, 8) == rk_codim_linear(f, 8));
    if (*order_of_vanishing(f) >= 2) CHECK(rk_residue(g) == rk_residue(f));
  }
}

TEST_CASE("property: normalization certificates and the residue modulus") {
  RandomSource rng(22);
  for (int i = 0; i < 40; ++i) {
    RationalJet f = rng.jet(N, 1, 6);
    if (f.is_zero()) f[2] = 1;
    const Normalization n = normalizing_diffeo(f);
    const auto g = rk_action(jet_cast<RadicalNumber>(f), n.phi);
    CHECK(agree_through(g, jet_cast<RadicalNumber>(n.form), N - 1));
    if (n.cls.kind == GermClass::Kind::Power) {
      CHECK(n.modulus == -rk_residue(f));
      CHECK(n.form[n.cls.k] == n.cls.sign);
    }
  }
}

TEST_CASE("property: rk action is a right action") {
  RandomSource rng(23);
  for (int i = 0; i < 20; ++i) {
    const RationalJet f = rng.jet(N, 0, 6);
    const RationalDiffeo phi = rng.diffeo(N), chi = rng.diffeo(N);
    CHECK(agree_through(rk_action(rk_action(f, phi), chi), rk_action(f, compose(phi, chi)), N - 2));
  }
}
