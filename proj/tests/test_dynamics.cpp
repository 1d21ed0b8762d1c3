#include <doctest.h>

#include <cmath>

#include "liouville/dynamics.hpp"
#include "liouville/serialize.hpp"

using namespace liouville;

namespace {

PlaneField germ_field(std::initializer_list<Rational> c) { return field_from_germ(RationalJet(12, c)); }

}  // namespace

TEST_CASE("saddle model has the closed-form flow") {
  // f = y: x' = -x, y' = y.
  const auto t = integrate(germ_field({0, 1}), {1.0, 1.0}, 1.0, 1e-3);
  REQUIRE(t.states.size() == 1001);
  CHECK(std::abs(t.states.back()[0] - std::exp(-1.0)) < 1e-8);
  CHECK(std::abs(t.states.back()[1] - std::exp(1.0)) < 1e-8);
  CHECK(t.times.back() == doctest::Approx(1.0));
  CHECK(*t.drift < 1e-10);
}

TEST_CASE("regular model moves at unit speed") {
  const auto t = integrate(germ_field({1}), {0.0, 0.0}, 2.5, 0.1);
  CHECK(t.states.back()[1] == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(t.states.back()[0] == 0.0);
}

TEST_CASE("times are uniform and increasing") {
  const auto t = integrate(germ_field({0, 1, 1}), {0.5, -0.5}, 1.0, 0.01);
  CHECK(t.times.size() == t.states.size());
  for (std::size_t i = 1; i < t.times.size(); ++i)
    CHECK(t.times[i] - t.times[i - 1] == doctest::Approx(0.01));
}

TEST_CASE("backward integration equals forward integration of -X") {
  const PlaneField X = germ_field({0, Rational(1, 2), -1, 1});
  const PlaneField negX = germ_field({0, Rational(-1, 2), 1, -1});
  IntegrateOptions back;
  back.direction = TimeDirection::Backward;
  const auto a = integrate(X, {0.3, 0.4}, 2.0, 1e-2, back);
  const auto b = integrate(negX, {0.3, 0.4}, 2.0, 1e-2);
  REQUIRE(a.states.size() == b.states.size());
  for (std::size_t i = 0; i < a.states.size(); ++i) CHECK((a.states[i] - b.states[i]).norm() < 1e-12);
}

TEST_CASE("x y is conserved for the scaled saddle") {
  const auto t = integrate(germ_field({0, 3}), {0.7, 0.2}, 1.0, 1e-3);
  for (const auto& s : t.states) CHECK(std::abs(s[0] * s[1] - 0.14) < 1e-9);
}

TEST_CASE("drift scales with the fourth power of the step") {
  // f = -y + y^2 from (1, 1/2) tends to the saddle at y = 0 without escaping.
  const PlaneField X = germ_field({0, -1, 1});
  const auto coarse = integrate(X, {1.0, 0.5}, 10.0, 0.02);
  const auto fine = integrate(X, {1.0, 0.5}, 10.0, 0.01);
  REQUIRE_FALSE(coarse.escaped);
  const double ratio = *coarse.drift / *fine.drift;
  CHECK(ratio >= 8.0);
  CHECK(ratio <= 32.0);
}

TEST_CASE("finite-time blow-up is flagged") {
  const auto t = integrate(germ_field({0, 0, 1}), {1.0, 1.0}, 10.0, 1e-3);
  CHECK(t.escaped);
  CHECK(t.times.back() < 1.01);
}

TEST_CASE("invalid steps are rejected") {
  CHECK_THROWS_AS(integrate(germ_field({1}), {0.0, 0.0}, 1.0, 0.0), Error);
  CHECK_THROWS_AS(integrate(germ_field({1}), {0.0, 0.0}, -1.0, 0.1), Error);
}

TEST_CASE("3D flow tracks the contact Hamiltonian") {
  const Field3 X = lift_liouville(germ_field({0, 1, 1}), Rational(1, 2));
  const auto t = integrate(X, {0.2, 0.1, 0.0}, 1.0, 1e-3);
  REQUIRE(t.drift.has_value());
  CHECK(*t.drift < 1e-10);
  CHECK(t.states.back()[2] == doctest::Approx(0.5));
}

TEST_CASE("portraits") {
  const Window w;
  const auto line = phase_portrait(unfolding_Q(0), w, {4, 4}, 2.0);
  REQUIRE(line.equilibria.size() == 1);
  CHECK(line.equilibria[0].type == EquilibriumType::DegenerateLine);
  CHECK(line.trajectories.size() == 32);
  CHECK(to_svg(line).find("stroke-dasharray") != std::string::npos);

  const auto two = phase_portrait(unfolding_Q(Rational(1, 2)), w, {4, 4}, 2.0);
  REQUIRE(two.equilibria.size() == 2);
  CHECK(two.equilibria[0].type == EquilibriumType::HyperbolicSaddle);
  CHECK(two.equilibria[1].type == EquilibriumType::HyperbolicSaddle);

  const auto empty = phase_portrait(unfolding_Q(1), w, {0, 0}, 2.0);
  CHECK(empty.trajectories.empty());
  CHECK(empty.equilibria.size() == 2);
  CHECK(to_csv(empty) == "t,x,y\n");

  const std::string csv = to_csv(two);
  CHECK(csv.rfind("t,x,y\n", 0) == 0);
  CHECK(csv.find("\n-0.01,") != std::string::npos);
}

TEST_CASE("sweeps flag bifurcations") {
  const auto q = parameter_sweep(FamilyKind::Q, SweepGrid::path({{-1}, {0}, {1}}));
  CHECK(q.summaries[0].saddles == 2);
  CHECK(q.summaries[1].degenerate_lines == 1);
  CHECK(q.summaries[2].saddles == 2);
  REQUIRE(q.bifurcation_points.size() == 1);
  CHECK(q.bifurcation_points[0] == std::vector<Rational>{0});

  const auto t = parameter_sweep(FamilyKind::T, SweepGrid::path({{-1, -1}, {0, 0}, {1, 0}}));
  CHECK(t.summaries[0].signature != t.summaries[1].signature);
  CHECK(t.summaries[1].signature != t.summaries[2].signature);
  CHECK(t.summaries[0].signature != t.summaries[2].signature);

  const auto single = parameter_sweep(FamilyKind::Q, SweepGrid::path({{1}}));
  CHECK(single.flags.empty());
  CHECK_THROWS_AS(parameter_sweep(FamilyKind::Q, SweepGrid{}), Error);
  CHECK_THROWS_AS(parameter_sweep(FamilyKind::T, SweepGrid::path({{1}})), Error);
}

TEST_CASE("product grids and neighbours") {
  const SweepGrid g = SweepGrid::product({{0, 1, 2}, {5, 6}});
  CHECK(g.points.size() == 6);
  CHECK(g.points[1] == std::vector<Rational>{0, 6});
  CHECK(g.neighbours().size() == 7);
}

TEST_CASE("sweep output does not depend on the worker count") {
  const SweepGrid g = SweepGrid::product({{-2, -1, 0, 1, 2}, {-1, 0, 1}});
  const std::string one = to_json(parameter_sweep(FamilyKind::T, g, {-2, 2}, 1)).dump();
  const std::string many = to_json(parameter_sweep(FamilyKind::T, g, {-2, 2}, 4)).dump();
  CHECK(one == many);
}
