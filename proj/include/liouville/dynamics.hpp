#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "liouville/contact3d.hpp"
#include "liouville/liouville2d.hpp"

namespace liouville {

enum class TimeDirection { Forward, Backward };

/// Axis-aligned rectangle [xmin, xmax] x [ymin, ymax].
struct Window {
  double xmin = -2.0;
  double xmax = 2.0;
  double ymin = -2.0;
  double ymax = 2.0;

  bool contains(double x, double y) const { return x >= xmin && x <= xmax && y >= ymin && y <= ymax; }
  Window expanded(double fraction) const {
    const double dx = fraction * (xmax - xmin);
    const double dy = fraction * (ymax - ymin);
    return {xmin - dx, xmax + dx, ymin - dy, ymax + dy};
  }
};

/// Fixed-step samples of a flow. `times` holds elapsed time i*h in the
/// integration direction, so it is always increasing.
template <int Dim>
struct Trajectory {
  using State = Eigen::Matrix<double, Dim, 1>;

  std::vector<double> times;
  std::vector<State> states;
  /// max |I(state) - I(start)| for the field's first integral, when it has one.
  std::optional<double> drift;
  /// Some state exceeded the escape norm; the samples stop before it.
  bool escaped = false;
  /// The path left the clip window; the last sample is the first one outside.
  bool clipped = false;
  TimeDirection direction = TimeDirection::Forward;
};

using Trajectory2 = Trajectory<2>;
using Trajectory3 = Trajectory<3>;

struct IntegrateOptions {
  TimeDirection direction = TimeDirection::Forward;
  std::optional<Window> clip;
  double escape_norm = 1e12;
};

/// Polynomial compiled to double coefficients for fast evaluation.
template <std::size_t Vars>
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const Polynomial<Vars>& p) {
    for (const auto& [e, c] : p.terms()) terms_.push_back({to_double(c), e});
  }

  template <class Vec>
  double operator()(const Vec& v) const {
    double acc = 0.0;
    for (const auto& [c, e] : terms_) {
      double t = c;
      for (std::size_t i = 0; i < Vars; ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= v[static_cast<Eigen::Index>(i)];
      acc += t;
    }
    return acc;
  }

 private:
  std::vector<std::pair<double, std::array<unsigned, Vars>>> terms_;
};

/// Classical fourth-order Runge-Kutta with fixed step h for round(T / h)
/// steps. `invariant`, when given, is monitored for drift.
template <int Dim, class Rhs, class Invariant = std::nullptr_t>
Trajectory<Dim> rk4(Rhs&& rhs, const Eigen::Matrix<double, Dim, 1>& x0, double T, double h,
                    const IntegrateOptions& opts, Invariant invariant = nullptr) {
  if (!(h > 0.0) || !(T > 0.0))
    throw Error(ErrorCode::InvalidArgument, "integration needs T > 0 and h > 0");
  using State = Eigen::Matrix<double, Dim, 1>;
  const double step = opts.direction == TimeDirection::Forward ? h : -h;
  const auto steps = std::max<long long>(1, std::llround(T / h));

  Trajectory<Dim> out;
  out.direction = opts.direction;
  out.times.reserve(static_cast<std::size_t>(steps) + 1);
  out.states.reserve(static_cast<std::size_t>(steps) + 1);
  out.times.push_back(0.0);
  out.states.push_back(x0);

  constexpr bool kMonitor = !std::is_same_v<Invariant, std::nullptr_t>;
  double i0 = 0.0;
  double drift = 0.0;
  if constexpr (kMonitor) i0 = invariant(x0);

  State x = x0;
  for (long long i = 1; i <= steps; ++i) {
    const State k1 = rhs(x);
    const State k2 = rhs(State(x + (step / 2) * k1));
    const State k3 = rhs(State(x + (step / 2) * k2));
    const State k4 = rhs(State(x + step * k3));
    const State next = x + (step / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!next.allFinite() || next.norm() > opts.escape_norm) {
      out.escaped = true;
      break;
    }
    x = next;
    out.times.push_back(static_cast<double>(i) * h);
    out.states.push_back(x);
    if constexpr (kMonitor) drift = std::max(drift, std::abs(invariant(x) - i0));
    if (opts.clip && !opts.clip->contains(x[0], x[1])) {
      out.clipped = true;
      break;
    }
  }
  if constexpr (kMonitor) out.drift = drift;
  return out;
}

/// Flow of a plane field. For Liouville fields the drift of x f(y) is tracked.
Trajectory2 integrate(const PlaneField& X, const Eigen::Vector2d& x0, double T, double h,
                      const IntegrateOptions& opts = {});

/// Flow of a field on R^3. When the contact Hamiltonian is known its drift
/// is tracked (it is a first integral of a strictly contact field).
Trajectory3 integrate(const Field3& X, const Eigen::Vector3d& x0, double T, double h,
                      const IntegrateOptions& opts = {});

/// Seeds are placed at the centres of an nx x ny grid of cells of the window.
struct SeedGrid {
  std::size_t nx = 8;
  std::size_t ny = 8;
};

struct PortraitData {
  Window window;
  std::vector<Trajectory2> trajectories;
  std::vector<Equilibrium> equilibria;
};

/// Trajectories from every seed in both time directions, clipped to a 10%
/// margin around the window, plus equilibrium annotations for Liouville fields.
PortraitData phase_portrait(const PlaneField& X, const Window& window, const SeedGrid& seeds,
                            double T, double h = 1e-2);

/// SVG with viewBox equal to the window, y pointing up; degenerate lines dotted.
std::string to_svg(const PortraitData& portrait);

/// "t,x,y" rows; backward trajectories carry negative t.
std::string to_csv(const PortraitData& portrait);

enum class FamilyKind { Q, T };

/// Parameter tuples, either a path (neighbours are consecutive entries) or
/// a row-major Cartesian product with the given shape.
struct SweepGrid {
  std::vector<std::vector<Rational>> points;
  std::vector<std::size_t> shape;

  static SweepGrid path(std::vector<std::vector<Rational>> points);
  static SweepGrid product(const std::vector<std::vector<Rational>>& axes);
  std::vector<std::pair<std::size_t, std::size_t>> neighbours() const;
};

struct PortraitSummary {
  std::size_t saddles = 0;
  std::size_t degenerate_lines = 0;
  /// Equilibrium types in increasing y: "S" saddle, "L" line; "-" when empty.
  std::string signature;
};

struct BifurcationFlag {
  std::size_t from = 0;
  std::size_t to = 0;
  /// Where the change is placed: a grid point carrying a degenerate
  /// equilibrium, else the midpoint of the edge.
  std::vector<Rational> at;
};

struct SweepResult {
  FamilyKind family = FamilyKind::Q;
  std::vector<std::string> params;
  SweepGrid grid;
  std::vector<std::vector<Equilibrium>> equilibria;
  std::vector<PortraitSummary> summaries;
  std::vector<BifurcationFlag> flags;
  /// Distinct `at` locations of the flags, in first-seen order.
  std::vector<std::vector<Rational>> bifurcation_points;
};

GermFamily family_of(FamilyKind kind, std::size_t order = kDefaultOrder);

/// Equilibria of every family member on the grid, with bifurcations flagged
/// where neighbouring points differ in equilibrium count or type. Grid
/// points are processed by `workers` threads (0 = hardware concurrency);
/// the result does not depend on the worker count.
SweepResult parameter_sweep(FamilyKind family, const SweepGrid& grid,
                            std::pair<double, double> y_range = {-2.0, 2.0}, unsigned workers = 0);

}  // namespace liouville
