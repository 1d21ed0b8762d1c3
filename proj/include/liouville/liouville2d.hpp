#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liouville/germclass.hpp"
#include "liouville/jet.hpp"
#include "liouville/linalg.hpp"
#include "liouville/polynomial.hpp"

namespace liouville {

enum class FieldKind { Liouville, General };

/// Plane vector field Xx d/dx + Xy d/dy with polynomial components.
///
/// Liouville fields preserve the form x dy and are exactly the fields
/// -x f'(y) d/dx + f(y) d/dy; they remember the germ f.
class PlaneField {
 public:
  static PlaneField from_germ(const RationalJet& f);
  static PlaneField general(BivarPoly xx, BivarPoly xy);

  FieldKind kind() const { return germ_ ? FieldKind::Liouville : FieldKind::General; }
  /// The defining germ in y; throws NotLiouville for general fields.
  const RationalJet& germ() const;
  const BivarPoly& xx() const { return xx_; }
  const BivarPoly& xy() const { return xy_; }

  /// Componentwise equality (germ truncation order is not compared).
  bool operator==(const PlaneField& o) const { return xx_ == o.xx_ && xy_ == o.xy_; }

 private:
  PlaneField(std::optional<RationalJet> germ, BivarPoly xx, BivarPoly xy)
      : germ_(std::move(germ)), xx_(std::move(xx)), xy_(std::move(xy)) {}

  std::optional<RationalJet> germ_;
  BivarPoly xx_;
  BivarPoly xy_;
};

inline PlaneField field_from_germ(const RationalJet& f) { return PlaneField::from_germ(f); }

/// The germ f when (xx, xy) = (-x f'(y), f(y)) exactly, else nullopt.
std::optional<RationalJet> detect_liouville(const BivarPoly& xx, const BivarPoly& xy,
                                            std::size_t order);

/// Components of L_X (x dy) = d(x Xy) + Xx dy - Xy dx:
/// (d/dx(x Xy) - Xy, d/dy(x Xy) + Xx). Zero iff X preserves x dy.
std::pair<BivarPoly, BivarPoly> lie_residual_2d(const PlaneField& X);

/// Plane diffeomorphism (x, y) -> (x / h'(y), h(y)).
struct LiouvilleDiffeo {
  RationalDiffeo h;
};

/// Pullback of x dy under a Liouville diffeomorphism minus x dy, as (dx, dy)
/// coefficients. The map's x-component carries 1/h'(y), so the dy part is
/// only meaningful through y-degree N - 1, where it must vanish.
std::pair<BivarPoly, BivarPoly> pullback_residual(const LiouvilleDiffeo& psi);

/// The field that psi carries onto X: field_from_germ(rk_action(f, h)).
/// psi maps X_g to X_f for g = rk_action(f, h).
PlaneField pushforward(const LiouvilleDiffeo& psi, const PlaneField& X);

enum class EquilibriumType { HyperbolicSaddle, DegenerateLine };

/// Zero of a Liouville field at (0, y*) with f(y*) = 0, or the whole line
/// y = y* when f'(y*) = 0 as well.
struct Equilibrium {
  double x = 0.0;
  double y = 0.0;
  std::optional<Rational> y_exact;   ///< Set when y* is rational.
  EquilibriumType type = EquilibriumType::HyperbolicSaddle;
  /// (-f'(y*), f'(y*)) for saddles.
  std::optional<std::pair<double, double>> eigenvalues;
  std::optional<Rational> slope_exact;  ///< f'(y*) when y* is rational.
};

/// Real zeros of the germ polynomial inside [lo, hi], sorted by y.
std::vector<Equilibrium> equilibria(const PlaneField& X, std::pair<double, double> y_interval);

/// Row space of the ideal <f> truncated to degree deg, in coordinates 1, y, ..., y^deg.
RowSpace singularity_class_tangent(const RationalJet& f, std::size_t deg);

/// Germ family sum_alpha p^alpha J_alpha over named rational parameters.
class GermFamily {
 public:
  using Multi = std::vector<unsigned>;

  GermFamily(std::vector<std::string> params, std::size_t order);

  /// Adds p^alpha * germ.
  GermFamily& add(const Multi& alpha, const RationalJet& germ);

  const std::vector<std::string>& params() const { return params_; }
  std::size_t order() const { return order_; }
  RationalJet at(std::span<const Rational> values) const;
  RationalJet base() const;
  /// d(family)/d(param i) at the parameter origin.
  RationalJet partial_at_origin(std::size_t i) const;

  /// a y + y^2.
  static GermFamily Q(std::size_t order = kDefaultOrder);
  /// a y + b y^2 + y^3.
  static GermFamily T(std::size_t order = kDefaultOrder);

 private:
  std::vector<std::string> params_;
  std::size_t order_;
  std::map<Multi, RationalJet> terms_;
};

PlaneField unfolding_Q(const Rational& a, std::size_t order = kDefaultOrder);
PlaneField unfolding_T(const Rational& a, const Rational& b, std::size_t order = kDefaultOrder);

struct TransversalityReport {
  bool transversal = false;
  std::size_t rank = 0;
  std::size_t codim = 0;
  /// Parameter derivatives at the origin, in parameter order.
  std::vector<RationalJet> derivatives;
};

/// Whether the parameter derivatives span span{y..y^deg} / <model>.
TransversalityReport transversality_check(const GermFamily& family, const RationalJet& model,
                                          std::size_t deg);

/// Formal linearization psi o h o psi^{-1} = lambda y, lambda = h'(0) = 1/a.
struct DiffeoLinearization {
  RationalDiffeo psi;
  Rational a;
  /// psi o h o psi^{-1} - lambda y; zero through order N.
  RationalJet residual;
};

DiffeoLinearization liouville_diffeo_linearize(const RationalDiffeo& h);

/// X ~ Y up to reversal of time: classify(germ X) == classify(-germ Y).
bool time_reversal_equivalent(const PlaneField& X, const PlaneField& Y);

}  // namespace liouville
