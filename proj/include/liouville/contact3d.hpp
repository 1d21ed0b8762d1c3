#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "liouville/jet.hpp"
#include "liouville/linalg.hpp"
#include "liouville/liouville2d.hpp"
#include "liouville/polynomial.hpp"

namespace liouville {

/// Vector field on R^3 with polynomial components, optionally remembering the
/// contact Hamiltonian it was built from. The contact form is dz + x dy.
struct Field3 {
  TrivarPoly xx;
  TrivarPoly xy;
  TrivarPoly xz;
  std::optional<TrivarPoly> hamiltonian;

  bool is_zero() const { return xx.is_zero() && xy.is_zero() && xz.is_zero(); }
  Field3 truncated(unsigned degree) const;
  Field3 homogeneous_part(unsigned degree) const;

  /// Compares components only.
  bool operator==(const Field3& o) const { return xx == o.xx && xy == o.xy && xz == o.xz; }
  friend Field3 operator+(const Field3& a, const Field3& b);
  friend Field3 operator-(const Field3& a, const Field3& b);
  friend Field3 operator*(const Rational& s, const Field3& f);
};

/// alpha(X) = Xz + x Xy.
TrivarPoly contact_hamiltonian(const Field3& X);

/// X_H = -H_y d/dx + H_x d/dy + (H - x H_x) d/dz. H must not depend on z.
Field3 field_from_hamiltonian(const TrivarPoly& H);

Field3 reeb_field();

/// Components of L_X alpha = d(alpha(X)) + i_X d alpha, with d alpha = dx ^ dy:
/// (d/dx(Xz + x Xy) - Xy, d/dy(Xz + x Xy) + Xx, d/dz(Xz + x Xy)).
std::array<TrivarPoly, 3> lie_residual_3d(const Field3& X);

/// Drops the z-component; Liouville kind when (Xx, Xy) = (-x f'(y), f(y)).
PlaneField project_to_plane(const Field3& X, std::size_t order = kDefaultOrder);

/// (Xx, Xy, c) for a Liouville plane field.
Field3 lift_liouville(const PlaneField& X, const Rational& c);

/// [X, Y]_i = sum_j X_j d_j Y_i - Y_j d_j X_i.
Field3 lie_bracket(const Field3& X, const Field3& Y);

/// The homogeneous basis of degree-d fields on R^3: three monomial families,
/// the paired fields and the Euler-type fields, in that order.
struct HomBasis {
  unsigned degree = 0;
  std::vector<Field3> fields;
  std::array<std::size_t, 3> class_counts{};
};

HomBasis homogeneous_basis(unsigned d);

/// d x y^{d-1} d/dx - y^d d/dy, the generator of the homogeneous strictly
/// contact fields of degree d.
Field3 liouville_homogeneous(unsigned d);

/// a (x d/dx - y d/dy).
Field3 linear_part_field(const Rational& a);

/// Coordinates of a homogeneous degree-d field in `basis`.
RationalVector basis_coordinates(const HomBasis& basis, const Field3& X);

/// Matrix of X -> [a X_1, X] on degree-d fields, columns indexed by the basis.
RationalMatrix ad_matrix(const Rational& a, unsigned d);

/// Number of zero diagonal entries of ad_matrix(a, d) (the ambient resonances).
std::size_t ad_kernel_dimension(const Rational& a, unsigned d);

/// sum_n ad_Y^n(X) / n!, truncated at total degree N.
Field3 exp_ad(const Field3& Y, const Field3& X, unsigned N);

/// Time-one map of y' = g(y) as a jet, for g vanishing to order >= 2.
RationalJet time_one_map(const RationalJet& g);

struct NormalFormStep {
  unsigned degree;
  Rational coefficient;  ///< Generator is coefficient * X_degree.
  Field3 generator;
};

struct NormalFormResult {
  Rational a;
  std::vector<NormalFormStep> log;
  Field3 field;
  /// y-component h of the composed plane transformation (x / h'(y), h(y)).
  RationalDiffeo plane_map;
};

/// Removes the degree >= 2 tail of X = a X_1 + sum c_d X_d degree by degree,
/// using generators (c_d / (a (1 - d))) X_d and Lie series transport.
NormalFormResult normal_form_linearize(const Field3& X, unsigned N);

/// Pullback of alpha = dz + x dy under (x / h'(y), h(y), z), minus alpha,
/// as (dx, dy, dz) coefficients truncated to y-degree N - 1.
std::array<TrivarPoly, 3> contact_pullback_residual(const RationalDiffeo& h);

}  // namespace liouville
