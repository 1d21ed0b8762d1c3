#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "liouville/jet.hpp"
#include "liouville/linalg.hpp"
#include "liouville/radical.hpp"

namespace liouville {

/// Verdict of the restricted contact (RK) classification of a univariate germ.
struct GermClass {
  enum class Kind { Unit, Linear, Power, Undetermined };

  Kind kind = Kind::Undetermined;
  Rational a = 0;            ///< c_1 for Linear.
  std::size_t k = 0;         ///< Order of vanishing for Power.
  int sign = 0;              ///< +-1 for Power; +1 whenever k is even.
  std::size_t truncation = 0;  ///< Jet order N, reported for Undetermined.

  static GermClass unit() { return {Kind::Unit}; }
  static GermClass linear(Rational a) { return {Kind::Linear, std::move(a)}; }
  static GermClass power(std::size_t k, int sign) { return {Kind::Power, 0, k, k % 2 == 0 ? 1 : sign}; }
  static GermClass undetermined(std::size_t n) { return {Kind::Undetermined, 0, 0, 0, n}; }

  /// k - 1 for Power, 0 for Linear; nullopt for Unit (not applicable) and Undetermined.
  std::optional<std::size_t> codim() const;

  /// Table symbol without sign: "", "A0", "A1", ...; "undetermined" for flat jets.
  std::string symbol() const;

  bool operator==(const GermClass&) const = default;
};

/// (1/phi') (f o phi). The derivative costs one order, so the result has
/// order min(order f, order phi) - 1. A right action:
/// rk_action(rk_action(f, phi), chi) = rk_action(f, phi o chi).
template <class Scalar>
Jet<Scalar> rk_action(const Jet<Scalar>& f, const DiffeoGerm<Scalar>& phi) {
  const Jet<Scalar> composed = compose(f, phi.jet());
  return reciprocal(derivative(phi.jet())) * composed;
}

GermClass classify_germ(const RationalJet& f);

/// Polynomial normal form of a class at the given order: 1, a x, sign x^k.
RationalJet normal_form(const GermClass& cls, std::size_t order);

/// Row space, in coordinates 1, x, ..., x^deg, of <f> + f' m truncated to
/// degree deg. deg may not exceed the jet order.
RowSpace rk_tangent_space(const RationalJet& f, std::size_t deg);

/// dim(m / T_RK f) measured in the degree-deg truncation.
std::size_t rk_codim_linear(const RationalJet& f, std::size_t deg);

/// Sufficient determinacy test: every x^{k+1}, ..., x^N lies in the span of
/// {x^i f : i >= 1} and {x^j f' : j >= 2} truncated to degree N.
bool is_k_determined(const RationalJet& f, std::size_t k);

/// Residue of the meromorphic form dx / f at 0. An RK invariant: RK action
/// is conjugacy of the 1D vector field f d/dx, and dx/f is its time form.
Rational rk_residue(const RationalJet& f);

/// A diffeomorphism bringing f to its normal form.
///
/// For order k >= 2 the reachable form is sign x^k + modulus x^{2k-1}: the
/// coefficient of x^{2k-1} cannot be removed because rk_residue is invariant,
/// and modulus = -rk_residue(f). When the residue vanishes the form is
/// exactly sign x^k. phi lives over Q(c) with c^{k-1} = sign / c_k, which is
/// usually irrational.
struct Normalization {
  DiffeoGerm<RadicalNumber> phi;
  GermClass cls;
  Rational modulus = 0;
  /// What rk_action(f, phi) equals through order N - 1.
  RationalJet form;
};

Normalization normalizing_diffeo(const RationalJet& f);

}  // namespace liouville
