#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/rational.hpp"

namespace liouville {

/// The number field Q(theta) with theta^degree = radicand, where theta is a
/// fixed real root and X^degree - radicand is irreducible over Q.
/// degree == 1 is Q itself.
struct RadicalField {
  unsigned degree = 1;
  Rational radicand = 1;

  /// Real value of the generator theta.
  double theta() const;
  bool operator==(const RadicalField&) const = default;
};

/// Element of a RadicalField, stored as sum_i c_i theta^i, i < degree.
class RadicalNumber {
 public:
  RadicalNumber() : RadicalNumber(Rational(0)) {}
  RadicalNumber(int v) : RadicalNumber(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RadicalNumber(Rational v) : coeffs_{std::move(v)} {}  // NOLINT(google-explicit-constructor)
  RadicalNumber(RadicalField field, std::vector<Rational> coeffs);

  static RadicalNumber generator(const RadicalField& field);

  /// Smallest field containing a real c with c^n = r, together with that c.
  /// For even n, r must be positive and the positive root is chosen.
  static RadicalNumber real_root(const Rational& r, unsigned n);

  const RadicalField& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws unless is_rational().
  Rational rational_value() const;
  double to_double() const;

  RadicalNumber operator-() const;
  RadicalNumber& operator+=(const RadicalNumber& o);
  RadicalNumber& operator-=(const RadicalNumber& o);
  RadicalNumber& operator*=(const RadicalNumber& o);
  RadicalNumber& operator/=(const RadicalNumber& o);
  RadicalNumber inverse() const;

  friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) { return a += b; }
  friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) { return a -= b; }
  friend RadicalNumber operator*(RadicalNumber a, const RadicalNumber& b) { return a *= b; }
  friend RadicalNumber operator/(RadicalNumber a, const RadicalNumber& b) { return a /= b; }
  friend bool operator==(const RadicalNumber& a, const RadicalNumber& b);

  /// "1/2", or "1/2 + 3*t + -1/4*t^2" with t the field generator.
  std::string to_string() const;

 private:
  // Rewrites *this and o into a common field (promoting Q), throws on mismatch.
  void unify(RadicalNumber& o);
  void unify_into(const RadicalField& f);

  RadicalField field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const RadicalNumber& r) { return r.is_zero(); }
inline double to_double(const RadicalNumber& r) { return r.to_double(); }

}  // namespace liouville
