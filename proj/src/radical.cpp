#include "liouville/radical.hpp"

#include <cmath>

#include "liouville/errors.hpp"
#include "liouville/linalg.hpp"

namespace liouville {

double RadicalField::theta() const {
  const double r = liouville::to_double(radicand);
  if (degree == 1) return r;
  if (r < 0) return -std::pow(-r, 1.0 / degree);
  return std::pow(r, 1.0 / degree);
}

RadicalNumber::RadicalNumber(RadicalField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (field_.degree == 0) throw Error(ErrorCode::InvalidArgument, "radical field of degree 0");
  if (coeffs_.size() > field_.degree)
    throw Error(ErrorCode::InvalidArgument, "too many coefficients for radical field");
  coeffs_.resize(field_.degree);
}

RadicalNumber RadicalNumber::generator(const RadicalField& field) {
  if (field.degree == 1) return RadicalNumber(field.radicand);
  std::vector<Rational> c(field.degree);
  c[1] = 1;
  return RadicalNumber(field, std::move(c));
}

RadicalNumber RadicalNumber::real_root(const Rational& r, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "zeroth root");
  if (r.is_zero()) return RadicalNumber(0);
  if (n % 2 == 0 && r.sign() < 0)
    throw Error(ErrorCode::InvalidArgument, "even root of a negative rational");
  // Largest d | n with r an exact d-th power: then c = s^(1/(n/d)) and
  // X^(n/d) - s is irreducible (Capelli; s > 0 whenever n/d is even).
  for (unsigned d = n; d >= 1; --d) {
    if (n % d != 0) continue;
    if (auto s = exact_root(r, d)) {
      const unsigned rest = n / d;
      if (rest == 1) return RadicalNumber(*s);
      return generator(RadicalField{rest, *s});
    }
  }
  throw Error(ErrorCode::InternalInvariant, "exact_root failed for d = 1");
}

bool RadicalNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool RadicalNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational RadicalNumber::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "radical number is irrational");
  return coeffs_[0];
}

double RadicalNumber::to_double() const {
  const double t = field_.theta();
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + liouville::to_double(coeffs_[i]);
  return acc;
}

void RadicalNumber::unify_into(const RadicalField& f) {
  if (field_ == f) return;
  if (field_.degree != 1)
    throw Error(ErrorCode::FieldMismatch, "radical numbers from different fields");
  Rational v = coeffs_[0];
  field_ = f;
  coeffs_.assign(f.degree, Rational(0));
  coeffs_[0] = std::move(v);
}

void RadicalNumber::unify(RadicalNumber& o) {
  if (field_ == o.field_) return;
  if (field_.degree == 1)
    unify_into(o.field_);
  else
    o.unify_into(field_);
}

RadicalNumber RadicalNumber::operator-() const {
  RadicalNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& o) {
  RadicalNumber rhs = o;
  unify(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& o) {
  RadicalNumber rhs = o;
  unify(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& o) {
  if (o.field_.degree == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (field_.degree == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (!(field_ == o.field_))
    throw Error(ErrorCode::FieldMismatch, "radical numbers from different fields");
  const unsigned n = field_.degree;
  std::vector<Rational> prod(n);
  for (unsigned i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      Rational t = coeffs_[i] * o.coeffs_[j];
      if (i + j >= n)
        prod[i + j - n] += t * field_.radicand;
      else
        prod[i + j] += t;
    }
  }
  coeffs_ = std::move(prod);
  return *this;
}

RadicalNumber RadicalNumber::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  const unsigned n = field_.degree;
  if (n == 1) return RadicalNumber(Rational(1) / coeffs_[0]);
  // Column j of the multiplication matrix is (*this) * theta^j.
  RationalMatrix m(n, n);
  RadicalNumber col = *this;
  const RadicalNumber theta = generator(field_);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) m(i, j) = col.coeffs_[i];
    col *= theta;
  }
  RationalVector e = RationalVector::Zero(n);
  e(0) = 1;
  auto x = solve(m, e);
  if (!x) throw Error(ErrorCode::InternalInvariant, "radical field is not a field");
  return RadicalNumber(field_, std::vector<Rational>(x->data(), x->data() + n));
}

RadicalNumber& RadicalNumber::operator/=(const RadicalNumber& o) { return *this *= o.inverse(); }

bool operator==(const RadicalNumber& a, const RadicalNumber& b) {
  RadicalNumber x = a;
  RadicalNumber y = b;
  if (!(x.field_ == y.field_)) {
    // Q embeds into every field; two distinct proper fields only meet in Q.
    if (x.is_rational() && y.is_rational()) return x.coeffs_[0] == y.coeffs_[0];
    if (x.field_.degree != 1 && y.field_.degree != 1) return false;
    x.unify(y);
  }
  return x.coeffs_ == y.coeffs_;
}

std::string RadicalNumber::to_string() const {
  if (is_rational()) return to_fraction_string(coeffs_[0]);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += to_fraction_string(coeffs_[i]);
    if (i >= 1) out += "*t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace liouville
