#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/radical.hpp"
#include "liouville/rational.hpp"

namespace liouville {

/// Default truncation order for germs.
inline constexpr std::size_t kDefaultOrder = 12;

/// Truncated univariate power series c_0 + c_1 x + ... + c_N x^N over an exact
/// field. Binary operations between jets of different order truncate to the
/// smaller one.
template <class Scalar>
class Jet {
 public:
  Jet() : coeffs_(1, Scalar(0)) {}
  explicit Jet(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}

  /// Coefficients beyond `order` are dropped, missing ones are zero.
  Jet(std::size_t order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Scalar(0));
  }

  static Jet constant(std::size_t order, Scalar value) {
    Jet j(order);
    j.coeffs_[0] = std::move(value);
    return j;
  }
  static Jet monomial(std::size_t order, std::size_t degree, Scalar value = Scalar(1)) {
    Jet j(order);
    if (degree <= order) j.coeffs_[degree] = std::move(value);
    return j;
  }
  /// The jet of x.
  static Jet identity(std::size_t order) { return monomial(order, 1); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  /// Coefficient of x^i, zero past the truncation.
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Jet truncated(std::size_t order) const {
    return Jet(order, std::vector<Scalar>(coeffs_.begin(),
                                          coeffs_.begin() + std::min(order + 1, coeffs_.size())));
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Scalar& c) { return liouville::is_zero(c); });
  }

  Jet operator-() const {
    Jet out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Jet out(n);
    for (std::size_t i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }
  friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

  friend Jet operator*(const Jet& f, const Jet& g) {
    const std::size_t n = std::min(f.order(), g.order());
    Jet out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (liouville::is_zero(f.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (liouville::is_zero(g.coeffs_[j])) continue;
        out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
      }
    }
    return out;
  }

  friend Jet operator*(const Scalar& s, Jet f) {
    for (auto& c : f.coeffs_) c = s * c;
    return f;
  }

  /// Exact equality of order and every coefficient.
  friend bool operator==(const Jet& a, const Jet& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
};

using RationalJet = Jet<Rational>;

/// True when f and g agree in every coefficient of degree <= n. Both jets must
/// carry at least order n.
template <class Scalar>
bool agree_through(const Jet<Scalar>& f, const Jet<Scalar>& g, std::size_t n) {
  if (f.order() < n || g.order() < n) return false;
  for (std::size_t i = 0; i <= n; ++i)
    if (!(f[i] == g[i])) return false;
  return true;
}

template <class To, class From>
Jet<To> jet_cast(const Jet<From>& f) {
  std::vector<To> c;
  c.reserve(f.order() + 1);
  for (const auto& v : f.coeffs()) c.emplace_back(To(v));
  return Jet<To>(f.order(), std::move(c));
}

template <class Scalar>
Jet<Scalar> mul(const Jet<Scalar>& f, const Jet<Scalar>& g) {
  return f * g;
}

/// f o phi, by Horner's rule in the truncated ring.
template <class Scalar>
Jet<Scalar> compose(const Jet<Scalar>& f, const Jet<Scalar>& phi) {
  if (!liouville::is_zero(phi[0]))
    throw Error(ErrorCode::NonzeroConstantTerm, "composition needs phi(0) = 0");
  const std::size_t n = std::min(f.order(), phi.order());
  const Jet<Scalar> p = phi.truncated(n);
  Jet<Scalar> acc = Jet<Scalar>::constant(n, f[n]);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * p;
    acc[0] += f[i];
  }
  return acc;
}

/// g with f * g = 1 through the order of f.
template <class Scalar>
Jet<Scalar> reciprocal(const Jet<Scalar>& f) {
  if (liouville::is_zero(f[0]))
    throw Error(ErrorCode::ZeroConstantTerm, "reciprocal needs f(0) != 0");
  const std::size_t n = f.order();
  const Scalar inv = Scalar(1) / f[0];
  Jet<Scalar> g(n);
  g[0] = inv;
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc(0);
    for (std::size_t i = 1; i <= k; ++i)
      if (!liouville::is_zero(f[i])) acc += f[i] * g[k - i];
    g[k] = -(acc * inv);
  }
  return g;
}

/// Formal derivative; the order drops by one (a constant jet stays order 0).
template <class Scalar>
Jet<Scalar> derivative(const Jet<Scalar>& f) {
  const std::size_t n = f.order();
  if (n == 0) return Jet<Scalar>(0);
  Jet<Scalar> out(n - 1);
  for (std::size_t i = 1; i <= n; ++i) out[i - 1] = Scalar(static_cast<int>(i)) * f[i];
  return out;
}

/// Antiderivative with zero constant term; the order rises by one.
template <class Scalar>
Jet<Scalar> integrate(const Jet<Scalar>& f) {
  const std::size_t n = f.order();
  Jet<Scalar> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i + 1] = f[i] / Scalar(static_cast<int>(i + 1));
  return out;
}

/// Smallest k with c_k != 0, or nullopt (undetermined) for the zero jet.
template <class Scalar>
std::optional<std::size_t> order_of_vanishing(const Jet<Scalar>& f) {
  for (std::size_t i = 0; i <= f.order(); ++i)
    if (!liouville::is_zero(f[i])) return i;
  return std::nullopt;
}

template <class Scalar>
double evaluate(const Jet<Scalar>& f, double x) {
  double acc = 0.0;
  for (std::size_t i = f.order() + 1; i-- > 0;) acc = acc * x + liouville::to_double(f[i]);
  return acc;
}

/// Germ of a local diffeomorphism of (R, 0): c_0 = 0, c_1 != 0.
template <class Scalar>
class DiffeoGerm {
 public:
  explicit DiffeoGerm(Jet<Scalar> jet) : jet_(std::move(jet)) {
    if (jet_.order() < 1 || !liouville::is_zero(jet_[0]) || liouville::is_zero(jet_[1]))
      throw Error(ErrorCode::InvalidDiffeo, "diffeomorphism germ needs c0 = 0 and c1 != 0");
  }

  static DiffeoGerm identity(std::size_t order) { return DiffeoGerm(Jet<Scalar>::identity(order)); }

  const Jet<Scalar>& jet() const { return jet_; }
  std::size_t order() const { return jet_.order(); }

 private:
  Jet<Scalar> jet_;
};

using RationalDiffeo = DiffeoGerm<Rational>;

/// psi with phi o psi = x. Solved coefficient by coefficient: the degree-n
/// coefficient of phi o psi is c_1 psi_n plus terms in psi_2 .. psi_{n-1}.
template <class Scalar>
DiffeoGerm<Scalar> comp_inverse(const DiffeoGerm<Scalar>& phi) {
  const auto& p = phi.jet();
  const std::size_t n = p.order();
  const Scalar inv = Scalar(1) / p[1];
  Jet<Scalar> psi = Jet<Scalar>::monomial(n, 1, inv);
  for (std::size_t k = 2; k <= n; ++k) {
    const Jet<Scalar> trial = compose(p, psi);
    psi[k] = -(trial[k] * inv);
  }
  return DiffeoGerm<Scalar>(std::move(psi));
}

template <class Scalar>
DiffeoGerm<Scalar> compose(const DiffeoGerm<Scalar>& phi, const DiffeoGerm<Scalar>& chi) {
  return DiffeoGerm<Scalar>(compose(phi.jet(), chi.jet()));
}

}  // namespace liouville
