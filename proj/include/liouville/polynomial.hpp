#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/jet.hpp"
#include "liouville/rational.hpp"

namespace liouville {

/// Sparse polynomial in `Vars` variables with exact coefficients. Zero
/// coefficients are never stored, so structural equality is value equality.
template <std::size_t Vars, class Scalar = Rational>
class Polynomial {
 public:
  using Exponent = std::array<unsigned, Vars>;
  using Terms = std::map<Exponent, Scalar>;

  Polynomial() = default;

  static Polynomial constant(const Scalar& c) { return monomial(Exponent{}, c); }
  static Polynomial variable(std::size_t var) {
    Exponent e{};
    e.at(var) = 1;
    return monomial(e, Scalar(1));
  }
  static Polynomial monomial(const Exponent& e, const Scalar& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Exponent& e, const Scalar& c) {
    if (liouville::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (liouville::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
      d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
    return d;
  }

  bool depends_on(std::size_t var) const {
    for (const auto& [e, c] : terms_)
      if (e[var] != 0) return true;
    return false;
  }

  /// Terms of total degree exactly d.
  Polynomial homogeneous_part(unsigned d) const {
    Polynomial out;
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0u) == d) out.terms_.emplace(e, c);
    return out;
  }

  /// Drops every term of total degree above d.
  Polynomial truncated(unsigned d) const {
    Polynomial out;
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0u) <= d) out.terms_.emplace(e, c);
    return out;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < Vars; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    Polynomial out;
    if (liouville::is_zero(s)) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  template <class T>
  T evaluate(const std::array<T, Vars>& point) const {
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T term = T(liouville::to_double(c));
      for (std::size_t i = 0; i < Vars; ++i)
        for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
      acc += term;
    }
    return acc;
  }

 private:
  Terms terms_;
};

template <std::size_t Vars, class Scalar>
Polynomial<Vars, Scalar> diff(const Polynomial<Vars, Scalar>& p, std::size_t var) {
  Polynomial<Vars, Scalar> out;
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    auto f = e;
    --f[var];
    out.add_term(f, Scalar(static_cast<int>(e[var])) * c);
  }
  return out;
}

/// Antiderivative in `var` with no var-free constant of integration.
template <std::size_t Vars, class Scalar>
Polynomial<Vars, Scalar> integrate(const Polynomial<Vars, Scalar>& p, std::size_t var) {
  Polynomial<Vars, Scalar> out;
  for (const auto& [e, c] : p.terms()) {
    auto f = e;
    ++f[var];
    out.add_term(f, c / Scalar(static_cast<int>(f[var])));
  }
  return out;
}

using BivarPoly = Polynomial<2>;
using TrivarPoly = Polynomial<3>;

/// Index of each coordinate in exponent arrays.
inline constexpr std::size_t kX = 0;
inline constexpr std::size_t kY = 1;
inline constexpr std::size_t kZ = 2;

/// Embeds a univariate jet as a polynomial in variable `var`.
template <std::size_t Vars>
Polynomial<Vars> from_jet(const RationalJet& f, std::size_t var) {
  Polynomial<Vars> out;
  for (std::size_t i = 0; i <= f.order(); ++i) {
    typename Polynomial<Vars>::Exponent e{};
    e[var] = static_cast<unsigned>(i);
    out.add_term(e, f[i]);
  }
  return out;
}

/// Reads back a polynomial that only involves `var`; nullopt otherwise.
template <std::size_t Vars>
std::optional<RationalJet> to_jet(const Polynomial<Vars>& p, std::size_t var, std::size_t order) {
  RationalJet out(order);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < Vars; ++i)
      if (i != var && e[i] != 0) return std::nullopt;
    if (e[var] <= order) out[e[var]] = c;
  }
  return out;
}

/// Lifts a polynomial into more variables, keeping the leading coordinates.
template <std::size_t To, std::size_t From>
Polynomial<To> widen(const Polynomial<From>& p) {
  static_assert(To >= From);
  Polynomial<To> out;
  for (const auto& [e, c] : p.terms()) {
    typename Polynomial<To>::Exponent f{};
    for (std::size_t i = 0; i < From; ++i) f[i] = e[i];
    out.add_term(f, c);
  }
  return out;
}

/// Drops trailing coordinates; throws when the polynomial depends on them.
template <std::size_t To, std::size_t From>
Polynomial<To> narrow(const Polynomial<From>& p) {
  static_assert(To <= From);
  Polynomial<To> out;
  for (const auto& [e, c] : p.terms()) {
    typename Polynomial<To>::Exponent f{};
    for (std::size_t i = 0; i < From; ++i) {
      if (i < To)
        f[i] = e[i];
      else if (e[i] != 0)
        throw Error(ErrorCode::InvalidArgument, "polynomial depends on a dropped variable");
    }
    out.add_term(f, c);
  }
  return out;
}

/// Human-readable form in the variables x, y, z, e.g. "-3*x*y^2 + 1/2*y".
/// Terms are printed highest total degree first; the output re-parses to the
/// same polynomial.
template <std::size_t Vars>
std::string to_string(const Polynomial<Vars>& p) {
  static_assert(Vars <= 3);
  static constexpr char kNames[] = {'x', 'y', 'z'};
  if (p.is_zero()) return "0";
  std::vector<std::pair<typename Polynomial<Vars>::Exponent, Rational>> terms(p.terms().begin(),
                                                                                p.terms().end());
  auto total = [](const auto& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    if (total(a.first) != total(b.first)) return total(a.first) > total(b.first);
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    Rational mag = c.sign() < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < Vars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += to_fraction_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_fraction_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace liouville
