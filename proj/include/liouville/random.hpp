#pragma once

#include <cstdint>
#include <random>

#include "liouville/jet.hpp"
#include "liouville/polynomial.hpp"

namespace liouville {

/// Seeded generators of random exact objects for property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

  /// p/q in [lo, hi] with 1 <= q <= max_den.
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 4) {
    const std::int64_t q = integer(1, max_den);
    return Rational(integer(lo * q, hi * q)) / q;
  }

  Rational nonzero_rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 4) {
    for (;;) {
      Rational r = rational(lo, hi, max_den);
      if (!is_zero(r)) return r;
    }
  }

  /// Jet with coefficients of degree first..last random in [lo, hi].
  RationalJet jet(std::size_t order, std::size_t first, std::size_t last, std::int64_t lo = -5,
                  std::int64_t hi = 5) {
    RationalJet f(order);
    for (std::size_t i = first; i <= last && i <= order; ++i) f[i] = rational(lo, hi);
    return f;
  }

  /// c1 x + ... with c1 != 0 and higher coefficients in [-2, 2].
  RationalDiffeo diffeo(std::size_t order, std::size_t last = 6) {
    RationalJet h = jet(order, 2, last, -2, 2);
    h[1] = nonzero_rational(-3, 3);
    return RationalDiffeo(h);
  }

  template <std::size_t Vars>
  Polynomial<Vars> polynomial(unsigned degree, std::int64_t lo = -3, std::int64_t hi = 3,
                              double density = 0.5) {
    Polynomial<Vars> p;
    std::bernoulli_distribution keep(density);
    typename Polynomial<Vars>::Exponent e{};
    fill<Vars>(p, e, 0, degree, lo, hi, keep);
    return p;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  template <std::size_t Vars>
  void fill(Polynomial<Vars>& p, typename Polynomial<Vars>::Exponent& e, std::size_t var,
            unsigned budget, std::int64_t lo, std::int64_t hi, std::bernoulli_distribution& keep) {
    if (var == Vars) {
      if (keep(eng_)) p.add_term(e, rational(lo, hi));
      return;
    }
    for (unsigned k = 0; k <= budget; ++k) {
      e[var] = k;
      fill<Vars>(p, e, var + 1, budget - k, lo, hi, keep);
    }
    e[var] = 0;
  }

  std::mt19937_64 eng_;
};

}  // namespace liouville
