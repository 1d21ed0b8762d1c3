#include "liouville/germclass.hpp"

#include <utility>
#include <vector>

namespace liouville {

std::optional<std::size_t> GermClass::codim() const {
  switch (kind) {
    case Kind::Linear: return 0;
    case Kind::Power: return k - 1;
    default: return std::nullopt;
  }
}

std::string GermClass::symbol() const {
  switch (kind) {
    case Kind::Unit: return "";
    case Kind::Linear: return "A0";
    case Kind::Power: return "A" + std::to_string(k - 1);
    case Kind::Undetermined: return "undetermined";
  }
  return "undetermined";
}

GermClass classify_germ(const RationalJet& f) {
  const auto k = order_of_vanishing(f);
  if (!k) return GermClass::undetermined(f.order());
  if (*k == 0) return GermClass::unit();
  if (*k == 1) return GermClass::linear(f[1]);
  return GermClass::power(*k, sign(f[*k]));
}

RationalJet normal_form(const GermClass& cls, std::size_t order) {
  switch (cls.kind) {
    case GermClass::Kind::Unit: return RationalJet::constant(order, 1);
    case GermClass::Kind::Linear: return RationalJet::monomial(order, 1, cls.a);
    case GermClass::Kind::Power: return RationalJet::monomial(order, cls.k, Rational(cls.sign));
    case GermClass::Kind::Undetermined: break;
  }
  throw Error(ErrorCode::Undetermined, "no normal form for an undetermined germ");
}

namespace {

void require_nonzero(const RationalJet& f) {
  if (f.is_zero())
    throw Error(ErrorCode::ZeroGerm, "germ vanishes through order " + std::to_string(f.order()));
}

// Row with the coefficients of x^shift * g in degrees 0..deg.
void put_shifted(RationalMatrix& m, Eigen::Index row, const RationalJet& g, std::size_t shift,
                 std::size_t deg) {
  for (std::size_t i = 0; i <= g.order() && i + shift <= deg; ++i)
    m(row, static_cast<Eigen::Index>(i + shift)) = g[i];
}

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RationalMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
}

}  // namespace

RowSpace rk_tangent_space(const RationalJet& f, std::size_t deg) {
  require_nonzero(f);
  if (deg > f.order())
    throw Error(ErrorCode::InvalidArgument, "tangent space degree exceeds the jet order");
  const RationalJet df = derivative(f);
  RationalMatrix m = zero_matrix(2 * deg + 1, deg + 1);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i <= deg; ++i) put_shifted(m, row++, f, i, deg);
  for (std::size_t j = 1; j <= deg; ++j) put_shifted(m, row++, df, j, deg);
  return row_reduce(std::move(m));
}

std::size_t rk_codim_linear(const RationalJet& f, std::size_t deg) {
  const RowSpace t = rk_tangent_space(f, deg);
  // dim(E_deg / (T + <1>)) equals dim(m / T) for non-units and 0 for units.
  RationalMatrix one = zero_matrix(1, deg + 1);
  one(0, 0) = 1;
  const auto r = rank(vstack(t.basis, one));
  return deg + 1 - static_cast<std::size_t>(r);
}

bool is_k_determined(const RationalJet& f, std::size_t k) {
  require_nonzero(f);
  const std::size_t n = f.order();
  if (k + 1 > n)
    throw Error(ErrorCode::InvalidArgument, "determinacy degree k + 1 exceeds the jet order");
  const RationalJet df = derivative(f);
  RationalMatrix m = zero_matrix(2 * n, n + 1);
  Eigen::Index row = 0;
  for (std::size_t i = 1; i <= n; ++i) put_shifted(m, row++, f, i, n);
  for (std::size_t j = 2; j <= n; ++j) put_shifted(m, row++, df, j, n);
  const RowSpace span = row_reduce(std::move(m));
  for (std::size_t d = k + 1; d <= n; ++d) {
    RationalVector e = RationalVector::Zero(static_cast<Eigen::Index>(n + 1));
    e(static_cast<Eigen::Index>(d)) = 1;
    if (!span.contains(e)) return false;
  }
  return true;
}

Rational rk_residue(const RationalJet& f) {
  require_nonzero(f);
  const std::size_t k = *order_of_vanishing(f);
  if (k == 0) return 0;
  // 1/f = x^{-k} / u with u = f / x^k a unit; the residue is [x^{k-1}] (1/u).
  RationalJet u(f.order() - k);
  for (std::size_t i = k; i <= f.order(); ++i) u[i - k] = f[i];
  if (k - 1 > u.order())
    throw Error(ErrorCode::Undetermined, "jet too short to determine the residue");
  return reciprocal(u)[k - 1];
}

namespace {

// Tangent-to-identity phi with rk_action(f, phi) = lead x^k (+ modulus x^{2k-1})
// through order N - 1. The coefficient phi_j first reaches degree k + j - 1,
// with slope lead * (k - j); j = k is the resonant, unremovable slot.
RationalJet homological_solve(const RationalJet& f, std::size_t k, Rational& modulus) {
  const std::size_t n = f.order();
  const Rational lead = f[k];
  RationalJet phi = RationalJet::identity(n);
  for (std::size_t j = 2; k + j - 1 <= n - 1; ++j) {
    const std::size_t target = k + j - 1;
    const Rational err = rk_action(f, RationalDiffeo(phi))[target];
    if (j == k) {
      modulus = err;
      continue;
    }
    phi[j] = -err / (lead * Rational(static_cast<long>(k) - static_cast<long>(j)));
  }
  return phi;
}

}  // namespace

Normalization normalizing_diffeo(const RationalJet& f) {
  require_nonzero(f);
  const std::size_t n = f.order();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "normalization needs a jet of order >= 2");
  const GermClass cls = classify_germ(f);

  if (cls.kind == GermClass::Kind::Unit) {
    // k' = 1/f gives rk_action(1, k) = f; its inverse solves phi' = f(phi).
    const RationalDiffeo k(integrate(reciprocal(f)).truncated(n));
    return {DiffeoGerm<RadicalNumber>(jet_cast<RadicalNumber>(comp_inverse(k).jet())), cls, 0,
            RationalJet::constant(n - 1, 1)};
  }

  const std::size_t k = *order_of_vanishing(f);
  Rational lambda = 0;
  const RationalJet tangent = homological_solve(f, k, lambda);

  if (cls.kind == GermClass::Kind::Linear) {
    return {DiffeoGerm<RadicalNumber>(jet_cast<RadicalNumber>(tangent)), cls, 0,
            RationalJet::monomial(n - 1, 1, cls.a)};
  }

  // Scaling x -> c x sends a x^k + mu x^{2k-1} to a c^{k-1} x^k + mu c^{2k-2} x^{2k-1}.
  const Rational a = f[k];
  const RadicalNumber c = RadicalNumber::real_root(Rational(cls.sign) / a, static_cast<unsigned>(k - 1));
  std::vector<RadicalNumber> coeffs(n + 1);
  RadicalNumber cpow = c;
  for (std::size_t i = 1; i <= n; ++i) {
    coeffs[i] = RadicalNumber(tangent[i]) * cpow;
    cpow *= c;
  }
  const Rational modulus = lambda / (a * a);
  RationalJet form = RationalJet::monomial(n - 1, k, Rational(cls.sign));
  if (2 * k - 1 <= n - 1) form[2 * k - 1] = modulus;
  return {DiffeoGerm<RadicalNumber>(Jet<RadicalNumber>(n, std::move(coeffs))), cls, modulus,
          std::move(form)};
}

}  // namespace liouville
