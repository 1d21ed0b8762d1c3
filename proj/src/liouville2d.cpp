#include "liouville/liouville2d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace liouville {

// ---------------------------------------------------------------------------
// Fields

PlaneField PlaneField::from_germ(const RationalJet& f) {
  BivarPoly fy = from_jet<2>(f, kY);
  BivarPoly xx = -(BivarPoly::variable(kX) * from_jet<2>(derivative(f), kY));
  return PlaneField(f, std::move(xx), std::move(fy));
}

PlaneField PlaneField::general(BivarPoly xx, BivarPoly xy) {
  return PlaneField(std::nullopt, std::move(xx), std::move(xy));
}

const RationalJet& PlaneField::germ() const {
  if (!germ_) throw Error(ErrorCode::NotLiouville, "field is not of Liouville kind");
  return *germ_;
}

std::optional<RationalJet> detect_liouville(const BivarPoly& xx, const BivarPoly& xy,
                                            std::size_t order) {
  const auto deg = static_cast<std::size_t>(std::max(xy.degree(), 0));
  auto f = to_jet(xy, kY, std::max(order, deg));
  if (!f) return std::nullopt;
  const BivarPoly expected = -(BivarPoly::variable(kX) * from_jet<2>(derivative(*f), kY));
  if (!(expected == xx)) return std::nullopt;
  return f;
}

std::pair<BivarPoly, BivarPoly> lie_residual_2d(const PlaneField& X) {
  const BivarPoly h = BivarPoly::variable(kX) * X.xy();
  return {diff(h, kX) - X.xy(), diff(h, kY) + X.xx()};
}

std::pair<BivarPoly, BivarPoly> pullback_residual(const LiouvilleDiffeo& psi) {
  // F = (x / h'(y), h(y)): F^*(x dy) = (x / h') (0 dx + h' dy).
  const RationalJet dh = derivative(psi.h.jet());
  const RationalJet dy_coeff = reciprocal(dh) * dh - RationalJet::constant(dh.order(), 1);
  return {BivarPoly(), BivarPoly::variable(kX) * from_jet<2>(dy_coeff, kY)};
}

PlaneField pushforward(const LiouvilleDiffeo& psi, const PlaneField& X) {
  if (X.kind() != FieldKind::Liouville)
    throw Error(ErrorCode::KindMismatch, "pushforward is defined for Liouville fields");
  return field_from_germ(rk_action(X.germ(), psi.h));
}

bool time_reversal_equivalent(const PlaneField& X, const PlaneField& Y) {
  return classify_germ(X.germ()) == classify_germ(-Y.germ());
}

// ---------------------------------------------------------------------------
// Real roots of the germ polynomial

namespace {

using Poly = std::vector<Rational>;  // low degree first, trimmed

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

double eval(const Poly& p, double x) {
  double acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + to_double(p[i]);
  return acc;
}

Poly deriv(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(static_cast<long>(i)) * p[i]);
  trim(out);
  return out;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational lead = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    const Rational c = a[i + b.size() - 1] / lead;
    q[i] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, deriv(p)};
  while (chain.back().size() > 1) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = eval(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  return out;
}

// Above this, divisor enumeration is skipped; roots are still found by
// isolation, just without the exact rational label.
const Integer kDivisorLimit("1000000000000");

std::vector<Rational> rational_roots(Poly p) {
  std::vector<Rational> roots;
  trim(p);
  std::size_t shift = 0;
  while (shift < p.size() && p[shift].is_zero()) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (p.size() <= 1) return roots;
  Integer l = 1;
  for (const auto& c : p) {
    const Integer d = boost::multiprecision::denominator(c);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  std::vector<Integer> ints;
  for (const auto& c : p) ints.push_back(boost::multiprecision::numerator(c * Rational(l)));
  const Integer a0 = ints.front();
  const Integer an = ints.back();
  if (boost::multiprecision::abs(a0) > kDivisorLimit || boost::multiprecision::abs(an) > kDivisorLimit)
    return roots;
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an))
      for (int s : {1, -1}) {
        const Rational r(Integer(s) * num, den);
        if (eval(p, r).is_zero() &&
            std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  return roots;
}

}  // namespace

std::vector<Equilibrium> equilibria(const PlaneField& X, std::pair<double, double> y_interval) {
  const RationalJet& f = X.germ();
  if (f.is_zero()) throw Error(ErrorCode::ZeroGerm, "every point is an equilibrium of the zero field");
  const Rational lo(y_interval.first);
  const Rational hi(y_interval.second);
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty y interval");

  Poly p(f.coeffs().begin(), f.coeffs().end());
  trim(p);
  const Poly dp = deriv(p);
  const Poly g = gcd(p, dp);
  Poly s = divmod(p, g).first;  // square-free part

  std::vector<Equilibrium> out;
  for (const auto& r : rational_roots(s)) {
    if (r < lo || r > hi) continue;
    Equilibrium e;
    e.y = to_double(r);
    e.y_exact = r;
    const Rational slope = eval(dp, r);
    e.slope_exact = slope;
    if (slope.is_zero()) {
      e.type = EquilibriumType::DegenerateLine;
    } else {
      e.type = EquilibriumType::HyperbolicSaddle;
      e.eigenvalues = std::make_pair(-to_double(slope), to_double(slope));
    }
    out.push_back(std::move(e));
    s = divmod(s, Poly{-r, 1}).first;
  }
  // Deflating every rational root outside the interval as well keeps s free
  // of rational zeros, so rational bisection points are never roots.
  for (const auto& r : rational_roots(s)) s = divmod(s, Poly{-r, 1}).first;

  if (s.size() > 2) {
    const auto chain = sturm_chain(s);
    const Poly q = gcd(s, g);  // roots of s that are multiple roots of f
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    std::vector<std::pair<Rational, Rational>> isolated;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const int n = variations(chain, a) - variations(chain, b);
      if (n == 0) continue;
      if (n == 1) {
        isolated.emplace_back(a, b);
        continue;
      }
      const Rational m = (a + b) / 2;
      stack.emplace_back(m, b);
      stack.emplace_back(a, m);
    }
    const Rational width(1, 1LL << 40);
    for (auto [a, b] : isolated) {
      const int sa = eval(s, a).sign();
      while (b - a > width) {
        const Rational m = (a + b) / 2;
        if (eval(s, m).sign() == sa)
          a = m;
        else
          b = m;
      }
      Equilibrium e;
      e.y = to_double((a + b) / 2);
      const bool multiple = q.size() > 1 && eval(q, a).sign() * eval(q, b).sign() < 0;
      if (multiple) {
        e.type = EquilibriumType::DegenerateLine;
      } else {
        const double slope = eval(dp, e.y);
        e.type = EquilibriumType::HyperbolicSaddle;
        e.eigenvalues = std::make_pair(-slope, slope);
      }
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.y < b.y; });
  return out;
}

// ---------------------------------------------------------------------------
// Singularity classes and unfoldings

RowSpace singularity_class_tangent(const RationalJet& f, std::size_t deg) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroGerm, "tangent space of the zero germ");
  if (deg > f.order())
    throw Error(ErrorCode::InvalidArgument, "tangent space degree exceeds the jet order");
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(deg + 1),
                                          static_cast<Eigen::Index>(deg + 1));
  for (std::size_t i = 0; i <= deg; ++i)
    for (std::size_t j = 0; j <= f.order() && i + j <= deg; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + j)) = f[j];
  return row_reduce(std::move(m));
}

GermFamily::GermFamily(std::vector<std::string> params, std::size_t order)
    : params_(std::move(params)), order_(order) {}

GermFamily& GermFamily::add(const Multi& alpha, const RationalJet& germ) {
  if (alpha.size() != params_.size())
    throw Error(ErrorCode::InvalidArgument, "multi-index length does not match the parameters");
  auto [it, inserted] = terms_.try_emplace(alpha, germ.truncated(order_));
  if (!inserted) it->second = it->second + germ.truncated(order_);
  return *this;
}

RationalJet GermFamily::at(std::span<const Rational> values) const {
  if (values.size() != params_.size())
    throw Error(ErrorCode::InvalidArgument, "wrong number of parameter values");
  RationalJet out(order_);
  for (const auto& [alpha, germ] : terms_) {
    Rational w = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (unsigned e = 0; e < alpha[i]; ++e) w *= values[i];
    out = out + w * germ;
  }
  return out;
}

RationalJet GermFamily::base() const {
  std::vector<Rational> zeros(params_.size());
  return at(zeros);
}

RationalJet GermFamily::partial_at_origin(std::size_t i) const {
  Multi unit(params_.size(), 0);
  unit.at(i) = 1;
  auto it = terms_.find(unit);
  return it == terms_.end() ? RationalJet(order_) : it->second;
}

GermFamily GermFamily::Q(std::size_t order) {
  GermFamily fam({"a"}, order);
  fam.add({0}, RationalJet::monomial(order, 2));
  fam.add({1}, RationalJet::monomial(order, 1));
  return fam;
}

GermFamily GermFamily::T(std::size_t order) {
  GermFamily fam({"a", "b"}, order);
  fam.add({0, 0}, RationalJet::monomial(order, 3));
  fam.add({1, 0}, RationalJet::monomial(order, 1));
  fam.add({0, 1}, RationalJet::monomial(order, 2));
  return fam;
}

PlaneField unfolding_Q(const Rational& a, std::size_t order) {
  const Rational p[] = {a};
  return field_from_germ(GermFamily::Q(order).at(p));
}

PlaneField unfolding_T(const Rational& a, const Rational& b, std::size_t order) {
  const Rational p[] = {a, b};
  return field_from_germ(GermFamily::T(order).at(p));
}

TransversalityReport transversality_check(const GermFamily& family, const RationalJet& model,
                                          std::size_t deg) {
  const std::size_t n = std::min(family.order(), model.order());
  if (!(family.base().truncated(n) == model.truncated(n)))
    throw Error(ErrorCode::FamilyMismatch, "family does not pass through the model at the origin");
  const GermClass cls = classify_germ(model);
  const RowSpace tangent = singularity_class_tangent(model, deg);

  TransversalityReport report;
  report.codim = cls.codim().value_or(0);
  const auto cols = static_cast<Eigen::Index>(deg + 1);
  RationalMatrix d = RationalMatrix::Zero(static_cast<Eigen::Index>(family.params().size()), cols);
  for (std::size_t i = 0; i < family.params().size(); ++i) {
    RationalJet g = family.partial_at_origin(i);
    for (std::size_t j = 1; j <= std::min(deg, g.order()); ++j)
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g[j];
    report.derivatives.push_back(std::move(g));
  }
  RationalMatrix t = tangent.basis;
  if (t.rows() > 0) t.col(0).setZero();
  const auto base_rank = rank(t);
  report.rank = static_cast<std::size_t>(rank(vstack(t, d)) - base_rank);
  report.transversal = report.rank == report.codim;
  return report;
}

// ---------------------------------------------------------------------------
// Liouville diffeomorphisms

DiffeoLinearization liouville_diffeo_linearize(const RationalDiffeo& h) {
  const RationalJet& hj = h.jet();
  const Rational lambda = hj[1];
  if (lambda == 1 || lambda == -1)
    throw Error(ErrorCode::ResonantMultiplier, "multiplier h'(0) = +-1 is resonant");
  const std::size_t n = hj.order();
  RationalJet psi = RationalJet::identity(n);
  Rational lambda_pow = lambda;
  for (std::size_t j = 2; j <= n; ++j) {
    lambda_pow *= lambda;
    // [psi o h - lambda psi]_j = (lambda^j - lambda) psi_j + known terms.
    const Rational err = (compose(psi, hj) - lambda * psi)[j];
    psi[j] = -err / (lambda_pow - lambda);
  }
  RationalDiffeo psi_d(psi);
  const RationalJet conj = compose(compose(psi, hj), comp_inverse(psi_d).jet());
  return {psi_d, Rational(1) / lambda, conj - RationalJet::monomial(n, 1, lambda)};
}

}  // namespace liouville
