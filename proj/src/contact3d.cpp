#include "liouville/contact3d.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace liouville {

namespace {

const TrivarPoly kXp = TrivarPoly::variable(kX);

TrivarPoly mono(unsigned i, unsigned j, unsigned k, const Rational& c = 1) {
  return TrivarPoly::monomial({i, j, k}, c);
}

Field3 field(TrivarPoly xx, TrivarPoly xy, TrivarPoly xz) {
  return {std::move(xx), std::move(xy), std::move(xz), std::nullopt};
}

bool is_zero_triple(const std::array<TrivarPoly, 3>& r) {
  return r[0].is_zero() && r[1].is_zero() && r[2].is_zero();
}

// Exponent triples of total degree d in lexicographic order.
std::vector<std::array<unsigned, 3>> triples(unsigned d) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; i + j <= d; ++j) out.push_back({i, j, d - i - j});
  return out;
}

}  // namespace

Field3 Field3::truncated(unsigned degree) const {
  return {xx.truncated(degree), xy.truncated(degree), xz.truncated(degree), std::nullopt};
}

Field3 Field3::homogeneous_part(unsigned degree) const {
  return {xx.homogeneous_part(degree), xy.homogeneous_part(degree), xz.homogeneous_part(degree),
          std::nullopt};
}

Field3 operator+(const Field3& a, const Field3& b) {
  return {a.xx + b.xx, a.xy + b.xy, a.xz + b.xz, std::nullopt};
}

Field3 operator-(const Field3& a, const Field3& b) {
  return {a.xx - b.xx, a.xy - b.xy, a.xz - b.xz, std::nullopt};
}

Field3 operator*(const Rational& s, const Field3& f) {
  return {s * f.xx, s * f.xy, s * f.xz, std::nullopt};
}

TrivarPoly contact_hamiltonian(const Field3& X) { return X.xz + kXp * X.xy; }

Field3 field_from_hamiltonian(const TrivarPoly& H) {
  if (H.depends_on(kZ))
    throw Error(ErrorCode::HamiltonianDependsOnZ, "contact Hamiltonian may not depend on z");
  const TrivarPoly hx = diff(H, kX);
  return {-diff(H, kY), hx, H - kXp * hx, H};
}

Field3 reeb_field() { return field_from_hamiltonian(TrivarPoly::constant(1)); }

std::array<TrivarPoly, 3> lie_residual_3d(const Field3& X) {
  const TrivarPoly h = contact_hamiltonian(X);
  return {diff(h, kX) - X.xy, diff(h, kY) + X.xx, diff(h, kZ)};
}

PlaneField project_to_plane(const Field3& X, std::size_t order) {
  if (X.xx.depends_on(kZ) || X.xy.depends_on(kZ))
    throw Error(ErrorCode::ComponentsDependOnZ, "planar components depend on z");
  BivarPoly xx = narrow<2>(X.xx);
  BivarPoly xy = narrow<2>(X.xy);
  if (auto f = detect_liouville(xx, xy, order)) return PlaneField::from_germ(*f);
  return PlaneField::general(std::move(xx), std::move(xy));
}

Field3 lift_liouville(const PlaneField& X, const Rational& c) {
  if (X.kind() != FieldKind::Liouville)
    throw Error(ErrorCode::NotLiouville, "only Liouville plane fields lift with constant z-component");
  Field3 out{widen<3>(X.xx()), widen<3>(X.xy()), TrivarPoly::constant(c), std::nullopt};
  out.hamiltonian = contact_hamiltonian(out);
  if (!is_zero_triple(lie_residual_3d(out)))
    throw Error(ErrorCode::InternalInvariant, "lifted field is not strictly contact");
  return out;
}

Field3 lie_bracket(const Field3& X, const Field3& Y) {
  const std::array<const TrivarPoly*, 3> xs{&X.xx, &X.xy, &X.xz};
  const std::array<const TrivarPoly*, 3> ys{&Y.xx, &Y.xy, &Y.xz};
  std::array<TrivarPoly, 3> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out[i] += *xs[j] * diff(*ys[i], j) - *ys[j] * diff(*xs[i], j);
  return {out[0], out[1], out[2], std::nullopt};
}

// ---------------------------------------------------------------------------
// Homogeneous basis

namespace {

// Coordinates: three blocks (d/dx, d/dy, d/dz) of the degree-d monomials.
RationalVector field_vector(const Field3& X, unsigned d) {
  const auto monos = triples(d);
  const auto m = static_cast<Eigen::Index>(monos.size());
  RationalVector v = RationalVector::Zero(3 * m);
  const std::array<const TrivarPoly*, 3> comps{&X.xx, &X.xy, &X.xz};
  for (std::size_t c = 0; c < 3; ++c) {
    for (const auto& [e, coeff] : comps[c]->terms()) {
      if (e[0] + e[1] + e[2] != d)
        throw Error(ErrorCode::InvalidArgument, "field is not homogeneous of the basis degree");
      auto it = std::find(monos.begin(), monos.end(), e);
      v(static_cast<Eigen::Index>(c) * m + (it - monos.begin())) = coeff;
    }
  }
  return v;
}

RationalMatrix basis_matrix(const HomBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.fields.size());
  RationalMatrix m(3 * static_cast<Eigen::Index>(triples(basis.degree).size()), n);
  for (Eigen::Index j = 0; j < n; ++j) m.col(j) = field_vector(basis.fields[j], basis.degree);
  return m;
}

}  // namespace

HomBasis homogeneous_basis(unsigned d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "basis degree must be >= 1");
  HomBasis b;
  b.degree = d;
  const TrivarPoly zero;
  // y^m1 z^m2 d/dx, x^m1 z^m2 d/dy, x^m1 y^m2 d/dz with m1 + m2 = d.
  for (unsigned m1 = 0; m1 <= d; ++m1) b.fields.push_back(field(mono(0, m1, d - m1), zero, zero));
  for (unsigned m1 = 0; m1 <= d; ++m1) b.fields.push_back(field(zero, mono(m1, 0, d - m1), zero));
  for (unsigned m1 = 0; m1 <= d; ++m1) b.fields.push_back(field(zero, zero, mono(m1, d - m1, 0)));
  b.class_counts[0] = b.fields.size();

  const auto ts = triples(d - 1);
  for (const auto& [m1, m2, m3] : ts)
    b.fields.push_back(field(mono(m1 + 1, m2, m3, Rational(1 + m2)),
                             mono(m1, m2 + 1, m3, Rational(-static_cast<int>(1 + m1))), zero));
  for (const auto& [m1, m2, m3] : ts)
    b.fields.push_back(field(zero, mono(m1, m2 + 1, m3, Rational(1 + m3)),
                             mono(m1, m2, m3 + 1, Rational(-static_cast<int>(1 + m2)))));
  b.class_counts[1] = 2 * ts.size();

  for (const auto& [m1, m2, m3] : ts)
    b.fields.push_back(field(mono(m1 + 1, m2, m3), mono(m1, m2 + 1, m3), mono(m1, m2, m3 + 1)));
  b.class_counts[2] = ts.size();

  const std::size_t expected = 3 * (static_cast<std::size_t>(d) * d + 3 * d + 2) / 2;
  if (b.fields.size() != expected || rank(basis_matrix(b).transpose()) != static_cast<Eigen::Index>(expected))
    throw Error(ErrorCode::InternalInvariant, "homogeneous basis is not a basis");
  return b;
}

Field3 liouville_homogeneous(unsigned d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree must be >= 1");
  Field3 X = field(mono(1, d - 1, 0, Rational(d)), mono(0, d, 0, Rational(-1)), TrivarPoly());
  if (!is_zero_triple(lie_residual_3d(X)))
    throw Error(ErrorCode::InternalInvariant, "X_d is not strictly contact");
  // Second family, first field, with m1 = m3 = 0.
  const unsigned m1 = 0, m2 = d - 1, m3 = 0;
  const Field3 from_table = field(mono(m1 + 1, m2, m3, Rational(1 + m2)),
                                  mono(m1, m2 + 1, m3, Rational(-static_cast<int>(1 + m1))),
                                  TrivarPoly());
  if (!(X == from_table)) throw Error(ErrorCode::InternalInvariant, "X_d does not match the basis");
  return X;
}

Field3 linear_part_field(const Rational& a) { return a * liouville_homogeneous(1); }

RationalVector basis_coordinates(const HomBasis& basis, const Field3& X) {
  auto c = solve(basis_matrix(basis), field_vector(X, basis.degree));
  if (!c) throw Error(ErrorCode::InternalInvariant, "singular basis matrix");
  return *c;
}

RationalMatrix ad_matrix(const Rational& a, unsigned d) {
  if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "ad of the zero linear field");
  const HomBasis basis = homogeneous_basis(d);
  const Field3 x1 = linear_part_field(a);
  const RationalMatrix b = basis_matrix(basis);
  const auto n = static_cast<Eigen::Index>(basis.fields.size());
  RationalMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    auto c = solve(b, field_vector(lie_bracket(x1, basis.fields[j]), d));
    if (!c) throw Error(ErrorCode::InternalInvariant, "singular basis matrix");
    out.col(j) = *c;
  }
  return out;
}

std::size_t ad_kernel_dimension(const Rational& a, unsigned d) {
  const RationalMatrix m = ad_matrix(a, d);
  return static_cast<std::size_t>(m.rows() - rank(m));
}

// ---------------------------------------------------------------------------
// Normal form

Field3 exp_ad(const Field3& Y, const Field3& X, unsigned N) {
  Field3 out = X.truncated(N);
  Field3 term = out;
  for (unsigned n = 1; n <= N + 1; ++n) {
    term = (Rational(1) / Rational(n)) * lie_bracket(Y, term).truncated(N);
    if (term.is_zero()) break;
    out = out + term;
  }
  return out;
}

RationalJet time_one_map(const RationalJet& g) {
  if (g.order() < 1 || !g[0].is_zero() || !g[1].is_zero())
    throw Error(ErrorCode::InvalidArgument, "time-one map needs g in m^2");
  const std::size_t n = g.order();
  RationalJet sum = RationalJet::identity(n);
  RationalJet term = sum;
  for (std::size_t k = 1; k <= n; ++k) {
    // g vanishes to order two, so the unknown top coefficient of term'
    // never reaches degree <= n.
    const RationalJet dterm(n, derivative(term).coeffs());
    term = (Rational(1) / Rational(static_cast<long>(k))) * (g * dterm);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

NormalFormResult normal_form_linearize(const Field3& X, unsigned N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "normal form order must be >= 1");
  const Field3 start = X.truncated(N);
  const PlaneField plane = project_to_plane(start, N);
  if (!start.xz.is_zero() || plane.kind() != FieldKind::Liouville || !plane.germ()[0].is_zero())
    throw Error(ErrorCode::InvalidArgument, "field is not a sum of the homogeneous fields X_d");
  const Rational a = -plane.germ()[1];
  if (a.is_zero()) throw Error(ErrorCode::ZeroLinearPart, "linear part vanishes");

  NormalFormResult result{a, {}, start, RationalDiffeo::identity(N)};
  RationalJet h = RationalJet::identity(N);
  for (unsigned d = 2; d <= N; ++d) {
    const Rational c = -result.field.xy.coeff({0, d, 0});
    if (c.is_zero()) continue;
    const Rational s = c / (a * Rational(1 - static_cast<int>(d)));
    const Field3 gen = s * liouville_homogeneous(d);
    result.field = exp_ad(gen, result.field, N);
    result.log.push_back({d, s, gen});
    // The generator is the Liouville field of the germ -s y^d.
    h = compose(h, time_one_map(RationalJet::monomial(N, d, -s)));
  }
  if (!(result.field == linear_part_field(a)))
    throw Error(ErrorCode::InternalInvariant, "normal form did not reach the linear part");
  result.plane_map = RationalDiffeo(h);
  return result;
}

std::array<TrivarPoly, 3> contact_pullback_residual(const RationalDiffeo& h) {
  const auto [dx, dy] = pullback_residual(LiouvilleDiffeo{h});
  return {widen<3>(dx), widen<3>(dy), TrivarPoly()};
}

}  // namespace liouville
