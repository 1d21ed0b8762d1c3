#include "liouville/verify.hpp"

#include <functional>

#include "liouville/contact3d.hpp"
#include "liouville/germclass.hpp"
#include "liouville/liouville2d.hpp"
#include "liouville/random.hpp"

namespace liouville {

namespace {

bool zero_pair(const std::pair<BivarPoly, BivarPoly>& p) { return p.first.is_zero() && p.second.is_zero(); }
bool zero_triple(const std::array<TrivarPoly, 3>& p) {
  return p[0].is_zero() && p[1].is_zero() && p[2].is_zero();
}

RationalJet germ_with_zero(RandomSource& rng, std::size_t order) {
  RationalJet f = rng.jet(order, 1, 6);
  if (f.is_zero()) f[2] = 1;
  return f;
}

}  // namespace

std::vector<CheckResult> run_identity_checks(std::size_t order, std::uint64_t seed, std::size_t cases) {
  if (order < 4) throw Error(ErrorCode::InvalidArgument, "verify needs order >= 4");
  RandomSource rng(seed);
  std::vector<CheckResult> out;
  auto check = [&](std::string name, std::size_t n, const std::function<bool(std::string&)>& body) {
    CheckResult r{std::move(name), true, n, {}};
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      std::string why;
      if (!body(why)) {
        r.passed = false;
        r.detail = "case " + std::to_string(i) + (why.empty() ? "" : ": " + why);
      }
    }
    out.push_back(std::move(r));
  };

  check("rk_example", 1, [&](std::string&) {
    RationalJet f = RationalJet::identity(order);
    RationalJet phi(order);
    for (std::size_t i = 1; i <= order; ++i) phi[i] = (i % 2) ? 1 : -1;
    RationalJet expect(order - 1);
    expect[1] = 1;
    expect[2] = 1;
    return rk_action(f, RationalDiffeo(phi)) == expect;
  });

  check("rk_right_action", cases, [&](std::string&) {
    const RationalJet f = rng.jet(order, 0, 6);
    const RationalDiffeo phi = rng.diffeo(order), chi = rng.diffeo(order);
    const RationalJet lhs = rk_action(rk_action(f, phi), chi);
    const RationalJet rhs = rk_action(f, compose(phi, chi));
    return agree_through(lhs, rhs, order - 2);
  });

  check("classification_invariance", cases, [&](std::string& why) {
    const RationalJet f = germ_with_zero(rng, order);
    const RationalDiffeo phi = rng.diffeo(order);
    const GermClass a = classify_germ(f.truncated(order - 1));
    const GermClass b = classify_germ(rk_action(f, phi));
    if (!(a == b)) why = "class changed under RK action";
    return a == b;
  });

  check("residue_invariance", cases, [&](std::string&) {
    RationalJet f = rng.jet(order, 2, 6);
    if (f[2] == 0) f[2] = 1;
    const RationalDiffeo phi = rng.diffeo(order);
    return rk_residue(f) == rk_residue(rk_action(f, phi));
  });

  check("normalization_certificate", cases, [&](std::string& why) {
    const RationalJet f = germ_with_zero(rng, order);
    const Normalization n = normalizing_diffeo(f);
    const auto g = rk_action(jet_cast<RadicalNumber>(f), n.phi);
    const auto form = jet_cast<RadicalNumber>(n.form);
    const bool ok = agree_through(g, form, order - 1);
    if (!ok) why = "rk_action(f, phi) differs from the reported form";
    return ok;
  });

  check("liouville_residual_2d", cases, [&](std::string&) {
    return zero_pair(lie_residual_2d(field_from_germ(rng.jet(order, 0, 6))));
  });

  check("pushforward_chain_rule", cases, [&](std::string& why) {
    // D psi . X_g = X_f o psi with g = rk_action(f, h), compared as jets in y:
    // second row  h' g = f(h), first row  g' h' + h'' g = h' f'(h).
    const RationalJet f = rng.jet(order, 0, 6);
    const RationalDiffeo h = rng.diffeo(order);
    const PlaneField Xg = pushforward(LiouvilleDiffeo{h}, field_from_germ(f));
    const RationalJet g = Xg.germ();
    const RationalJet dh = derivative(h.jet());
    const RationalJet ddh = derivative(dh);
    const bool second = agree_through(dh * g, compose(f, h.jet()), order - 2);
    const bool first =
        agree_through(derivative(g) * dh + ddh * g, dh * compose(derivative(f), h.jet()), order - 3);
    if (!second) why = "y-row mismatch";
    if (!first) why = "x-row mismatch";
    return first && second;
  });

  check("pullback_preserves_form", cases, [&](std::string&) {
    return zero_pair(pullback_residual(LiouvilleDiffeo{rng.diffeo(order)}));
  });

  check("hamiltonian_fields_strictly_contact", cases, [&](std::string&) {
    const TrivarPoly H = widen<3>(rng.polynomial<2>(5));
    const Field3 X = field_from_hamiltonian(H);
    return zero_triple(lie_residual_3d(X)) && contact_hamiltonian(X) == H;
  });

  check("lifts_strictly_contact", cases, [&](std::string&) {
    const Field3 X = lift_liouville(field_from_germ(rng.jet(order, 0, 6)), rng.rational(-3, 3));
    return zero_triple(lie_residual_3d(X));
  });

  check("bracket_closed_and_jacobi", cases, [&](std::string& why) {
    const Field3 a = field_from_hamiltonian(widen<3>(rng.polynomial<2>(3)));
    const Field3 b = field_from_hamiltonian(widen<3>(rng.polynomial<2>(3)));
    const Field3 c = field_from_hamiltonian(widen<3>(rng.polynomial<2>(3)));
    if (!zero_triple(lie_residual_3d(lie_bracket(a, b)))) {
      why = "bracket of contact fields is not contact";
      return false;
    }
    const Field3 j = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                     lie_bracket(c, lie_bracket(a, b));
    if (!j.is_zero()) why = "Jacobi identity fails";
    return j.is_zero();
  });

  check("ad_eigenvectors", 6, [&, d = 0u](std::string& why) mutable {
    ++d;
    const Rational a = rng.nonzero_rational(-3, 3);
    const HomBasis basis = homogeneous_basis(d);
    const Field3 lin = linear_part_field(a);
    for (const auto& v : basis.fields) {
      const Field3 img = lie_bracket(lin, v);
      const RationalVector c = basis_coordinates(basis, img);
      const RationalVector self = basis_coordinates(basis, v);
      Eigen::Index at = 0;
      while (is_zero(self[at])) ++at;
      if (!(img == (c[at] / self[at]) * v)) {
        why = "degree " + std::to_string(d) + ": basis field is not an eigenvector";
        return false;
      }
    }
    return true;
  });

  check("contact_pullback", cases, [&](std::string&) {
    return zero_triple(contact_pullback_residual(rng.diffeo(order)));
  });

  check("jet_linearization", cases, [&](std::string&) {
    const Rational a = std::array<Rational, 3>{2, 3, Rational(-1, 2)}[rng.integer(0, 2)];
    RationalJet h = rng.jet(order, 2, 6, -2, 2);
    h[1] = 1 / a;
    return liouville_diffeo_linearize(RationalDiffeo(h)).residual.is_zero();
  });

  return out;
}

}  // namespace liouville
