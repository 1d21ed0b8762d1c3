#include "liouville/serialize.hpp"

namespace liouville {

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const RadicalNumber& v) {
  if (v.is_rational()) return to_json(v.rational_value());
  Json coeffs = Json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}, {"approx", v.to_double()}};
}

Json to_json(const RationalJet& f) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i <= f.order(); ++i) coeffs.push_back(to_json(f[i]));
  return Json{{"order", f.order()}, {"coeffs", coeffs}};
}

Json to_json(const Jet<RadicalNumber>& f) {
  RadicalField field;
  for (std::size_t i = 0; i <= f.order(); ++i)
    if (f[i].field().degree > field.degree) field = f[i].field();
  Json coeffs = Json::array();
  for (std::size_t i = 0; i <= f.order(); ++i) {
    const RadicalNumber c = f[i] + RadicalNumber(field, {Rational(0)});
    if (field.degree == 1) {
      coeffs.push_back(to_json(c.rational_value()));
    } else {
      Json parts = Json::array();
      for (const auto& q : c.coeffs()) parts.push_back(to_json(q));
      coeffs.push_back(parts);
    }
  }
  Json out{{"order", f.order()}};
  if (field.degree > 1)
    out["field"] = Json{{"generator", "t"},
                        {"degree", field.degree},
                        {"radicand", to_json(field.radicand)},
                        {"t", field.theta()}};
  out["coeffs"] = coeffs;
  return out;
}

Json to_json(const GermClass& cls) {
  Json out;
  switch (cls.kind) {
    case GermClass::Kind::Unit: out["class"] = "unit"; break;
    case GermClass::Kind::Linear: out["class"] = cls.symbol(); break;
    case GermClass::Kind::Power: out["class"] = cls.symbol(); break;
    case GermClass::Kind::Undetermined: out["class"] = "undetermined"; break;
  }
  switch (cls.kind) {
    case GermClass::Kind::Linear: out["symbol"] = "A0^a"; break;
    case GermClass::Kind::Power:
      out["symbol"] = cls.symbol() + (cls.k % 2 == 1 ? (cls.sign > 0 ? "^+" : "^-") : "");
      break;
    default: out["symbol"] = cls.symbol(); break;
  }
  const auto codim = cls.codim();
  out["codim"] = codim ? Json(*codim) : Json(nullptr);
  out["sign"] = cls.kind == GermClass::Kind::Power ? Json(cls.sign) : Json(nullptr);
  out["a"] = cls.kind == GermClass::Kind::Linear ? to_json(cls.a) : Json(nullptr);
  out["k"] = cls.kind == GermClass::Kind::Power ? Json(cls.k) : Json(nullptr);
  out["normal_form"] = [&]() -> Json {
    switch (cls.kind) {
      case GermClass::Kind::Unit: return "1";
      case GermClass::Kind::Linear: return to_string(from_jet<2>(normal_form(cls, 1), kY));
      case GermClass::Kind::Power:
        return to_string(from_jet<2>(normal_form(cls, cls.k), kY));
      case GermClass::Kind::Undetermined: return nullptr;
    }
    return nullptr;
  }();
  if (cls.kind == GermClass::Kind::Undetermined) out["truncation"] = cls.truncation;
  return out;
}

namespace {

template <std::size_t Vars>
Json poly_json(const Polynomial<Vars>& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term = Json::array();
    for (auto k : e) term.push_back(k);
    term.push_back(to_json(c));
    out.push_back(term);
  }
  return out;
}

}  // namespace

Json to_json(const BivarPoly& p) { return poly_json(p); }
Json to_json(const TrivarPoly& p) { return poly_json(p); }

Json to_json(const PlaneField& X) {
  Json out;
  out["kind"] = X.kind() == FieldKind::Liouville ? "liouville" : "general";
  if (X.kind() == FieldKind::Liouville) out["germ"] = to_string(from_jet<2>(X.germ(), kY));
  out["Xx"] = to_json(X.xx());
  out["Xy"] = to_json(X.xy());
  out["Xx_text"] = to_string(X.xx());
  out["Xy_text"] = to_string(X.xy());
  return out;
}

Json to_json(const Field3& X) {
  Json out;
  out["Xx"] = to_string(X.xx);
  out["Xy"] = to_string(X.xy);
  out["Xz"] = to_string(X.xz);
  if (X.hamiltonian) out["hamiltonian"] = to_string(*X.hamiltonian);
  return out;
}

Json to_json(const HomBasis& basis) {
  Json fields = Json::array();
  for (const auto& f : basis.fields) fields.push_back(to_json(f));
  return Json{{"degree", basis.degree},
              {"dimension", basis.fields.size()},
              {"counts", basis.class_counts},
              {"fields", fields}};
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Equilibrium& e) {
  Json out;
  out["type"] = e.type == EquilibriumType::HyperbolicSaddle ? "saddle" : "degenerate_line";
  out["x"] = e.x;
  out["y"] = e.y;
  out["y_exact"] = e.y_exact ? to_json(*e.y_exact) : Json(nullptr);
  out["eigenvalues"] =
      e.eigenvalues ? Json::array({e.eigenvalues->first, e.eigenvalues->second}) : Json(nullptr);
  out["slope_exact"] = e.slope_exact ? to_json(*e.slope_exact) : Json(nullptr);
  return out;
}

Json to_json(const Normalization& n) {
  return Json{{"class", to_json(n.cls)},
              {"phi", to_json(n.phi.jet())},
              {"modulus", to_json(n.modulus)},
              {"form", to_json(n.form)},
              {"form_text", to_string(from_jet<2>(n.form, kX))}};
}

Json to_json(const SweepResult& r) {
  Json out;
  out["family"] = r.family == FamilyKind::Q ? "Q" : "T";
  out["params"] = r.params;
  out["shape"] = r.grid.shape;
  Json points = Json::array();
  for (std::size_t i = 0; i < r.grid.points.size(); ++i) {
    Json p;
    Json values = Json::array();
    for (const auto& v : r.grid.points[i]) values.push_back(to_json(v));
    p["params"] = values;
    Json eqs = Json::array();
    for (const auto& e : r.equilibria[i]) eqs.push_back(to_json(e));
    p["equilibria"] = eqs;
    p["saddles"] = r.summaries[i].saddles;
    p["degenerate_lines"] = r.summaries[i].degenerate_lines;
    p["signature"] = r.summaries[i].signature;
    points.push_back(p);
  }
  out["points"] = points;
  Json flags = Json::array();
  for (const auto& f : r.flags) {
    Json at = Json::array();
    for (const auto& v : f.at) at.push_back(to_json(v));
    flags.push_back(Json{{"between", {f.from, f.to}}, {"at", at}});
  }
  out["flags"] = flags;
  Json bif = Json::array();
  for (const auto& b : r.bifurcation_points) {
    Json at = Json::array();
    for (const auto& v : b) at.push_back(to_json(v));
    bif.push_back(at);
  }
  out["bifurcations"] = bif;
  return out;
}

Json to_json(const TransversalityReport& r) {
  Json ds = Json::array();
  for (const auto& d : r.derivatives) ds.push_back(to_string(from_jet<2>(d, kY)));
  return Json{{"transversal", r.transversal}, {"rank", r.rank}, {"codim", r.codim}, {"derivatives", ds}};
}

RationalJet jet_from_json(const Json& j) {
  const auto& coeffs = j.at("coeffs");
  RationalJet out(j.at("order").get<std::size_t>());
  for (std::size_t i = 0; i < coeffs.size() && i <= out.order(); ++i)
    out[i] = parse_rational(coeffs[i].get<std::string>());
  return out;
}

}  // namespace liouville
