#include "liouville/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "liouville/contact3d.hpp"
#include "liouville/dynamics.hpp"
#include "liouville/expr.hpp"
#include "liouville/germclass.hpp"
#include "liouville/liouville2d.hpp"
#include "liouville/serialize.hpp"
#include "liouville/verify.hpp"

namespace liouville {

namespace {

struct Options {
  std::size_t order = kDefaultOrder;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out;
  std::string window = "-2,2,-2,2";
  std::string seeds = "8,8";
  double step = 1e-2;
  double time = 5.0;

  std::string germ;
  std::string c = "0";
  std::string range = "-2,2";
  std::size_t deg = 0;
  std::string family = "Q";
  std::string params;
  std::string grid;
  unsigned degree = 1;
  std::string a = "1";
  std::string coeffs;
  unsigned workers = 0;
};

/// An undecidable input: reported on stderr with exit code 2.
struct Undecidable {
  std::string code;
  std::string message;
  Json extra;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<Rational> rationals(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(parse_rational(part));
  return out;
}

std::vector<double> doubles(const std::string& s, std::size_t count, const char* what) {
  std::vector<double> out;
  for (const auto& q : rationals(s)) out.push_back(to_double(q));
  if (out.size() != count)
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " needs " + std::to_string(count) + " comma-separated values");
  return out;
}

Window parse_window(const std::string& s) {
  const auto v = doubles(s, 4, "--window");
  if (!(v[0] < v[1]) || !(v[2] < v[3])) throw Error(ErrorCode::InvalidArgument, "empty window");
  return {v[0], v[1], v[2], v[3]};
}

SeedGrid parse_seeds(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) {
    const auto n = std::stoul(parts[0]);
    return {n, n};
  }
  if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "--seeds takes n or nx,ny");
  return {std::stoul(parts[0]), std::stoul(parts[1])};
}

FamilyKind parse_family(const std::string& s) {
  if (s == "Q" || s == "q") return FamilyKind::Q;
  if (s == "T" || s == "t") return FamilyKind::T;
  throw Error(ErrorCode::InvalidArgument, "family must be Q or T");
}

/// "lo:hi:count;..." gives a product grid; otherwise ';'-separated tuples
/// (a bare comma list for one-parameter families).
SweepGrid parse_grid(const std::string& s, std::size_t params) {
  if (s.find(':') != std::string::npos) {
    std::vector<std::vector<Rational>> axes;
    for (const auto& axis : split(s, ';')) {
      const auto f = split(axis, ':');
      if (f.size() != 3) throw Error(ErrorCode::InvalidArgument, "axis must be lo:hi:count");
      const Rational lo = parse_rational(f[0]), hi = parse_rational(f[1]);
      const long count = std::stol(f[2]);
      if (count < 1) throw Error(ErrorCode::InvalidArgument, "axis count must be positive");
      std::vector<Rational> values;
      for (long i = 0; i < count; ++i)
        values.push_back(count == 1 ? lo : lo + (hi - lo) * Rational(i) / Rational(count - 1));
      axes.push_back(std::move(values));
    }
    if (axes.size() != params) throw Error(ErrorCode::FamilyMismatch, "one axis per parameter");
    return SweepGrid::product(axes);
  }
  std::vector<std::vector<Rational>> points;
  if (params == 1 && s.find(';') == std::string::npos) {
    for (auto& v : rationals(s)) points.push_back({v});
  } else {
    for (const auto& tuple : split(s, ';')) points.push_back(rationals(tuple));
  }
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "empty parameter grid");
  return SweepGrid::path(std::move(points));
}

std::string poly_text(const RationalJet& f, std::size_t var) {
  return var == kX ? to_string(from_jet<2>(f, kX)) : to_string(from_jet<2>(f, kY));
}

Json cmd_classify(const Options& o) {
  const RationalJet f = parse_germ(o.germ, o.order);
  const GermClass cls = classify_germ(f);
  if (cls.kind == GermClass::Kind::Undetermined)
    throw Undecidable{"Undetermined", "germ is flat to order " + std::to_string(o.order),
                      Json{{"truncation", o.order}}};
  Json out{{"germ", poly_text(f, kY)}};
  out.update(to_json(cls));
  if (cls.kind == GermClass::Kind::Power) out["residue"] = to_json(rk_residue(f));
  return out;
}

Json cmd_normalize(const Options& o) {
  const RationalJet f = parse_germ(o.germ, o.order);
  if (classify_germ(f).kind == GermClass::Kind::Undetermined)
    throw Undecidable{"Undetermined", "germ is flat to order " + std::to_string(o.order), {}};
  const Normalization n = normalizing_diffeo(f);
  const auto g = rk_action(jet_cast<RadicalNumber>(f), n.phi);
  const bool ok = agree_through(g, jet_cast<RadicalNumber>(n.form), o.order - 1);
  Json out{{"germ", poly_text(f, kX)}};
  out.update(to_json(n));
  out["certificate"] = Json{{"verified", ok}, {"through_order", o.order - 1}};
  if (!ok) throw Error(ErrorCode::InternalInvariant, "normalization certificate failed");
  return out;
}

Json cmd_field(const Options& o) {
  const PlaneField X = field_from_germ(parse_germ(o.germ, o.order));
  const auto [rx, ry] = lie_residual_2d(X);
  Json out = to_json(X);
  out["first_integral"] = to_string(BivarPoly::variable(kX) * from_jet<2>(X.germ(), kY));
  out["lie_residual"] = {to_string(rx), to_string(ry)};
  out["preserves_form"] = rx.is_zero() && ry.is_zero();
  return out;
}

Json cmd_lift(const Options& o) {
  const Field3 X = lift_liouville(field_from_germ(parse_germ(o.germ, o.order)), parse_rational(o.c));
  const auto r = lie_residual_3d(X);
  Json out = to_json(X);
  out["lie_residual"] = {to_string(r[0]), to_string(r[1]), to_string(r[2])};
  out["strictly_contact"] = r[0].is_zero() && r[1].is_zero() && r[2].is_zero();
  return out;
}

std::vector<Equilibrium> run_equilibria(const Options& o) {
  const RationalJet f = parse_germ(o.germ, o.order);
  if (f.is_zero()) throw Undecidable{"ZeroGerm", "every point is an equilibrium", {}};
  const auto r = doubles(o.range, 2, "--range");
  return equilibria(field_from_germ(f), {r[0], r[1]});
}

Json cmd_tangent(const Options& o) {
  const RationalJet f = parse_germ(o.germ, o.order);
  const std::size_t deg = o.deg ? o.deg : o.order;
  const RowSpace t = rk_tangent_space(f, deg);
  Json basis = Json::array();
  for (Eigen::Index i = 0; i < t.basis.rows(); ++i) {
    RationalJet row(deg);
    for (std::size_t j = 0; j <= deg; ++j) row[j] = t.basis(i, static_cast<Eigen::Index>(j));
    basis.push_back(poly_text(row, kX));
  }
  return Json{{"germ", poly_text(f, kX)},
              {"deg", deg},
              {"rank", t.rank()},
              {"codim", rk_codim_linear(f, deg)},
              {"basis", basis}};
}

Json cmd_transversal(const Options& o) {
  const FamilyKind kind = parse_family(o.family);
  const GermFamily fam = family_of(kind, o.order);
  const RationalJet model = RationalJet::monomial(o.order, kind == FamilyKind::Q ? 2 : 3);
  const std::size_t deg = o.deg ? o.deg : o.order;
  Json out = to_json(transversality_check(fam, model, deg));
  out["family"] = kind == FamilyKind::Q ? "Q" : "T";
  out["params"] = fam.params();
  out["model"] = poly_text(model, kY);
  return out;
}

PlaneField family_field(const Options& o) {
  const FamilyKind kind = parse_family(o.family);
  const GermFamily fam = family_of(kind, o.order);
  const auto p = rationals(o.params);
  if (p.size() != fam.params().size())
    throw Error(ErrorCode::FamilyMismatch,
                "--params needs " + std::to_string(fam.params().size()) + " values");
  return field_from_germ(fam.at(p));
}

Json cmd_linearize3d(const Options& o) {
  const Rational a = parse_rational(o.a);
  Field3 X = linear_part_field(a);
  // The polynomial germ is exact at any order; one extra order fixes the
  // top coefficient of the germ-route diffeomorphism.
  RationalJet germ(o.order + 1);
  germ[1] = -a;
  const auto cs = rationals(o.coeffs);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const unsigned d = static_cast<unsigned>(i + 2);
    X = X + cs[i] * liouville_homogeneous(d);
    if (d <= o.order + 1) germ[d] = -cs[i];
  }
  const NormalFormResult r = normal_form_linearize(X, static_cast<unsigned>(o.order));
  Json steps = Json::array();
  for (const auto& s : r.log)
    steps.push_back(Json{{"degree", s.degree}, {"coefficient", to_json(s.coefficient)}});
  const Normalization route = normalizing_diffeo(germ);
  const auto plane = jet_cast<RadicalNumber>(r.plane_map.jet());
  const bool agree = agree_through(plane, route.phi.jet(), o.order);
  return Json{{"input", to_json(X)},
              {"a", to_json(r.a)},
              {"steps", steps},
              {"field", to_json(r.field)},
              {"linear", r.field == linear_part_field(a)},
              {"plane_map", to_json(r.plane_map.jet())},
              {"germ_route_agrees", agree}};
}

Json cmd_linmap(const Options& o) {
  const RationalJet h = parse_germ(o.germ, o.order);
  const DiffeoLinearization lin = liouville_diffeo_linearize(RationalDiffeo(h));
  return Json{{"h", poly_text(h, kY)},
              {"a", to_json(lin.a)},
              {"multiplier", to_json(1 / lin.a)},
              {"psi", to_json(lin.psi.jet())},
              {"residual_zero", lin.residual.is_zero()}};
}

std::string sweep_csv(const SweepResult& r) {
  std::ostringstream s;
  s << "index";
  for (const auto& p : r.params) s << ',' << p;
  s << ",signature,y,type\n";
  for (std::size_t i = 0; i < r.grid.points.size(); ++i) {
    auto prefix = [&] {
      s << i;
      for (const auto& v : r.grid.points[i]) s << ',' << to_fraction_string(v);
      s << ',' << r.summaries[i].signature;
    };
    if (r.equilibria[i].empty()) {
      prefix();
      s << ",,\n";
    }
    for (const auto& e : r.equilibria[i]) {
      prefix();
      s << ',' << std::setprecision(17) << e.y << ','
        << (e.type == EquilibriumType::HyperbolicSaddle ? "saddle" : "degenerate_line") << '\n';
    }
  }
  return s.str();
}

std::string equilibria_csv(const std::vector<Equilibrium>& eqs) {
  std::ostringstream s;
  s << std::setprecision(17) << "x,y,type,lambda_1,lambda_2\n";
  for (const auto& e : eqs) {
    s << e.x << ',' << e.y << ','
      << (e.type == EquilibriumType::HyperbolicSaddle ? "saddle" : "degenerate_line") << ',';
    if (e.eigenvalues) s << e.eigenvalues->first << ',' << e.eigenvalues->second;
    else s << ',';
    s << '\n';
  }
  return s.str();
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Undetermined:
    case ErrorCode::ZeroGerm:
    case ErrorCode::ResonantMultiplier:
    case ErrorCode::ZeroLinearPart:
      return kExitUndecidable;
    case ErrorCode::InternalInvariant:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

void emit_error(std::ostream& err, const std::string& code, const std::string& message, Json extra = {}) {
  Json j{{"error", code}, {"message", message}};
  if (extra.is_object()) j.update(extra);
  err << j.dump() << '\n';
}

/// Lets expressions such as "-y^2" pass as positionals and option values.
std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::vector<std::string> trailing;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--") {
      trailing.insert(trailing.end(), args.begin() + static_cast<std::ptrdiff_t>(i) + 1, args.end());
      break;
    }
    const bool dashy = a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h";
    const bool prev_takes_value = !out.empty() && out.back().rfind("--", 0) == 0 &&
                                  out.back().find('=') == std::string::npos && out.back() != "--help" &&
                                  out.back() != "--";
    if (dashy && prev_takes_value) {
      out.back() += "=" + a;
    } else if (dashy) {
      trailing.push_back(a);
    } else {
      out.push_back(a);
    }
  }
  if (!trailing.empty()) {
    out.emplace_back("--");
    out.insert(out.end(), trailing.begin(), trailing.end());
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Restricted contact classification of germs, Liouville and contact vector fields"};
  app.name("liouville");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file (order, window, seeds, step, time)");
  app.add_option("--order", o.order, "jet truncation order")->capture_default_str()->check(CLI::Range(2, 200));
  app.add_option("--format", o.format, "json, csv (equilibria, portrait, sweep) or svg (portrait)")->capture_default_str()->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--out", o.out, "write the result to this file");
  app.add_option("--window", o.window, "xmin,xmax,ymin,ymax")->capture_default_str();
  app.add_option("--seeds", o.seeds, "seed grid n or nx,ny")->capture_default_str();
  app.add_option("--step", o.step, "integration step")->capture_default_str();
  app.add_option("--time", o.time, "integration time per direction")->capture_default_str();

  auto germ_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("germ", o.germ, "germ in x or y")->required();
    return c;
  };
  auto* classify = germ_cmd("classify", "classify a germ");
  auto* normalize = germ_cmd("normalize", "normalizing diffeomorphism with certificate");
  auto* field = germ_cmd("field", "plane field of a germ");
  auto* lift = germ_cmd("lift", "lift to a strictly contact field");
  lift->add_option("--c", o.c, "constant z-component")->capture_default_str();
  auto* eq = germ_cmd("equilibria", "equilibria of the plane field");
  eq->add_option("--range", o.range, "y interval a,b")->capture_default_str();
  auto* tangent = germ_cmd("tangent", "tangent space and codimension");
  tangent->add_option("--deg", o.deg, "truncation degree (default: order)");
  auto* transversal = app.add_subcommand("transversal", "transversality of Q or T");
  transversal->add_option("--family", o.family)->capture_default_str();
  transversal->add_option("--deg", o.deg, "truncation degree (default: order)");
  auto* portrait = app.add_subcommand("portrait", "phase portrait as SVG or CSV");
  portrait->add_option("--family", o.family)->capture_default_str();
  portrait->add_option("--params", o.params, "a or a,b")->required();
  auto* sweep = app.add_subcommand("sweep", "parameter sweep with bifurcation flags");
  sweep->add_option("--family", o.family)->capture_default_str();
  sweep->add_option("--grid", o.grid, "v1,v2,... | a1,b1;a2,b2;... | lo:hi:n;lo:hi:n");
  sweep->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  auto* basis = app.add_subcommand("basis3d", "homogeneous basis of degree-d fields");
  basis->add_option("--degree", o.degree)->required()->check(CLI::Range(1u, 40u));
  auto* adm = app.add_subcommand("admatrix", "matrix of ad of the linear part");
  adm->add_option("--degree", o.degree)->required()->check(CLI::Range(1u, 40u));
  adm->add_option("--a", o.a)->capture_default_str();
  auto* lin3 = app.add_subcommand("linearize3d", "normal form of a X1 + sum c_d X_d");
  lin3->add_option("coeffs", o.coeffs, "c2,c3,...")->required();
  lin3->add_option("--a", o.a)->capture_default_str();
  auto* linmap = germ_cmd("linmap", "linearize a diffeomorphism germ y -> h(y)");
  auto* verify = app.add_subcommand("verify", "run the symbolic identity checks");

  const std::vector<std::string> args = normalize_args(raw_args);
  std::vector<const char*> argv{"liouville"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "Usage", e.what());
    return kExitUsage;
  }

  try {
    std::string text;
    const bool csv = o.format == "csv";
    auto json_only = [&] {
      if (o.format != "json") throw Error(ErrorCode::InvalidArgument, "this command only emits JSON");
    };
    if (classify->parsed()) {
      json_only();
      text = cmd_classify(o).dump(2);
    } else if (normalize->parsed()) {
      json_only();
      text = cmd_normalize(o).dump(2);
    } else if (field->parsed()) {
      json_only();
      text = cmd_field(o).dump(2);
    } else if (lift->parsed()) {
      json_only();
      text = cmd_lift(o).dump(2);
    } else if (eq->parsed()) {
      const auto eqs = run_equilibria(o);
      if (csv) {
        text = equilibria_csv(eqs);
      } else {
        Json list = Json::array();
        for (const auto& e : eqs) list.push_back(to_json(e));
        text = Json{{"germ", poly_text(parse_germ(o.germ, o.order), kY)}, {"equilibria", list}}.dump(2);
      }
    } else if (tangent->parsed()) {
      json_only();
      text = cmd_tangent(o).dump(2);
    } else if (transversal->parsed()) {
      json_only();
      text = cmd_transversal(o).dump(2);
    } else if (portrait->parsed()) {
      const PortraitData p =
          phase_portrait(family_field(o), parse_window(o.window), parse_seeds(o.seeds), o.time, o.step);
      text = csv ? to_csv(p) : to_svg(p);
    } else if (sweep->parsed()) {
      const FamilyKind kind = parse_family(o.family);
      const std::string grid = !o.grid.empty() ? o.grid : kind == FamilyKind::Q ? "-1,0,1" : "-1,-1;0,0;1,0";
      const Window w = parse_window(o.window);
      const SweepResult r =
          parameter_sweep(kind, parse_grid(grid, family_of(kind).params().size()), {w.ymin, w.ymax}, o.workers);
      text = csv ? sweep_csv(r) : to_json(r).dump(2);
    } else if (basis->parsed()) {
      json_only();
      text = to_json(homogeneous_basis(o.degree)).dump(2);
    } else if (adm->parsed()) {
      json_only();
      const Rational a = parse_rational(o.a);
      const RationalMatrix m = ad_matrix(a, o.degree);
      const bool diagonal = RationalMatrix(m.diagonal().asDiagonal()) == m;
      text = Json{{"degree", o.degree},
                  {"a", to_json(a)},
                  {"dimension", m.rows()},
                  {"diagonal", diagonal},
                  {"kernel_dimension", ad_kernel_dimension(a, o.degree)},
                  {"matrix", to_json(m)}}
                 .dump(2);
    } else if (lin3->parsed()) {
      json_only();
      text = cmd_linearize3d(o).dump(2);
    } else if (linmap->parsed()) {
      json_only();
      text = cmd_linmap(o).dump(2);
    } else if (verify->parsed()) {
      json_only();
      const auto results = run_identity_checks(o.order, o.seed);
      Json list = Json::array();
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        list.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
      }
      text = Json{{"order", o.order}, {"seed", o.seed}, {"passed", all}, {"checks", list}}.dump(2);
      if (!all) {
        out << text << '\n';
        emit_error(err, "InternalInvariant", "identity checks failed");
        return kExitInternal;
      }
    }
    if (!text.empty() && text.back() != '\n') text += '\n';
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + o.out);
      file << text;
    }
    return kExitOk;
  } catch (const Undecidable& u) {
    emit_error(err, u.code, u.message, u.extra);
    return kExitUndecidable;
  } catch (const ParseError& e) {
    emit_error(err, "ParseError", e.what(), Json{{"offset", e.offset()}, {"expected", e.expected()}});
    return kExitUsage;
  } catch (const Error& e) {
    emit_error(err, std::string(to_string(e.code())), e.what());
    return exit_for(e.code());
  } catch (const std::exception& e) {
    emit_error(err, "InvalidArgument", e.what());
    return kExitUsage;
  }
}

}  // namespace liouville
