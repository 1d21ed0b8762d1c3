#include "liouville/dynamics.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <thread>

namespace liouville {

Trajectory2 integrate(const PlaneField& X, const Eigen::Vector2d& x0, double T, double h,
                      const IntegrateOptions& opts) {
  const CompiledPoly<2> px(X.xx());
  const CompiledPoly<2> py(X.xy());
  auto rhs = [&](const Eigen::Vector2d& s) { return Eigen::Vector2d(px(s), py(s)); };
  if (X.kind() == FieldKind::Liouville) {
    const CompiledPoly<2> f(from_jet<2>(X.germ(), kY));
    auto first_integral = [&](const Eigen::Vector2d& s) { return s[0] * f(s); };
    return rk4<2>(rhs, x0, T, h, opts, first_integral);
  }
  return rk4<2>(rhs, x0, T, h, opts);
}

Trajectory3 integrate(const Field3& X, const Eigen::Vector3d& x0, double T, double h,
                      const IntegrateOptions& opts) {
  const CompiledPoly<3> px(X.xx), py(X.xy), pz(X.xz);
  auto rhs = [&](const Eigen::Vector3d& s) { return Eigen::Vector3d(px(s), py(s), pz(s)); };
  if (X.hamiltonian) {
    const CompiledPoly<3> H(*X.hamiltonian);
    return rk4<3>(rhs, x0, T, h, opts, H);
  }
  return rk4<3>(rhs, x0, T, h, opts);
}

PortraitData phase_portrait(const PlaneField& X, const Window& window, const SeedGrid& seeds,
                            double T, double h) {
  PortraitData out;
  out.window = window;
  IntegrateOptions opts;
  opts.clip = window.expanded(0.1);
  const double cw = (window.xmax - window.xmin) / static_cast<double>(std::max<std::size_t>(seeds.nx, 1));
  const double ch = (window.ymax - window.ymin) / static_cast<double>(std::max<std::size_t>(seeds.ny, 1));
  for (std::size_t j = 0; j < seeds.ny; ++j) {
    for (std::size_t i = 0; i < seeds.nx; ++i) {
      const Eigen::Vector2d seed(window.xmin + (static_cast<double>(i) + 0.5) * cw,
                                 window.ymin + (static_cast<double>(j) + 0.5) * ch);
      for (auto dir : {TimeDirection::Forward, TimeDirection::Backward}) {
        opts.direction = dir;
        out.trajectories.push_back(integrate(X, seed, T, h, opts));
      }
    }
  }
  if (X.kind() == FieldKind::Liouville && !X.germ().is_zero()) {
    for (auto& e : equilibria(X, {window.ymin, window.ymax}))
      if (window.contains(e.x, e.y)) out.equilibria.push_back(std::move(e));
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_svg(const PortraitData& p) {
  const auto& w = p.window;
  const double width = w.xmax - w.xmin;
  const double height = w.ymax - w.ymin;
  const double stroke = 0.003 * std::max(width, height);
  auto sy = [&](double y) { return w.ymax + w.ymin - y; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(w.xmin) << ' ' << fmt(w.ymin)
    << ' ' << fmt(width) << ' ' << fmt(height) << "\" width=\"600\" height=\""
    << fmt(600.0 * height / width) << "\">\n";
  s << "<defs><clipPath id=\"win\"><rect x=\"" << fmt(w.xmin) << "\" y=\"" << fmt(w.ymin)
    << "\" width=\"" << fmt(width) << "\" height=\"" << fmt(height) << "\"/></clipPath></defs>\n";
  s << "<rect x=\"" << fmt(w.xmin) << "\" y=\"" << fmt(w.ymin) << "\" width=\"" << fmt(width)
    << "\" height=\"" << fmt(height) << "\" fill=\"white\"/>\n";
  s << "<g clip-path=\"url(#win)\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt(stroke)
    << "\">\n";
  for (const auto& t : p.trajectories) {
    if (t.states.size() < 2) continue;
    s << "<polyline points=\"";
    for (std::size_t i = 0; i < t.states.size(); ++i) {
      if (i) s << ' ';
      s << fmt(t.states[i][0]) << ',' << fmt(sy(t.states[i][1]));
    }
    s << "\"/>\n";
  }
  s << "</g>\n";
  for (const auto& e : p.equilibria) {
    if (e.type == EquilibriumType::DegenerateLine) {
      s << "<line x1=\"" << fmt(w.xmin) << "\" y1=\"" << fmt(sy(e.y)) << "\" x2=\"" << fmt(w.xmax)
        << "\" y2=\"" << fmt(sy(e.y)) << "\" stroke=\"red\" stroke-width=\"" << fmt(2 * stroke)
        << "\" stroke-dasharray=\"" << fmt(4 * stroke) << ' ' << fmt(4 * stroke)
        << "\" class=\"degenerate-line\"/>\n";
    } else {
      s << "<circle cx=\"" << fmt(e.x) << "\" cy=\"" << fmt(sy(e.y)) << "\" r=\""
        << fmt(4 * stroke) << "\" fill=\"red\" class=\"saddle\"/>\n";
    }
  }
  s << "</svg>\n";
  return s.str();
}

std::string to_csv(const PortraitData& p) {
  std::ostringstream s;
  s << "t,x,y\n";
  for (const auto& t : p.trajectories) {
    const double sign = t.direction == TimeDirection::Forward ? 1.0 : -1.0;
    for (std::size_t i = 0; i < t.states.size(); ++i)
      s << fmt_exact(sign * t.times[i]) << ',' << fmt_exact(t.states[i][0]) << ','
        << fmt_exact(t.states[i][1]) << '\n';
  }
  return s.str();
}

SweepGrid SweepGrid::path(std::vector<std::vector<Rational>> points) {
  SweepGrid g;
  g.shape = {points.size()};
  g.points = std::move(points);
  return g;
}

SweepGrid SweepGrid::product(const std::vector<std::vector<Rational>>& axes) {
  SweepGrid g;
  std::size_t total = 1;
  for (const auto& a : axes) {
    g.shape.push_back(a.size());
    total *= a.size();
  }
  if (axes.empty()) total = 0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<Rational> p(axes.size());
    std::size_t rest = flat;
    for (std::size_t k = axes.size(); k-- > 0;) {
      p[k] = axes[k][rest % axes[k].size()];
      rest /= axes[k].size();
    }
    g.points.push_back(std::move(p));
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> SweepGrid::neighbours() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (shape.size() <= 1) {
    for (std::size_t i = 0; i + 1 < points.size(); ++i) out.emplace_back(i, i + 1);
    return out;
  }
  std::vector<std::size_t> stride(shape.size(), 1);
  for (std::size_t k = shape.size() - 1; k-- > 0;) stride[k] = stride[k + 1] * shape[k + 1];
  for (std::size_t flat = 0; flat < points.size(); ++flat)
    for (std::size_t k = 0; k < shape.size(); ++k)
      if ((flat / stride[k]) % shape[k] + 1 < shape[k]) out.emplace_back(flat, flat + stride[k]);
  std::sort(out.begin(), out.end());
  return out;
}

GermFamily family_of(FamilyKind kind, std::size_t order) {
  return kind == FamilyKind::Q ? GermFamily::Q(order) : GermFamily::T(order);
}

namespace {

PortraitSummary summarize(const std::vector<Equilibrium>& eqs) {
  PortraitSummary s;
  for (const auto& e : eqs) {
    if (!s.signature.empty()) s.signature += ',';
    if (e.type == EquilibriumType::DegenerateLine) {
      ++s.degenerate_lines;
      s.signature += 'L';
    } else {
      ++s.saddles;
      s.signature += 'S';
    }
  }
  if (s.signature.empty()) s.signature = "-";
  return s;
}

}  // namespace

SweepResult parameter_sweep(FamilyKind family, const SweepGrid& grid,
                            std::pair<double, double> y_range, unsigned workers) {
  if (grid.points.empty()) throw Error(ErrorCode::InvalidArgument, "empty parameter grid");
  const GermFamily fam = family_of(family);
  for (const auto& p : grid.points)
    if (p.size() != fam.params().size())
      throw Error(ErrorCode::FamilyMismatch, "parameter tuple size does not match the family");

  SweepResult r;
  r.family = family;
  r.params = fam.params();
  r.grid = grid;
  const std::size_t n = grid.points.size();
  r.equilibria.resize(n);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  auto job = [&](std::size_t first) {
    for (std::size_t i = first; i < n; i += workers)
      r.equilibria[i] = equilibria(field_from_germ(fam.at(grid.points[i])), y_range);
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
  }

  for (const auto& e : r.equilibria) r.summaries.push_back(summarize(e));
  for (auto [i, j] : grid.neighbours()) {
    if (r.summaries[i].signature == r.summaries[j].signature) continue;
    BifurcationFlag f{i, j, {}};
    const bool di = r.summaries[i].degenerate_lines > 0;
    const bool dj = r.summaries[j].degenerate_lines > 0;
    if (di && !dj) {
      f.at = grid.points[i];
    } else if (dj && !di) {
      f.at = grid.points[j];
    } else {
      for (std::size_t k = 0; k < grid.points[i].size(); ++k)
        f.at.push_back((grid.points[i][k] + grid.points[j][k]) / 2);
    }
    if (std::find(r.bifurcation_points.begin(), r.bifurcation_points.end(), f.at) ==
        r.bifurcation_points.end())
      r.bifurcation_points.push_back(f.at);
    r.flags.push_back(std::move(f));
  }
  return r;
}

}  // namespace liouville
