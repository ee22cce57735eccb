#include "delzant/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "delzant/error.hpp"

namespace delzant {

namespace {

constexpr double kE = std::numbers::e;

Eigen::VectorXd interior_values(const DelzantPolytope& polytope, const Eigen::VectorXd& xi) {
  if (static_cast<std::size_t>(xi.size()) != polytope.dim())
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: point has the wrong length");
  Eigen::VectorXd l = facet_values(polytope, xi);
  for (Eigen::Index j = 0; j < l.size(); ++j)
    if (!(l(j) > 0)) {
      std::ostringstream os;
      os << "NotInterior: L_" << j << " = " << l(j) << " at (" << xi.transpose() << ")";
      throw Error(ErrorCode::NotInterior, os.str());
    }
  return l;
}

Eigen::VectorXd gradient_from_values(const DelzantPolytope& polytope, const Eigen::VectorXd& l) {
  return polytope.normal_rows().transpose() * (Eigen::VectorXd::Ones(l.size()) + l.array().log().matrix());
}

Eigen::MatrixXd hessian_from_values(const DelzantPolytope& polytope, const Eigen::VectorXd& l) {
  const Eigen::MatrixXd& u = polytope.normal_rows();
  return u.transpose() * l.cwiseInverse().asDiagonal() * u;
}

// Largest step along d keeping every facet value positive, scaled by the
// fraction-to-boundary factor and capped at 1.
double max_step(const DelzantPolytope& polytope, const Eigen::VectorXd& l, const Eigen::VectorXd& d, double fraction) {
  const Eigen::VectorXd rate = polytope.normal_rows() * d;
  double alpha = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < l.size(); ++j)
    if (rate(j) < 0) alpha = std::min(alpha, -l(j) / rate(j));
  return std::min(1.0, fraction * alpha);
}

Eigen::VectorXd column(const IntMatrix& m, std::size_t c) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r) v(static_cast<Eigen::Index>(r)) = static_cast<double>(m(r, c));
  return v;
}

Eigen::MatrixXd to_double(const IntMatrix& m) {
  Eigen::MatrixXd d(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = static_cast<double>(m(r, c));
  return d;
}

Eigen::VectorXd offsets_of(const VertexChart& chart) {
  Eigen::VectorXd k(static_cast<Eigen::Index>(chart.offsets.size()));
  for (std::size_t i = 0; i < chart.offsets.size(); ++i) k(static_cast<Eigen::Index>(i)) = chart.offsets[i].convert_to<double>();
  return k;
}

bool incident(const VertexChart& chart, std::size_t j) {
  return std::find(chart.facets.begin(), chart.facets.end(), j) != chart.facets.end();
}

void require_plane_line(const DelzantPolytope& polytope, const AffineSubspace& v) {
  if (polytope.dim() != 2 || v.dim() != 2 || v.k() != 1)
    throw Error(ErrorCode::InvalidSubspace, "InvalidSubspace: curves need a line in a polygon (n = 2, k = 1)");
}

Eigen::VectorXd normal_of(const AffineSubspace& v) {
  const auto& p = v.slopes()[0];
  Eigen::VectorXd q(2);
  q << -static_cast<double>(p[1]), static_cast<double>(p[0]);
  return q;
}

}  // namespace

double potential(const DelzantPolytope& polytope, const Eigen::VectorXd& xi) {
  const Eigen::VectorXd l = interior_values(polytope, xi);
  return (l.array() * l.array().log()).sum();
}

Eigen::VectorXd potential_grad(const DelzantPolytope& polytope, const Eigen::VectorXd& xi) {
  return gradient_from_values(polytope, interior_values(polytope, xi));
}

Eigen::MatrixXd potential_hessian(const DelzantPolytope& polytope, const Eigen::VectorXd& xi) {
  return hessian_from_values(polytope, interior_values(polytope, xi));
}

Eigen::VectorXd analytic_center(const DelzantPolytope& polytope) {
  const std::size_t n = polytope.dim();
  Eigen::VectorXd xi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t v = 0; v < polytope.vertices().size(); ++v) xi += polytope.vertex_position(v);
  xi /= static_cast<double>(polytope.vertices().size());
  const Eigen::MatrixXd& u = polytope.normal_rows();
  auto barrier = [&](const Eigen::VectorXd& l) { return -l.array().log().sum(); };
  for (int it = 0; it < 100; ++it) {
    const Eigen::VectorXd l = facet_values(polytope, xi);
    const Eigen::VectorXd g = -u.transpose() * l.cwiseInverse();
    const Eigen::MatrixXd h = u.transpose() * l.array().square().inverse().matrix().asDiagonal() * u;
    const Eigen::VectorXd d = -h.llt().solve(g);
    if (-g.dot(d) < 1e-24) break;
    double alpha = max_step(polytope, l, d, 0.95);
    const double f0 = barrier(l);
    while (alpha > 1e-16 && barrier(facet_values(polytope, xi + alpha * d)) > f0 + 1e-4 * alpha * g.dot(d)) alpha /= 2;
    xi += alpha * d;
  }
  return xi;
}

Eigen::VectorXd legendre_inverse(const DelzantPolytope& polytope, const Eigen::VectorXd& x, const Tolerances& tol,
                                 const std::optional<Eigen::VectorXd>& start) {
  if (static_cast<std::size_t>(x.size()) != polytope.dim())
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: point has the wrong length");
  Eigen::VectorXd xi = start ? *start : analytic_center(polytope);
  Eigen::VectorXd l = interior_values(polytope, xi);
  auto objective = [&](const Eigen::VectorXd& lv, const Eigen::VectorXd& p) {
    return (lv.array() * lv.array().log()).sum() - x.dot(p);
  };
  for (int it = 0; it < tol.newton_iterations; ++it) {
    const Eigen::VectorXd g = gradient_from_values(polytope, l) - x;
    const double gnorm = g.norm();
    if (gnorm < tol.newton) return xi;
    const Eigen::LLT<Eigen::MatrixXd> llt(hessian_from_values(polytope, l));
    const Eigen::VectorXd d = -llt.solve(g);
    // Near a vertex L_j is only known to about eps / L_j relative accuracy, so
    // the gradient can stall above tol.newton once the step is at rounding level.
    if (gnorm < 1e-6 && d.norm() <= 8 * std::numeric_limits<double>::epsilon() * (1 + xi.norm())) return xi;
    double alpha = max_step(polytope, l, d, tol.fraction_to_boundary);
    const double f0 = objective(l, xi);
    const double slope = g.dot(d);
    bool accepted = false;
    while (alpha > 1e-18) {
      const Eigen::VectorXd trial = xi + alpha * d;
      const Eigen::VectorXd lt = facet_values(polytope, trial);
      if (lt.minCoeff() > 0) {
        const bool armijo = objective(lt, trial) <= f0 + 1e-4 * alpha * slope;
        const bool residual = (gradient_from_values(polytope, lt) - x).norm() < (1 - 1e-4 * alpha) * gnorm;
        if (armijo || residual) {
          xi = trial;
          l = lt;
          accepted = true;
          break;
        }
      }
      alpha /= 2;
    }
    if (!accepted) break;
  }
  if ((gradient_from_values(polytope, l) - x).norm() < tol.newton) return xi;
  std::ostringstream os;
  os << "NoConvergence: Legendre inverse did not converge within " << tol.newton_iterations
     << " iterations for x = (" << x.transpose() << ")";
  throw Error(ErrorCode::NoConvergence, os.str());
}

Eigen::VectorXd local_potential_grad(const VertexChart& chart, const Eigen::VectorXd& xi_local) {
  const Eigen::MatrixXd u = to_double(chart.normals);
  const Eigen::VectorXd l = u.transpose() * xi_local - offsets_of(chart);
  if (l.minCoeff() <= 0) throw Error(ErrorCode::NotInterior, "NotInterior: point is outside the local model");
  return u * (Eigen::VectorXd::Ones(l.size()) + l.array().log().matrix());
}

Eigen::VectorXd psi_lambda(const DelzantPolytope& polytope, const VertexChart& chart, const Eigen::VectorXd& xi) {
  const Eigen::VectorXd grad = potential_grad(polytope, xi);
  const Eigen::MatrixXd q = to_double(chart.directions);
  const Eigen::VectorXd local = ((q.transpose() * grad).array() - 1.0).exp().matrix();
  return q * (local + offsets_of(chart));
}

Eigen::VectorXd psi_bar_values(const DelzantPolytope& polytope, const VertexChart& chart, const Eigen::VectorXd& xi) {
  const Eigen::VectorXd l = facet_values(polytope, xi);
  const std::size_t n = chart.facets.size();
  Eigen::VectorXd out(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) out(static_cast<Eigen::Index>(i)) = std::max(0.0, l(static_cast<Eigen::Index>(chart.facets[i])));
  for (std::size_t j = 0; j < polytope.facets().size(); ++j) {
    if (incident(chart, j)) continue;
    const double lj = l(static_cast<Eigen::Index>(j));
    if (!(lj > 0))
      throw Error(ErrorCode::OnExcludedFacet, "OnExcludedFacet: facet " + std::to_string(j) +
                                                  " is not incident to the chart vertex and L = " + std::to_string(lj));
    for (std::size_t i = 0; i < n; ++i) {
      const double w = static_cast<double>(dot(chart.directions.column(i), polytope.facets()[j].normal.entries()));
      if (w != 0) out(static_cast<Eigen::Index>(i)) *= std::pow(kE * lj, w);
    }
  }
  return out;
}

Eigen::VectorXd psi_bar_lambda(const DelzantPolytope& polytope, const VertexChart& chart, const Eigen::VectorXd& xi) {
  return to_double(chart.directions) * (psi_bar_values(polytope, chart, xi) + offsets_of(chart));
}

std::optional<std::size_t> owning_chart(const DelzantPolytope& polytope, const Eigen::VectorXd& xi,
                                        const Tolerances& tol) {
  const Eigen::VectorXd l = facet_values(polytope, xi);
  std::optional<std::size_t> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const auto& c : polytope.charts()) {
    bool usable = true;
    for (std::size_t j = 0; j < polytope.facets().size() && usable; ++j)
      if (!incident(c, j) && !(l(static_cast<Eigen::Index>(j)) > tol.on_facet)) usable = false;
    if (!usable) continue;
    const double dist = (polytope.vertex_position(c.vertex) - xi).norm();
    if (dist < best_dist) {
      best_dist = dist;
      best = c.vertex;
    }
  }
  return best;
}

double g_residual(const DelzantPolytope& polytope, const VertexChart& chart, const AffineSubspace& v,
                  const Eigen::VectorXd& xi) {
  const ExponentSystem sys = build_system(chart, v, ortho_basis(v), Side::G);
  const Eigen::VectorXd args = kE * psi_bar_values(polytope, chart, xi);
  double worst = 0;
  for (const auto& eq : sys.equations) {
    double pos = 1;
    double neg = eq.constant;
    for (std::size_t i : eq.positive) pos *= std::pow(args(static_cast<Eigen::Index>(i)), eq.exponents[i]);
    for (std::size_t i : eq.negative) neg *= std::pow(args(static_cast<Eigen::Index>(i)), -eq.exponents[i]);
    worst = std::max(worst, std::abs(pos - neg) / std::max({1.0, pos, neg}));
  }
  return worst;
}

double diameter(const DelzantPolytope& polytope) {
  double d = 0;
  for (std::size_t a = 0; a < polytope.vertices().size(); ++a)
    for (std::size_t b = a + 1; b < polytope.vertices().size(); ++b)
      d = std::max(d, (polytope.vertex_position(a) - polytope.vertex_position(b)).norm());
  return d;
}

CurveEndpoint curve_limit(const DelzantPolytope& polytope, const AffineSubspace& v, int direction,
                          const Tolerances& tol) {
  require_plane_line(polytope, v);
  IntVec y = v.slopes()[0].entries();
  if (direction < 0)
    for (auto& e : y) e = -e;

  // The limit lies in the face whose normal cone contains y: the vertex
  // lambda when every <v_i, y> < 0, else the edge from lambda along v_i0
  // with <v_i0, y> = 0.
  const VertexChart* edge_chart = nullptr;
  std::size_t along = 0;
  for (const auto& c : polytope.charts()) {
    const IntVec w = c.directions.transpose() * y;
    if (std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x < 0; })) {
      CurveEndpoint e;
      e.position = polytope.vertex_position(c.vertex);
      e.chart = c.vertex;
      e.location = locate(polytope, std::span<const double>(e.position.data(), 2), tol.on_facet);
      return e;
    }
    if (!edge_chart && std::all_of(w.begin(), w.end(), [](const BigInt& x) { return x <= 0; })) {
      edge_chart = &c;
      along = w[0] == 0 ? 0 : 1;
    }
  }
  if (!edge_chart) throw Error(ErrorCode::NoConvergence, "NoConvergence: no face of the polygon receives the curve");

  const VertexChart& c = *edge_chart;
  const Eigen::VectorXd origin = polytope.vertex_position(c.vertex);
  const Eigen::VectorXd dir = column(c.directions, along);
  const Eigen::VectorXd l0 = facet_values(polytope, origin);
  const Eigen::VectorXd rate = polytope.normal_rows() * dir;
  double t_max = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < rate.size(); ++j)
    if (rate(j) < 0) t_max = std::min(t_max, -l0(j) / rate(j));
  const double target = std::exp(column(c.directions, along).dot(v.anchor()) - 1.0);

  auto value = [&](double t) {
    try {
      return psi_bar_values(polytope, c, origin + t * dir)(static_cast<Eigen::Index>(along));
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  double lo = 0;
  double hi = t_max;
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    mid = 0.5 * (lo + hi);
    const double f = value(mid);
    if (std::abs(f - target) < tol.bisection * std::max(1.0, target) || hi - lo < 1e-15) break;
    if (f < target) lo = mid;
    else hi = mid;
  }
  CurveEndpoint e;
  e.position = origin + mid * dir;
  e.chart = c.vertex;
  e.location = locate(polytope, std::span<const double>(e.position.data(), 2), tol.on_facet);
  return e;
}

CurveSample trace_curve(const DelzantPolytope& polytope, const AffineSubspace& v, std::size_t resolution,
                        const Tolerances& tol) {
  require_plane_line(polytope, v);
  if (resolution == 0) throw Error(ErrorCode::InvalidSubspace, "InvalidSubspace: resolution must be positive");
  CurveSample curve;
  curve.start = curve_limit(polytope, v, -1, tol);
  curve.end = curve_limit(polytope, v, +1, tol);
  const double step = diameter(polytope) / static_cast<double>(resolution);
  const Eigen::VectorXd p = v.slope_matrix().col(0);
  const Eigen::VectorXd& a = v.anchor();

  struct Node {
    double s;
    Eigen::VectorXd xi;
  };
  std::vector<Node> nodes{{0.0, legendre_inverse(polytope, a, tol)}};
  for (int side : {+1, -1}) {
    const Eigen::VectorXd& target = side > 0 ? curve.end.position : curve.start.position;
    for (double s = side;; s += side) {
      const Node& last = side > 0 ? nodes.back() : nodes.front();
      if ((last.xi - target).norm() <= step) break;
      if (std::abs(s) > 1e4) throw Error(ErrorCode::NoConvergence, "NoConvergence: curve does not reach its endpoint");
      Node next{s, legendre_inverse(polytope, a + s * p, tol, last.xi)};
      if (side > 0) nodes.push_back(std::move(next));
      else nodes.insert(nodes.begin(), std::move(next));
    }
  }
  for (bool refined = true; refined;) {
    refined = false;
    std::vector<Node> out{nodes.front()};
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      if ((nodes[i].xi - nodes[i - 1].xi).norm() > step) {
        const double s = 0.5 * (nodes[i - 1].s + nodes[i].s);
        out.push_back({s, legendre_inverse(polytope, a + s * p, tol, nodes[i - 1].xi)});
        refined = true;
      }
      out.push_back(nodes[i]);
    }
    nodes = std::move(out);
  }

  curve.parameters.push_back(-std::numeric_limits<double>::infinity());
  curve.points.push_back(curve.start.position);
  for (auto& n : nodes) {
    curve.parameters.push_back(n.s);
    curve.points.push_back(std::move(n.xi));
  }
  curve.parameters.push_back(std::numeric_limits<double>::infinity());
  curve.points.push_back(curve.end.position);
  return curve;
}

std::optional<Eigen::VectorXd> affine_intersection(const AffineSubspace& va, const AffineSubspace& vb) {
  Eigen::Matrix2d m;
  m.row(0) = normal_of(va).transpose();
  m.row(1) = normal_of(vb).transpose();
  if (std::abs(m.determinant()) < 1e-12) return std::nullopt;
  Eigen::Vector2d rhs(normal_of(va).dot(va.anchor()), normal_of(vb).dot(vb.anchor()));
  return Eigen::VectorXd(m.inverse() * rhs);
}

std::vector<IntersectionPoint> intersect_curves(const DelzantPolytope& polytope, const AffineSubspace& va,
                                                const AffineSubspace& vb, const IntersectOptions& options) {
  require_plane_line(polytope, va);
  require_plane_line(polytope, vb);
  const Tolerances& tol = options.tolerances;
  std::vector<IntersectionPoint> found;
  auto add = [&](const Eigen::VectorXd& xi, IntersectionKind kind) {
    for (const auto& f : found)
      if ((f.position - xi).norm() < tol.dedup) return;
    IntersectionPoint ip;
    ip.position = xi;
    ip.kind = kind;
    ip.location = locate(polytope, std::span<const double>(xi.data(), 2), tol.on_facet);
    found.push_back(std::move(ip));
  };

  const Eigen::VectorXd qa = normal_of(va);
  const Eigen::VectorXd qb = normal_of(vb);
  auto residual = [&](const Eigen::VectorXd& grad) {
    return Eigen::Vector2d(qa.dot(grad - va.anchor()), qb.dot(grad - vb.anchor()));
  };

  Eigen::Vector2d lo = Eigen::Vector2d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector2d hi = -lo;
  for (std::size_t v = 0; v < polytope.vertices().size(); ++v) {
    lo = lo.cwiseMin(Eigen::Vector2d(polytope.vertex_position(v)));
    hi = hi.cwiseMax(Eigen::Vector2d(polytope.vertex_position(v)));
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(-0.4, 0.4);
  const auto g = static_cast<double>(options.grid);
  for (std::size_t ix = 0; ix < options.grid; ++ix)
    for (std::size_t iy = 0; iy < options.grid; ++iy) {
      Eigen::VectorXd xi(2);
      xi << lo(0) + (hi(0) - lo(0)) * (static_cast<double>(ix) + 0.5 + jitter(rng)) / g,
          lo(1) + (hi(1) - lo(1)) * (static_cast<double>(iy) + 0.5 + jitter(rng)) / g;
      if (facet_values(polytope, xi).minCoeff() <= 1e-6) continue;
      bool converged = false;
      for (int it = 0; it < tol.newton_iterations; ++it) {
        const Eigen::VectorXd l = facet_values(polytope, xi);
        const Eigen::Vector2d f = residual(gradient_from_values(polytope, l));
        if (f.norm() < tol.newton) {
          converged = true;
          break;
        }
        Eigen::Matrix2d jac;
        const Eigen::MatrixXd h = hessian_from_values(polytope, l);
        jac.row(0) = qa.transpose() * h;
        jac.row(1) = qb.transpose() * h;
        const Eigen::FullPivLU<Eigen::Matrix2d> lu(jac);
        if (!lu.isInvertible()) break;
        const Eigen::VectorXd d = lu.solve(-f);
        double alpha = max_step(polytope, l, d, tol.fraction_to_boundary);
        bool accepted = false;
        while (alpha > 1e-18) {
          const Eigen::VectorXd trial = xi + alpha * d;
          const Eigen::VectorXd lt = facet_values(polytope, trial);
          if (lt.minCoeff() > 0 && residual(gradient_from_values(polytope, lt)).norm() < (1 - 1e-4 * alpha) * f.norm()) {
            xi = trial;
            accepted = true;
            break;
          }
          alpha /= 2;
        }
        if (!accepted) break;
      }
      if (converged) add(xi, IntersectionKind::Interior);
    }

  const CurveEndpoint ends_a[] = {curve_limit(polytope, va, -1, tol), curve_limit(polytope, va, +1, tol)};
  const CurveEndpoint ends_b[] = {curve_limit(polytope, vb, -1, tol), curve_limit(polytope, vb, +1, tol)};
  for (const auto& ea : ends_a)
    for (const auto& eb : ends_b)
      if ((ea.position - eb.position).norm() < tol.endpoint_match) add(0.5 * (ea.position + eb.position), IntersectionKind::Boundary);

  std::sort(found.begin(), found.end(), [](const IntersectionPoint& x, const IntersectionPoint& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.position(0) != y.position(0)) return x.position(0) < y.position(0);
    return x.position(1) < y.position(1);
  });
  return found;
}

}  // namespace delzant
