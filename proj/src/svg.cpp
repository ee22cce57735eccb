#include "delzant/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "delzant/error.hpp"

namespace delzant {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0 ? 0.0 : x);
  return buf;
}

// SVG y grows downwards; negate it so the picture matches the usual axes.
std::string pt(const Eigen::VectorXd& p) { return num(p(0)) + "," + num(-p(1)); }

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

}  // namespace

std::vector<Eigen::VectorXd> polygon_outline(const DelzantPolytope& polytope) {
  if (polytope.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: plots need a polygon (n = 2)");
  std::vector<Eigen::VectorXd> pts;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(2);
  for (std::size_t v = 0; v < polytope.vertices().size(); ++v) {
    pts.push_back(polytope.vertex_position(v));
    c += pts.back();
  }
  c /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::atan2(a(1) - c(1), a(0) - c(0)) < std::atan2(b(1) - c(1), b(0) - c(0));
  });
  return pts;
}

std::string render_svg(const DelzantPolytope& polytope, const std::vector<SvgCurve>& curves,
                       const std::vector<IntersectionPoint>& markers) {
  const auto outline = polygon_outline(polytope);
  Eigen::Vector2d lo = outline.front();
  Eigen::Vector2d hi = lo;
  for (const auto& p : outline) {
    lo = lo.cwiseMin(Eigen::Vector2d(p));
    hi = hi.cwiseMax(Eigen::Vector2d(p));
  }
  const double extent = std::max(hi(0) - lo(0), hi(1) - lo(1));
  const double margin = 0.05 * extent;
  const double stroke = 0.004 * extent;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\""
     << num(600 * (hi(1) - lo(1) + 2 * margin) / (hi(0) - lo(0) + 2 * margin)) << "\" viewBox=\""
     << num(lo(0) - margin) << " " << num(-hi(1) - margin) << " " << num(hi(0) - lo(0) + 2 * margin) << " "
     << num(hi(1) - lo(1) + 2 * margin) << "\">\n";
  os << "  <polygon fill=\"#f4f4f4\" stroke=\"#000000\" stroke-width=\"" << num(stroke) << "\" points=\"";
  for (std::size_t i = 0; i < outline.size(); ++i) os << (i ? " " : "") << pt(outline[i]);
  os << "\"/>\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    os << "  <polyline fill=\"none\" stroke=\"" << kPalette[c % kPalette.size()] << "\" stroke-width=\""
       << num(stroke) << "\" points=\"";
    for (std::size_t i = 0; i < curves[c].points.size(); ++i) os << (i ? " " : "") << pt(curves[c].points[i]);
    os << "\"><title>" << curves[c].label << "</title></polyline>\n";
  }
  for (const auto& m : markers) {
    const bool interior = m.kind == IntersectionKind::Interior;
    os << "  <circle cx=\"" << num(m.position(0)) << "\" cy=\"" << num(-m.position(1)) << "\" r=\""
       << num(3 * stroke) << "\" fill=\"" << (interior ? "#000000" : "#ffffff") << "\" stroke=\"#000000\" stroke-width=\""
       << num(stroke / 2) << "\"><title>" << (interior ? "interior " : "boundary ") << describe(m.location)
       << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace delzant
