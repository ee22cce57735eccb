#pragma once

#include <string>
#include <vector>

#include "delzant/geometry.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

struct SvgCurve {
  std::string label;
  std::vector<Eigen::VectorXd> points;
};

/// Polygon outline, curves as polylines and intersection markers. The viewBox
/// is the bounding box of the polygon plus a 5% margin, with y pointing up.
/// Numbers are printed with 6 decimals so the output is reproducible.
std::string render_svg(const DelzantPolytope& polytope, const std::vector<SvgCurve>& curves,
                       const std::vector<IntersectionPoint>& markers = {});

/// Vertex positions of a polygon in counter-clockwise order.
std::vector<Eigen::VectorXd> polygon_outline(const DelzantPolytope& polytope);

}  // namespace delzant
