#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "delzant/lattice.hpp"

namespace delzant {

/// { xi : <xi, normal> - offset >= 0 }, with an inward primitive normal.
struct Halfspace {
  PrimitiveVec normal;
  Rational offset;
};

/// Local data at a vertex. Columns of `normals` are the incident facet
/// normals u_1..u_n, columns of `directions` the edge directions v_1..v_n, and
/// directions * normals^t == identity with det(directions) == +1.
struct VertexChart {
  std::size_t vertex = 0;
  RationalVec position;
  std::vector<std::size_t> facets;  // incident facets, chart order
  IntMatrix normals;                // U
  IntMatrix directions;             // Q = (U^t)^{-1}
  RationalVec offsets;              // kappa_i of the incident facets
};

/// The orthant chart: U = Q = identity, zero offsets. Used by the standard
/// local models.
VertexChart orthant_chart(std::size_t n);

struct Vertex {
  RationalVec position;
  std::vector<std::size_t> facets;  // incident facets, ascending
};

/// A validated Delzant polytope. Vertices and charts are always recomputed
/// from the H-representation.
class DelzantPolytope {
 public:
  /// Throws Error with NotSimple, NotSmooth, Unbounded, Empty, DuplicateFacet,
  /// RedundantFacet or DimensionMismatch.
  static DelzantPolytope validate(std::vector<Halfspace> facets);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& facets() const noexcept { return facets_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<VertexChart>& charts() const noexcept { return charts_; }
  const VertexChart& chart(std::size_t vertex) const;

  /// Facet normals as rows (d x n) and offsets, in double precision.
  const Eigen::MatrixXd& normal_rows() const noexcept { return normal_rows_; }
  const Eigen::VectorXd& offset_values() const noexcept { return offset_values_; }
  Eigen::VectorXd vertex_position(std::size_t vertex) const;

 private:
  DelzantPolytope() = default;

  std::size_t dim_ = 0;
  std::vector<Halfspace> facets_;
  std::vector<Vertex> vertices_;
  std::vector<VertexChart> charts_;
  Eigen::MatrixXd normal_rows_;
  Eigen::VectorXd offset_values_;
};

/// Builds the chart at vertex `vertex`; validate() caches these.
VertexChart vertex_chart(const DelzantPolytope& polytope, std::size_t vertex);

/// D^{lambda mu} = Q_lambda^{-1} Q_mu.
IntMatrix transition(const DelzantPolytope& polytope, std::size_t lambda, std::size_t mu);

/// (L_1(xi), ..., L_d(xi)) with L_j(xi) = <xi, u_j> - kappa_j.
std::vector<double> facet_values(const DelzantPolytope& polytope, std::span<const double> xi);
Eigen::VectorXd facet_values(const DelzantPolytope& polytope, const Eigen::VectorXd& xi);

enum class LocationKind { Interior, Boundary, Vertex, Outside };

struct Location {
  LocationKind kind = LocationKind::Interior;
  std::vector<std::size_t> facets;     // facets with |L_j| <= tolerance
  std::optional<std::size_t> vertex;   // set when kind == Vertex
};

Location locate(const DelzantPolytope& polytope, std::span<const double> xi, double tolerance = 1e-8);
/// "interior", "facet:j", "face:i+j", "vertex:v" or "outside".
std::string describe(const Location& location);

std::string format_point(const RationalVec& p);

}  // namespace delzant
