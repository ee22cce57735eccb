#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "delzant/numeric.hpp"
#include "delzant/polytope.hpp"
#include "delzant/subspace.hpp"

namespace delzant {

// Guillemin potential G = sum_j L_j log L_j and its derivatives. All of these
// throw NotInterior unless every L_j(xi) > 0.
double potential(const DelzantPolytope& polytope, const Eigen::VectorXd& xi);
Eigen::VectorXd potential_grad(const DelzantPolytope& polytope, const Eigen::VectorXd& xi);
Eigen::MatrixXd potential_hessian(const DelzantPolytope& polytope, const Eigen::VectorXd& xi);

/// Maximiser of sum_j log L_j.
Eigen::VectorXd analytic_center(const DelzantPolytope& polytope);

/// Phi^{-1}(x): the interior point with grad G = x, by damped Newton on
/// G - <x, xi>. Starts at `start` when given, else at the analytic center.
/// Throws NoConvergence after tolerances.newton_iterations steps.
Eigen::VectorXd legendre_inverse(const DelzantPolytope& polytope, const Eigen::VectorXd& x,
                                 const Tolerances& tolerances = {},
                                 const std::optional<Eigen::VectorXd>& start = std::nullopt);

/// Gradient of the local potential G^lambda = sum_{i <= n} L^lambda_i log L^lambda_i.
Eigen::VectorXd local_potential_grad(const VertexChart& chart, const Eigen::VectorXd& xi_local);

/// xi^lambda = Q (exp(<v_i, grad G(xi)> - 1) + kappa_i)_i for interior xi.
Eigen::VectorXd psi_lambda(const DelzantPolytope& polytope, const VertexChart& chart, const Eigen::VectorXd& xi);

/// Facet values L^lambda_i(xi^lambda) of the continuous extension:
///   L_i(xi) * prod_{j not incident} (e L_j(xi))^{<v_i, u_j>}.
/// Throws OnExcludedFacet if some non-incident L_j(xi) <= 0.
Eigen::VectorXd psi_bar_values(const DelzantPolytope& polytope, const VertexChart& chart, const Eigen::VectorXd& xi);

/// The extension of psi_lambda to every point of the polytope off the
/// non-incident facets.
Eigen::VectorXd psi_bar_lambda(const DelzantPolytope& polytope, const VertexChart& chart, const Eigen::VectorXd& xi);

/// The vertex nearest to xi among those whose non-incident facets all have
/// L_j > tolerance.on_facet.
std::optional<std::size_t> owning_chart(const DelzantPolytope& polytope, const Eigen::VectorXd& xi,
                                        const Tolerances& tolerances = {});

/// Largest relative residual |P - c N| / max(1, P, c N) of the g-system of V
/// in `chart` at xi, using psi_bar_values for the arguments.
double g_residual(const DelzantPolytope& polytope, const VertexChart& chart, const AffineSubspace& v,
                  const Eigen::VectorXd& xi);

struct CurveEndpoint {
  Eigen::VectorXd position;
  Location location;
  std::size_t chart = 0;  // vertex whose chart describes the limit
};

/// Closure of D(V) = Phi^{-1}(V) for a line V = a + s p in a polygon.
struct CurveSample {
  std::vector<double> parameters;       // s; -inf and +inf at the two endpoints
  std::vector<Eigen::VectorXd> points;  // xi, ordered by s
  CurveEndpoint start;                  // s -> -inf
  CurveEndpoint end;                    // s -> +inf
};

CurveEndpoint curve_limit(const DelzantPolytope& polytope, const AffineSubspace& v, int direction,
                          const Tolerances& tolerances = {});

/// Consecutive points are at most diameter / resolution apart.
CurveSample trace_curve(const DelzantPolytope& polytope, const AffineSubspace& v, std::size_t resolution = 512,
                        const Tolerances& tolerances = {});

enum class IntersectionKind { Interior, Boundary };

struct IntersectionPoint {
  Eigen::VectorXd position;
  IntersectionKind kind = IntersectionKind::Interior;
  Location location;
  std::size_t curve_a = 0;
  std::size_t curve_b = 1;
};

struct IntersectOptions {
  std::size_t resolution = 512;
  std::size_t grid = 12;  // Newton seeds per axis
  std::uint64_t seed = 1;
  Tolerances tolerances;
};

/// Interior points by Newton on <grad G - a_a, q_a> = <grad G - a_b, q_b> = 0
/// from jittered grid seeds; boundary points by matching curve endpoints.
std::vector<IntersectionPoint> intersect_curves(const DelzantPolytope& polytope, const AffineSubspace& va,
                                                const AffineSubspace& vb, const IntersectOptions& options = {});

/// Intersection of two lines in R^2; nullopt when parallel (distinct or equal).
std::optional<Eigen::VectorXd> affine_intersection(const AffineSubspace& va, const AffineSubspace& vb);

double diameter(const DelzantPolytope& polytope);

}  // namespace delzant
