#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace delzant {

/// Every numeric threshold used by the library, in one place.
struct Tolerances {
  double rank = 1e-8;                  // singular values above rank * max(sigma_max, 1) count
  double log_solve = 1e-9;             // least-squares residual for a consistent stratum
  double newton = 1e-10;               // ||grad G - x|| at convergence
  int newton_iterations = 200;
  double fraction_to_boundary = 0.95;  // Newton steps stop short of any facet by this factor
  double bisection = 1e-10;
  double on_facet = 1e-8;
  double dedup = 1e-7;
  double endpoint_match = 1e-7;
  double residual = 1e-8;              // g-system residual accepted on a curve
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t;
  return t;
}

/// Number of singular values above tolerance * max(sigma_max, 1), after each
/// nonzero row is scaled to unit max-norm (a rank-preserving step).
std::size_t numeric_rank(const Eigen::MatrixXd& m, double tolerance = default_tolerances().rank);
std::size_t numeric_rank(const Eigen::MatrixXcd& m, double tolerance = default_tolerances().rank);

}  // namespace delzant
