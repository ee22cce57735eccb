#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "delzant/lattice.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

/// V = R p_1 + ... + R p_k + a with rational slope.
class AffineSubspace {
 public:
  /// Slopes are reduced to their primitive parts. Throws InvalidSubspace unless
  /// the slopes are independent with 1 <= k <= n-1, and DimensionMismatch when
  /// lengths disagree.
  static AffineSubspace make(const std::vector<IntVec>& slopes, Eigen::VectorXd anchor);
  static AffineSubspace make(const std::vector<IntVec>& slopes);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(anchor_.size()); }
  std::size_t k() const noexcept { return slopes_.size(); }
  const std::vector<PrimitiveVec>& slopes() const noexcept { return slopes_; }
  const Eigen::VectorXd& anchor() const noexcept { return anchor_; }
  /// n x k, slopes as columns.
  Eigen::MatrixXd slope_matrix() const;

  AffineSubspace with_anchor(Eigen::VectorXd anchor) const;
  std::string describe() const;

 private:
  std::vector<PrimitiveVec> slopes_;
  Eigen::VectorXd anchor_;
};

/// Primitive lattice basis q_{k+1}, ..., q_n of the vectors orthogonal to V.
struct OrthoBasis {
  std::vector<PrimitiveVec> normals;
};

OrthoBasis ortho_basis(const AffineSubspace& v);

enum class Side { F, G };

/// One monomial-difference equation:
///   prod_{m_i > 0} w_i^{m_i} - c prod_{m_i < 0} w_i^{-m_i}.
/// Exponent-zero coordinates take part in neither product.
struct MonomialEquation {
  std::vector<long> exponents;  // m_i = <u_i, q>
  double constant = 1.0;        // c = exp<a, q>
  std::vector<std::size_t> positive;  // i with m_i > 0
  std::vector<std::size_t> negative;  // i with m_i < 0
};

struct ExponentSystem {
  Side side = Side::F;
  std::size_t chart = 0;
  std::size_t n = 0;
  std::vector<MonomialEquation> equations;
  IntMatrix normals;  // U of the chart; the g-side Jacobian is taken in xi
};

MonomialEquation make_equation(std::vector<long> exponents, double constant);

ExponentSystem build_system(const VertexChart& chart, const AffineSubspace& v, const OrthoBasis& basis, Side side);

/// Side F evaluates at chart coordinates z; side G at facet values L^lambda,
/// with e * L_i substituted for z_i.
Eigen::VectorXd eval_system(const ExponentSystem& sys, const Eigen::VectorXd& w);
Eigen::VectorXcd eval_system(const ExponentSystem& sys, const Eigen::VectorXcd& w);

/// Side F: derivative in z. Side G: derivative in xi^lambda, i.e.
/// e * Df(eL) * U^t. Throws PoleAtBoundary if a negative power of zero
/// would be needed (impossible for systems built here).
Eigen::MatrixXd jacobian(const ExponentSystem& sys, const Eigen::VectorXd& w);
Eigen::MatrixXcd jacobian(const ExponentSystem& sys, const Eigen::VectorXcd& w);

/// Angles theta_l of t_l = exp(i theta_l), reduced to [0, 2 pi).
struct TorusElement {
  std::vector<double> angles;
  static TorusElement from_angles(std::vector<double> angles);
};

/// z_j -> z_j * prod_l t_l^{<p_l, v_j>}.
Eigen::VectorXcd torus_act(const VertexChart& chart, const AffineSubspace& v, const TorusElement& t,
                           const Eigen::VectorXcd& z);

/// T_i(t) with f_i(i_V(t) z) = T_i(t) f_i(z), one per normal q_i.
Eigen::VectorXcd action_factor(const VertexChart& chart, const AffineSubspace& v, const OrthoBasis& basis,
                               const TorusElement& t);

/// z_i = exp(sum_l <p_l, v_i> u_l + <a, v_i> + i sum_l <p_l, v_i> v_l), a point
/// of C(V) in the chart.
Eigen::VectorXcd param_point(const VertexChart& chart, const AffineSubspace& v, const Eigen::VectorXd& u,
                             const Eigen::VectorXd& phase);

/// The torus element with theta = -phase, which rotates param_point(u, phase)
/// onto the positive reals.
TorusElement phase_normalize(const Eigen::VectorXd& phase);

/// <p_l, v_j> as a k x n integer matrix.
IntMatrix slope_weights(const VertexChart& chart, const AffineSubspace& v);

}  // namespace delzant
