#include "delzant/numeric.hpp"

#include <algorithm>

namespace delzant {

namespace {

template <typename Matrix>
std::size_t rank_impl(Matrix m, double tolerance) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double scale = m.row(r).cwiseAbs().maxCoeff();
    if (scale > 0) m.row(r) /= scale;
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sigma = svd.singularValues();
  const double cutoff = tolerance * std::max(sigma(0), 1.0);
  return static_cast<std::size_t>((sigma.array() > cutoff).count());
}

}  // namespace

std::size_t numeric_rank(const Eigen::MatrixXd& m, double tolerance) { return rank_impl(m, tolerance); }
std::size_t numeric_rank(const Eigen::MatrixXcd& m, double tolerance) { return rank_impl(m, tolerance); }

}  // namespace delzant
