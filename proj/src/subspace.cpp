#include "delzant/subspace.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "delzant/error.hpp"

namespace delzant {

namespace {

template <typename T>
T ipow(T x, long k) {
  if (k < 0) {
    if (x == T(0)) throw Error(ErrorCode::PoleAtBoundary, "PoleAtBoundary: negative power of a vanishing coordinate");
    return T(1) / ipow(x, -k);
  }
  T result(1);
  while (k > 0) {
    if (k & 1) result *= x;
    x *= x;
    k >>= 1;
  }
  return result;
}

template <typename T>
T monomial(const MonomialEquation& eq, const std::vector<std::size_t>& part, const std::vector<T>& args, int sign,
           std::size_t skip = static_cast<std::size_t>(-1)) {
  T value(1);
  for (std::size_t i : part)
    if (i != skip) value *= ipow(args[i], sign * eq.exponents[i]);
  return value;
}

template <typename Vec>
std::vector<typename Vec::Scalar> arguments(const ExponentSystem& sys, const Vec& w) {
  if (static_cast<std::size_t>(w.size()) != sys.n)
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: point has the wrong length");
  const double scale = sys.side == Side::G ? std::numbers::e : 1.0;
  std::vector<typename Vec::Scalar> args(sys.n);
  for (std::size_t i = 0; i < sys.n; ++i) args[i] = scale * w(static_cast<Eigen::Index>(i));
  return args;
}

template <typename Vec>
Vec eval_impl(const ExponentSystem& sys, const Vec& w) {
  using T = typename Vec::Scalar;
  const auto args = arguments(sys, w);
  Vec out(static_cast<Eigen::Index>(sys.equations.size()));
  for (std::size_t j = 0; j < sys.equations.size(); ++j) {
    const auto& eq = sys.equations[j];
    out(static_cast<Eigen::Index>(j)) =
        monomial<T>(eq, eq.positive, args, 1) - eq.constant * monomial<T>(eq, eq.negative, args, -1);
  }
  return out;
}

template <typename Vec>
Eigen::Matrix<typename Vec::Scalar, Eigen::Dynamic, Eigen::Dynamic> jacobian_impl(const ExponentSystem& sys,
                                                                                 const Vec& w) {
  using T = typename Vec::Scalar;
  using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  const auto args = arguments(sys, w);
  Mat d = Mat::Zero(static_cast<Eigen::Index>(sys.equations.size()), static_cast<Eigen::Index>(sys.n));
  for (std::size_t j = 0; j < sys.equations.size(); ++j) {
    const auto& eq = sys.equations[j];
    for (std::size_t i = 0; i < sys.n; ++i) {
      const long m = eq.exponents[i];
      if (m == 0) continue;
      const bool pos = m > 0;
      const long reduced = (pos ? m : -m) - 1;
      T entry = T(static_cast<double>(m)) * ipow(args[i], reduced) *
                monomial<T>(eq, pos ? eq.positive : eq.negative, args, pos ? 1 : -1, i);
      if (!pos) entry *= eq.constant;
      d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = entry;
    }
  }
  if (sys.side == Side::F) return d;
  Mat ut(static_cast<Eigen::Index>(sys.n), static_cast<Eigen::Index>(sys.n));
  for (std::size_t r = 0; r < sys.n; ++r)
    for (std::size_t c = 0; c < sys.n; ++c)
      ut(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = T(static_cast<double>(sys.normals(c, r)));
  return std::numbers::e * d * ut;
}

double angle_of(const IntMatrix& weights, std::size_t j, const std::vector<double>& theta) {
  double s = 0;
  for (std::size_t l = 0; l < theta.size(); ++l) s += theta[l] * static_cast<double>(weights(l, j));
  return s;
}

}  // namespace

AffineSubspace AffineSubspace::make(const std::vector<IntVec>& slopes, Eigen::VectorXd anchor) {
  const auto n = static_cast<std::size_t>(anchor.size());
  if (slopes.empty() || slopes.size() >= n)
    throw Error(ErrorCode::InvalidSubspace,
                "InvalidSubspace: need 1 <= k <= n-1 slopes, got k = " + std::to_string(slopes.size()) +
                    " in dimension " + std::to_string(n));
  AffineSubspace v;
  for (const auto& s : slopes) {
    if (s.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: slope " + to_string(s) + " has length " +
                                                    std::to_string(s.size()) + ", expected " + std::to_string(n));
    if (is_zero(s)) throw Error(ErrorCode::InvalidSubspace, "InvalidSubspace: zero slope");
    v.slopes_.push_back(primitive_part(s));
  }
  std::vector<IntVec> rows;
  for (const auto& p : v.slopes_) rows.push_back(p.entries());
  if (rank(IntMatrix::from_rows(rows)) != rows.size())
    throw Error(ErrorCode::InvalidSubspace, "InvalidSubspace: slopes are linearly dependent");
  v.anchor_ = std::move(anchor);
  return v;
}

AffineSubspace AffineSubspace::make(const std::vector<IntVec>& slopes) {
  const std::size_t n = slopes.empty() ? 0 : slopes.front().size();
  return make(slopes, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)));
}

Eigen::MatrixXd AffineSubspace::slope_matrix() const {
  Eigen::MatrixXd p(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(k()));
  for (std::size_t l = 0; l < k(); ++l)
    for (std::size_t i = 0; i < dim(); ++i)
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) = static_cast<double>(slopes_[l][i]);
  return p;
}

AffineSubspace AffineSubspace::with_anchor(Eigen::VectorXd anchor) const {
  if (anchor.size() != anchor_.size())
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: anchor has the wrong length");
  AffineSubspace v = *this;
  v.anchor_ = std::move(anchor);
  return v;
}

std::string AffineSubspace::describe() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t l = 0; l < k(); ++l) os << (l ? ", " : "") << to_string(slopes_[l].entries());
  os << "} + (";
  for (Eigen::Index i = 0; i < anchor_.size(); ++i) os << (i ? "," : "") << anchor_(i);
  os << ")";
  return os.str();
}

OrthoBasis ortho_basis(const AffineSubspace& v) {
  std::vector<IntVec> rows;
  for (const auto& p : v.slopes()) rows.push_back(p.entries());
  return {integer_kernel_basis(IntMatrix::from_rows(rows))};
}

MonomialEquation make_equation(std::vector<long> exponents, double constant) {
  MonomialEquation eq;
  eq.exponents = std::move(exponents);
  eq.constant = constant;
  for (std::size_t i = 0; i < eq.exponents.size(); ++i) {
    if (eq.exponents[i] > 0) eq.positive.push_back(i);
    if (eq.exponents[i] < 0) eq.negative.push_back(i);
  }
  return eq;
}

ExponentSystem build_system(const VertexChart& chart, const AffineSubspace& v, const OrthoBasis& basis, Side side) {
  const std::size_t n = chart.normals.rows();
  if (v.dim() != n) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: subspace and chart dimensions differ");
  ExponentSystem sys;
  sys.side = side;
  sys.chart = chart.vertex;
  sys.n = n;
  sys.normals = chart.normals;
  for (const auto& q : basis.normals) {
    if (q.size() != n) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: basis vector has the wrong length");
    std::vector<long> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = to_long(dot(chart.normals.column(i), q.entries()));
    double aq = 0;
    for (std::size_t i = 0; i < n; ++i) aq += v.anchor()(static_cast<Eigen::Index>(i)) * static_cast<double>(q[i]);
    sys.equations.push_back(make_equation(std::move(m), std::exp(aq)));
  }
  return sys;
}

Eigen::VectorXd eval_system(const ExponentSystem& sys, const Eigen::VectorXd& w) { return eval_impl(sys, w); }
Eigen::VectorXcd eval_system(const ExponentSystem& sys, const Eigen::VectorXcd& w) { return eval_impl(sys, w); }
Eigen::MatrixXd jacobian(const ExponentSystem& sys, const Eigen::VectorXd& w) { return jacobian_impl(sys, w); }
Eigen::MatrixXcd jacobian(const ExponentSystem& sys, const Eigen::VectorXcd& w) { return jacobian_impl(sys, w); }

TorusElement TorusElement::from_angles(std::vector<double> angles) {
  constexpr double two_pi = 2 * std::numbers::pi;
  for (auto& a : angles) {
    a = std::fmod(a, two_pi);
    if (a < 0) a += two_pi;
  }
  return {std::move(angles)};
}

IntMatrix slope_weights(const VertexChart& chart, const AffineSubspace& v) {
  const std::size_t n = chart.directions.rows();
  IntMatrix w(v.k(), n);
  for (std::size_t l = 0; l < v.k(); ++l)
    for (std::size_t j = 0; j < n; ++j) w(l, j) = dot(v.slopes()[l].entries(), chart.directions.column(j));
  return w;
}

Eigen::VectorXcd torus_act(const VertexChart& chart, const AffineSubspace& v, const TorusElement& t,
                           const Eigen::VectorXcd& z) {
  const IntMatrix weights = slope_weights(chart, v);
  Eigen::VectorXcd out = z;
  for (Eigen::Index j = 0; j < z.size(); ++j)
    out(j) *= std::polar(1.0, angle_of(weights, static_cast<std::size_t>(j), t.angles));
  return out;
}

Eigen::VectorXcd action_factor(const VertexChart& chart, const AffineSubspace& v, const OrthoBasis& basis,
                               const TorusElement& t) {
  const IntMatrix weights = slope_weights(chart, v);
  const std::size_t n = chart.normals.rows();
  Eigen::VectorXcd out(static_cast<Eigen::Index>(basis.normals.size()));
  for (std::size_t i = 0; i < basis.normals.size(); ++i) {
    double phase = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const long m = to_long(dot(chart.normals.column(j), basis.normals[i].entries()));
      if (m < 0) phase -= angle_of(weights, j, t.angles) * static_cast<double>(m);
    }
    out(static_cast<Eigen::Index>(i)) = std::polar(1.0, phase);
  }
  return out;
}

Eigen::VectorXcd param_point(const VertexChart& chart, const AffineSubspace& v, const Eigen::VectorXd& u,
                             const Eigen::VectorXd& phase) {
  const IntMatrix weights = slope_weights(chart, v);
  const std::size_t n = chart.directions.rows();
  Eigen::VectorXcd z(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double re = 0;
    double im = 0;
    for (std::size_t l = 0; l < v.k(); ++l) {
      const auto w = static_cast<double>(weights(l, i));
      re += w * u(static_cast<Eigen::Index>(l));
      im += w * phase(static_cast<Eigen::Index>(l));
    }
    for (std::size_t r = 0; r < n; ++r)
      re += v.anchor()(static_cast<Eigen::Index>(r)) * static_cast<double>(chart.directions(r, i));
    z(static_cast<Eigen::Index>(i)) = std::exp(std::complex<double>(re, im));
  }
  return z;
}

TorusElement phase_normalize(const Eigen::VectorXd& phase) {
  std::vector<double> angles(static_cast<std::size_t>(phase.size()));
  for (Eigen::Index l = 0; l < phase.size(); ++l) angles[static_cast<std::size_t>(l)] = -phase(l);
  return TorusElement::from_angles(std::move(angles));
}

}  // namespace delzant
