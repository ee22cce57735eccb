#include <doctest.h>

#include <cmath>
#include <numbers>

#include "delzant/error.hpp"
#include "delzant/numeric.hpp"
#include "delzant/subspace.hpp"
#include "support.hpp"

using namespace delzant;
using delzant::testing::catalog;
using delzant::testing::catalog_names;
using delzant::testing::random_real;
using delzant::testing::random_subspace;

namespace {

constexpr double kE = std::numbers::e;

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("ortho_basis examples") {
  auto q = ortho_basis(AffineSubspace::make({make_int_vec({1, 1})}));
  REQUIRE(q.normals.size() == 1);
  CHECK(q.normals[0].entries() == make_int_vec({1, -1}));
  q = ortho_basis(AffineSubspace::make({make_int_vec({1, 0})}));
  CHECK(q.normals[0].entries() == make_int_vec({0, 1}));
  q = ortho_basis(AffineSubspace::make({make_int_vec({1, 1, 1})}));
  CHECK(q.normals.size() == 2);
  for (const auto& n : q.normals) CHECK(dot(n.entries(), make_int_vec({1, 1, 1})) == 0);
}

TEST_CASE("invalid subspaces are rejected") {
  CHECK_THROWS_AS(AffineSubspace::make({make_int_vec({1, 1}), make_int_vec({1, 0})}), Error);
  CHECK_THROWS_AS(AffineSubspace::make({make_int_vec({1, 1, 0}), make_int_vec({2, 2, 0})}), Error);
  CHECK_THROWS_AS(AffineSubspace::make({make_int_vec({0, 0})}), Error);
  CHECK(AffineSubspace::make({make_int_vec({2, 4})}).slopes()[0].entries() == make_int_vec({1, 2}));
}

TEST_CASE("build_system examples on the CP2 origin chart") {
  const auto p = catalog("cp2");
  const auto& chart = p.chart(0);
  const auto v = AffineSubspace::make({make_int_vec({1, 1})});
  const auto basis = ortho_basis(v);
  const auto f = build_system(chart, v, basis, Side::F);
  REQUIRE(f.equations.size() == 1);
  CHECK(f.equations[0].exponents == std::vector<long>{1, -1});
  CHECK(f.equations[0].constant == doctest::Approx(1.0));
  CHECK(eval_system(f, vec({3, 3}))(0) == doctest::Approx(0.0));
  CHECK(eval_system(f, vec({0, 0}))(0) == 0.0);
  const Eigen::MatrixXd jf = jacobian(f, vec({0.3, 1.7}));
  CHECK(jf(0, 0) == doctest::Approx(1.0));
  CHECK(jf(0, 1) == doctest::Approx(-1.0));

  const auto g = build_system(chart, v, basis, Side::G);
  CHECK(eval_system(g, vec({1, 2}))(0) == doctest::Approx(-kE));
  const Eigen::MatrixXd jg = jacobian(g, vec({1, 2}));
  CHECK(jg(0, 0) == doctest::Approx(kE));
  CHECK(jg(0, 1) == doctest::Approx(-kE));
  CHECK(numeric_rank(jg) == 1);

  const auto v2 = AffineSubspace::make({make_int_vec({1, 0})}, vec({std::log(2.0), 0}));
  const auto f2 = build_system(chart, v2, ortho_basis(v2), Side::F);
  CHECK(f2.equations[0].exponents == std::vector<long>{0, 1});
  CHECK(f2.equations[0].constant == doctest::Approx(1.0));
  CHECK(eval_system(f2, vec({5, 3}))(0) == doctest::Approx(2.0));
}

TEST_CASE("product equation has a vanishing Jacobian at the origin") {
  ExponentSystem sys;
  sys.side = Side::F;
  sys.n = 2;
  sys.normals = IntMatrix::identity(2);
  sys.equations.push_back(make_equation({1, 1}, 2.0));
  const Eigen::MatrixXd j = jacobian(sys, vec({0, 0}));
  CHECK(j.isZero());
  CHECK(numeric_rank(j) == 0);
}

TEST_CASE("torus_act examples") {
  const auto p = catalog("cp2");
  const auto v = AffineSubspace::make({make_int_vec({1, 1})});
  Eigen::VectorXcd z(2);
  z << std::complex<double>(0.3, 0.4), std::complex<double>(-1.2, 0.5);
  const auto same = torus_act(p.chart(0), v, TorusElement::from_angles({0.0}), z);
  CHECK((same - z).norm() < 1e-15);
  const auto flipped = torus_act(p.chart(0), v, TorusElement::from_angles({std::numbers::pi}), z);
  CHECK((flipped + z).norm() < 1e-12);
  CHECK(std::abs(std::abs(flipped(1)) - std::abs(z(1))) < 1e-15);
}

TEST_CASE("orthogonality identity holds exactly in every chart") {
  auto g = testing::rng(21);
  for (const auto& name : catalog_names()) {
    const auto p = catalog(name);
    const std::size_t n = p.dim();
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = random_subspace(g, n, static_cast<std::size_t>(testing::uniform_int(g, 1, static_cast<long>(n) - 1)));
      const auto basis = ortho_basis(v);
      for (const auto& c : p.charts())
        for (const auto& pl : v.slopes())
          for (const auto& q : basis.normals) {
            BigInt s = 0;
            for (std::size_t i = 0; i < n; ++i)
              s += dot(pl.entries(), c.directions.column(i)) * dot(c.normals.column(i), q.entries());
            CHECK(s == 0);
          }
    }
  }
}

TEST_CASE("param_point lies on C(V) and phase_normalize makes it real") {
  const auto p = catalog("cp2");
  const auto v = AffineSubspace::make({make_int_vec({1, 1})});
  const auto z0 = param_point(p.chart(0), v, vec({0}), vec({0}));
  CHECK((z0 - Eigen::VectorXcd::Ones(2)).norm() < 1e-15);
  const auto z1 = param_point(p.chart(0), v, vec({1}), vec({0}));
  CHECK(std::abs(z1(0) - kE) < 1e-12);
  CHECK(std::abs(z1(1) - kE) < 1e-12);
  const auto zpi = param_point(p.chart(0), v, vec({0.5}), vec({std::numbers::pi}));
  const auto back = torus_act(p.chart(0), v, phase_normalize(vec({std::numbers::pi})), zpi);
  CHECK(back.imag().norm() < 1e-12);
  CHECK(back.real().minCoeff() > 0);
  CHECK(phase_normalize(vec({0})).angles[0] == 0.0);

  auto g = testing::rng(22);
  for (const auto& name : catalog_names()) {
    const auto poly = catalog(name);
    const std::size_t n = poly.dim();
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t k = static_cast<std::size_t>(testing::uniform_int(g, 1, static_cast<long>(n) - 1));
      const auto v2 = random_subspace(g, n, k);
      const auto basis = ortho_basis(v2);
      for (const auto& c : poly.charts()) {
        const auto u = random_real(g, k, -1, 1);
        const auto phase = random_real(g, k, -4, 4);
        const auto z = param_point(c, v2, u, phase);
        const auto sys = build_system(c, v2, basis, Side::F);
        const auto f = eval_system(sys, z);
        for (std::size_t j = 0; j < sys.equations.size(); ++j) {
          const auto& eq = sys.equations[j];
          double scale = 1.0;
          for (std::size_t i : eq.positive) scale *= std::pow(std::abs(z(static_cast<Eigen::Index>(i))), eq.exponents[i]);
          CHECK(std::abs(f(static_cast<Eigen::Index>(j))) < 1e-10 * std::max(1.0, scale));
        }
        const auto real = torus_act(c, v2, phase_normalize(phase), z);
        CHECK(real.imag().cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, real.real().cwiseAbs().maxCoeff()));
        CHECK(real.real().minCoeff() > 0);
      }
    }
  }
}

TEST_CASE("equivariance and rank invariance under the subtorus") {
  auto g = testing::rng(23);
  for (const auto& name : catalog_names()) {
    const auto poly = catalog(name);
    const std::size_t n = poly.dim();
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t k = static_cast<std::size_t>(testing::uniform_int(g, 1, static_cast<long>(n) - 1));
      const auto v = random_subspace(g, n, k);
      const auto basis = ortho_basis(v);
      const auto& c = poly.chart(static_cast<std::size_t>(testing::uniform_int(g, 0, static_cast<long>(poly.charts().size()) - 1)));
      const auto sys = build_system(c, v, basis, Side::F);
      Eigen::VectorXcd z(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < z.size(); ++i)
        z(i) = std::polar(std::exp(testing::uniform_real(g, -1, 1)), testing::uniform_real(g, -3, 3));
      std::vector<double> angles;
      for (std::size_t l = 0; l < k; ++l) angles.push_back(testing::uniform_real(g, -10, 10));
      const auto t = TorusElement::from_angles(angles);
      const auto moved = torus_act(c, v, t, z);
      const Eigen::VectorXcd lhs = eval_system(sys, moved);
      const Eigen::VectorXcd rhs = action_factor(c, v, basis, t).cwiseProduct(eval_system(sys, z));
      const double fz = eval_system(sys, z).norm();
      CHECK((lhs - rhs).norm() / (1 + fz) < 1e-10);
      CHECK(numeric_rank(jacobian(sys, moved)) == numeric_rank(jacobian(sys, z)));
      const Eigen::VectorXcd modulus = z.cwiseAbs().cast<std::complex<double>>();
      CHECK(numeric_rank(jacobian(sys, modulus)) == numeric_rank(jacobian(sys, z)));
      for (Eigen::Index i = 0; i < action_factor(c, v, basis, t).size(); ++i)
        CHECK(std::abs(std::abs(action_factor(c, v, basis, t)(i)) - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("codim-1 rank verdicts do not depend on the anchor") {
  auto g = testing::rng(24);
  const auto poly = catalog("cp2");
  for (int trial = 0; trial < 40; ++trial) {
    const auto v = random_subspace(g, 2, 1);
    const auto basis = ortho_basis(v);
    for (const auto& c : poly.charts()) {
      const auto u = random_real(g, 1, -1, 1);
      const auto z = param_point(c, v, u, Eigen::VectorXd::Zero(1));
      const auto sys = build_system(c, v, basis, Side::F);
      const std::size_t r = numeric_rank(jacobian(sys, z));
      for (int s = 0; s < 3; ++s) {
        const auto moved = v.with_anchor(random_real(g, 2, -2, 2));
        const auto z2 = param_point(c, moved, u, Eigen::VectorXd::Zero(1));
        CHECK(numeric_rank(jacobian(build_system(c, moved, basis, Side::F), z2)) == r);
      }
    }
  }
}
