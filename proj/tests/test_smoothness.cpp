#include <doctest.h>

#include <cmath>

#include "delzant/smoothness.hpp"
#include "support.hpp"

using namespace delzant;
using delzant::testing::catalog;
using delzant::testing::catalog_names;

namespace {

ExponentSystem single(std::vector<long> m, double c) {
  ExponentSystem sys;
  sys.n = m.size();
  sys.normals = IntMatrix::identity(sys.n);
  sys.equations.push_back(make_equation(std::move(m), c));
  return sys;
}

const StratumReport& stratum(const std::vector<StratumReport>& reports, std::vector<std::size_t> s) {
  for (const auto& r : reports)
    if (r.reduction.vanishing == s) return r;
  FAIL("stratum not found");
  return reports.front();
}

AffineSubspace line(long a, long b, double x = 0, double y = 0) {
  Eigen::VectorXd anchor(2);
  anchor << x, y;
  return AffineSubspace::make({make_int_vec({a, b})}, anchor);
}

}  // namespace

TEST_CASE("stratum_reduce examples") {
  const auto diff = single({1, -1}, 1.0);
  CHECK(stratum_reduce(diff, {0, 1}).status == StratumStatus::TriviallySatisfied);
  CHECK(stratum_reduce(diff, {0}).status == StratumStatus::Infeasible);
  CHECK(stratum_reduce(diff, {}).status == StratumStatus::Active);
  const auto shifted = single({0, 1}, 2.0);
  CHECK(stratum_reduce(shifted, {1}).status == StratumStatus::Infeasible);
  CHECK(stratum_reduce(shifted, {0}).status == StratumStatus::Active);
  const auto product = single({1, 1}, 2.0);
  CHECK(stratum_reduce(product, {0, 1}).status == StratumStatus::Infeasible);
}

TEST_CASE("analyze_vertex on the CP2 origin chart") {
  const auto p = catalog("cp2");
  const auto v = line(1, 1);
  const auto reports = analyze_vertex(p.chart(0), v, ortho_basis(v), Side::G);
  REQUIRE(reports.size() == 4);
  CHECK(stratum(reports, {}).verdict == RankVerdict::FullRank);
  CHECK(stratum(reports, {0, 1}).verdict == RankVerdict::FullRank);
  CHECK(stratum(reports, {0}).verdict == RankVerdict::Empty);
  CHECK(stratum(reports, {1}).verdict == RankVerdict::Empty);
  CHECK(stratum(reports, {0, 1}).status == StratumStatus::TriviallySatisfied);
  for (const auto& s : stratum(reports, {}).samples) CHECK(std::abs(s.args(0) - s.args(1)) < 1e-9 * s.args(0));
}

TEST_CASE("exponents of at least two at a corner make the stratum deficient") {
  const auto p = catalog("cp2");
  const auto v = line(3, 2);  // normal (2,-3): z1^2 - z2^3 in the origin chart
  const auto reports = analyze_vertex(p.chart(0), v, ortho_basis(v), Side::G);
  const auto& corner = stratum(reports, {0, 1});
  CHECK(corner.verdict == RankVerdict::Deficient);
  CHECK(corner.max_rank == 0);
  CHECK(stratum(reports, {}).verdict == RankVerdict::FullRank);
}

TEST_CASE("is_embedded_toric on CP2") {
  const auto p = catalog("cp2");
  auto verdict = is_embedded_toric(p, line(1, 0));
  CHECK(verdict.overall);
  CHECK(verdict.rank_mismatches == 0);
  CHECK(verdict.compared_points > 0);

  verdict = is_embedded_toric(p, line(3, 1));
  CHECK_FALSE(verdict.overall);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->rank < 1);

  verdict = is_embedded_toric(p, line(1, 1, std::log(2.0), 0));
  CHECK(verdict.overall);
  CHECK(verdict.rank_mismatches == 0);

  CHECK(is_embedded_toric(p, line(1, 0), CheckSides::F).overall);
  CHECK_FALSE(is_embedded_toric(p, line(3, 1), CheckSides::F).overall);
}

TEST_CASE("verdicts are stable across seeds and the interior is always full rank") {
  auto g = testing::rng(31);
  for (const auto& name : catalog_names()) {
    const auto p = catalog(name);
    const std::size_t n = p.dim();
    for (int trial = 0; trial < 15; ++trial) {
      const auto k = static_cast<std::size_t>(testing::uniform_int(g, 1, static_cast<long>(n) - 1));
      const auto v = testing::random_subspace(g, n, k);
      AnalyzeOptions a;
      a.seed = 1;
      AnalyzeOptions b;
      b.seed = 977;
      const auto va = is_embedded_toric(p, v, CheckSides::Both, a);
      const auto vb = is_embedded_toric(p, v, CheckSides::Both, b);
      CHECK(va.overall == vb.overall);
      CHECK(va.rank_mismatches == 0);
      CHECK(vb.rank_mismatches == 0);
      for (const auto& vr : va.vertices) CHECK(vr.strata.front().verdict == RankVerdict::FullRank);
    }
  }
}

TEST_CASE("stratum samples satisfy the system") {
  auto g = testing::rng(32);
  for (const auto& name : catalog_names()) {
    const auto p = catalog(name);
    const std::size_t n = p.dim();
    for (int trial = 0; trial < 10; ++trial) {
      const auto k = static_cast<std::size_t>(testing::uniform_int(g, 1, static_cast<long>(n) - 1));
      const auto v = testing::random_subspace(g, n, k);
      const auto basis = ortho_basis(v);
      for (const auto& c : p.charts()) {
        const auto sys = build_system(c, v, basis, Side::F);
        for (const auto& rep : analyze_vertex(c, v, basis, Side::F))
          for (const auto& s : rep.samples) {
            const Eigen::VectorXd f = eval_system(sys, s.args);
            double scale = 1;
            for (Eigen::Index i = 0; i < s.args.size(); ++i) scale = std::max(scale, std::pow(s.args(i), 6.0));
            CHECK(f.cwiseAbs().maxCoeff() < 1e-9 * scale);
          }
      }
    }
  }
}
