#include "delzant/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "delzant/error.hpp"

namespace delzant {

namespace {

bool intersects(const std::vector<std::size_t>& part, const std::vector<bool>& zero) {
  return std::any_of(part.begin(), part.end(), [&](std::size_t i) { return zero[i]; });
}

std::mt19937_64 stratum_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  return std::mt19937_64(seq);
}

std::vector<std::size_t> subset_of(std::size_t mask, std::size_t n) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (std::size_t{1} << i)) s.push_back(i);
  return s;
}

}  // namespace

StratumReduction stratum_reduce(const ExponentSystem& sys, const std::vector<std::size_t>& vanishing) {
  StratumReduction r;
  r.vanishing = vanishing;
  std::vector<bool> zero(sys.n, false);
  for (std::size_t i : vanishing) {
    if (i >= sys.n) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: stratum index out of range");
    zero[i] = true;
  }
  bool any_infeasible = false;
  for (std::size_t j = 0; j < sys.equations.size(); ++j) {
    const auto& eq = sys.equations[j];
    const bool pos_zero = intersects(eq.positive, zero);
    const bool neg_zero = intersects(eq.negative, zero);
    EquationStatus s = EquationStatus::Active;
    if (pos_zero && neg_zero) s = EquationStatus::Trivial;
    else if (pos_zero != neg_zero) s = EquationStatus::Infeasible;
    if (s == EquationStatus::Active) r.active.push_back(j);
    any_infeasible |= s == EquationStatus::Infeasible;
    r.equations.push_back(s);
  }
  if (any_infeasible) r.status = StratumStatus::Infeasible;
  else if (r.active.empty()) r.status = StratumStatus::TriviallySatisfied;
  else r.status = StratumStatus::Active;
  return r;
}

std::vector<Eigen::VectorXd> sample_stratum(const ExponentSystem& sys, const StratumReduction& reduction,
                                            std::size_t count, std::uint64_t seed, double spread,
                                            const Tolerances& tolerances, std::size_t* solution_dim,
                                            double* log_residual) {
  if (solution_dim) *solution_dim = 0;
  if (log_residual) *log_residual = 0;
  if (reduction.status == StratumStatus::Infeasible) return {};

  std::vector<bool> zero(sys.n, false);
  for (std::size_t i : reduction.vanishing) zero[i] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < sys.n; ++i)
    if (!zero[i]) free.push_back(i);
  const std::size_t f = free.size();

  // Active equations are affine-linear in y = log(args) on the free coordinates.
  IntMatrix m(reduction.active.size(), f);
  Eigen::MatrixXd md(static_cast<Eigen::Index>(reduction.active.size()), static_cast<Eigen::Index>(f));
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(reduction.active.size()));
  for (std::size_t r = 0; r < reduction.active.size(); ++r) {
    const auto& eq = sys.equations[reduction.active[r]];
    for (std::size_t c = 0; c < f; ++c) {
      m(r, c) = eq.exponents[free[c]];
      md(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = static_cast<double>(eq.exponents[free[c]]);
    }
    rhs(static_cast<Eigen::Index>(r)) = std::log(eq.constant);
  }
  Eigen::VectorXd y0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(f));
  if (!reduction.active.empty() && f > 0) {
    y0 = md.completeOrthogonalDecomposition().solve(rhs);
    const double residual = (md * y0 - rhs).norm() / std::max(1.0, rhs.norm());
    if (log_residual) *log_residual = residual;
    if (residual > tolerances.log_solve) return {};
  } else if (!reduction.active.empty()) {
    return {};
  }

  std::vector<PrimitiveVec> kernel;
  if (f > 0) kernel = reduction.active.empty() ? integer_kernel_basis(IntMatrix(0, f)) : integer_kernel_basis(m);
  if (solution_dim) *solution_dim = kernel.size();
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t c = 0; c < kernel.size(); ++c)
    for (std::size_t r = 0; r < f; ++r)
      basis(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = static_cast<double>(kernel[c][r]);
  // Integer kernel vectors can be long; normalise so the spread means the same
  // thing in every direction.
  for (Eigen::Index c = 0; c < basis.cols(); ++c) basis.col(c).normalize();

  const std::size_t n_samples = kernel.empty() ? 1 : count;
  auto g = stratum_rng(seed, reduction.vanishing.size(), sys.chart);
  std::uniform_real_distribution<double> draw(-spread, spread);
  std::vector<Eigen::VectorXd> out;
  for (std::size_t s = 0; s < n_samples; ++s) {
    Eigen::VectorXd z(static_cast<Eigen::Index>(kernel.size()));
    for (Eigen::Index c = 0; c < z.size(); ++c) z(c) = draw(g);
    const Eigen::VectorXd y = y0 + basis * z;
    Eigen::VectorXd args = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sys.n));
    for (std::size_t c = 0; c < f; ++c) args(static_cast<Eigen::Index>(free[c])) = std::exp(y(static_cast<Eigen::Index>(c)));
    out.push_back(std::move(args));
  }
  return out;
}

std::size_t rank_at(const ExponentSystem& sys, const Eigen::VectorXd& args, const Tolerances& tolerances) {
  const Eigen::VectorXd w = sys.side == Side::G ? Eigen::VectorXd(args / std::numbers::e) : args;
  return numeric_rank(jacobian(sys, w), tolerances.rank);
}

std::vector<StratumReport> analyze_vertex(const VertexChart& chart, const AffineSubspace& v, const OrthoBasis& basis,
                                          Side side, const AnalyzeOptions& options) {
  if (options.samples == 0) throw Error(ErrorCode::InvalidSubspace, "InvalidSubspace: at least one sample is needed");
  const ExponentSystem sys = build_system(chart, v, basis, side);
  const std::size_t expected = basis.normals.size();
  std::vector<StratumReport> reports;
  for (std::size_t mask = 0; mask < (std::size_t{1} << sys.n); ++mask) {
    StratumReport rep;
    rep.reduction = stratum_reduce(sys, subset_of(mask, sys.n));
    const auto points = sample_stratum(sys, rep.reduction, options.samples, options.seed ^ (mask * 0x9E3779B97F4A7C15ull),
                                       options.spread, options.tolerances, &rep.solution_dim, &rep.log_residual);
    rep.status = points.empty() ? StratumStatus::Infeasible : rep.reduction.status;
    if (!points.empty()) {
      rep.min_rank = expected;
      for (const auto& p : points) {
        const std::size_t r = rank_at(sys, p, options.tolerances);
        rep.samples.push_back({p, r});
        rep.min_rank = std::min(rep.min_rank, r);
        rep.max_rank = std::max(rep.max_rank, r);
      }
      rep.verdict = rep.min_rank == expected ? RankVerdict::FullRank : RankVerdict::Deficient;
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

SmoothnessVerdict is_embedded_toric(const DelzantPolytope& polytope, const AffineSubspace& v, CheckSides sides,
                                    const AnalyzeOptions& options) {
  if (v.dim() != polytope.dim())
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: subspace and polytope dimensions differ");
  const OrthoBasis basis = ortho_basis(v);
  SmoothnessVerdict verdict;
  verdict.expected_rank = basis.normals.size();
  verdict.side = sides == CheckSides::F ? Side::F : Side::G;
  verdict.overall = true;
  for (const auto& chart : polytope.charts()) {
    AnalyzeOptions local = options;
    local.seed = options.seed + 0x51ED27ull * (chart.vertex + 1);
    VertexReport vr{chart.vertex, analyze_vertex(chart, v, basis, verdict.side, local)};
    const ExponentSystem f_sys = build_system(chart, v, basis, Side::F);
    for (const auto& rep : vr.strata) {
      if (sides == CheckSides::Both)
        for (const auto& s : rep.samples) {
          ++verdict.compared_points;
          if (rank_at(f_sys, s.args, options.tolerances) != s.rank) ++verdict.rank_mismatches;
        }
      if (rep.verdict != RankVerdict::Deficient) continue;
      verdict.overall = false;
      if (verdict.witness) continue;
      const auto worst = std::min_element(rep.samples.begin(), rep.samples.end(),
                                          [](const RankSample& a, const RankSample& b) { return a.rank < b.rank; });
      verdict.witness = Witness{chart.vertex, rep.reduction.vanishing, worst->args, worst->rank};
    }
    verdict.vertices.push_back(std::move(vr));
  }
  return verdict;
}

std::string to_string(StratumStatus s) {
  switch (s) {
    case StratumStatus::Infeasible: return "infeasible";
    case StratumStatus::TriviallySatisfied: return "trivially-satisfied";
    case StratumStatus::Active: return "active";
  }
  return "?";
}

std::string to_string(RankVerdict v) {
  switch (v) {
    case RankVerdict::FullRank: return "full-rank";
    case RankVerdict::Deficient: return "deficient";
    case RankVerdict::Empty: return "empty";
  }
  return "?";
}

}  // namespace delzant
