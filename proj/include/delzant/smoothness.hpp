#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "delzant/numeric.hpp"
#include "delzant/polytope.hpp"
#include "delzant/subspace.hpp"

namespace delzant {

enum class EquationStatus { Trivial, Infeasible, Active };
enum class StratumStatus { Infeasible, TriviallySatisfied, Active };
enum class RankVerdict { FullRank, Deficient, Empty };

/// Combinatorial classification of a system on the stratum where exactly the
/// coordinates in `vanishing` are zero.
struct StratumReduction {
  std::vector<std::size_t> vanishing;
  std::vector<EquationStatus> equations;
  StratumStatus status = StratumStatus::Active;
  std::vector<std::size_t> active;  // indices of active equations
};

StratumReduction stratum_reduce(const ExponentSystem& sys, const std::vector<std::size_t>& vanishing);

struct RankSample {
  Eigen::VectorXd args;  // monomial arguments: z for side F, e * L for side G
  std::size_t rank = 0;
};

struct StratumReport {
  StratumReduction reduction;
  StratumStatus status = StratumStatus::Active;  // Infeasible also when the log-linear solve fails
  std::size_t solution_dim = 0;                   // dimension of the stratum's solution set
  double log_residual = 0;
  std::vector<RankSample> samples;
  std::size_t min_rank = 0;
  std::size_t max_rank = 0;
  RankVerdict verdict = RankVerdict::Empty;
};

struct AnalyzeOptions {
  std::size_t samples = 8;
  std::uint64_t seed = 1;
  double spread = 2.0;  // free log-coordinates are drawn from [-spread, spread]
  Tolerances tolerances;
};

/// All 2^n strata of one chart, in increasing bitmask order of `vanishing`.
std::vector<StratumReport> analyze_vertex(const VertexChart& chart, const AffineSubspace& v, const OrthoBasis& basis,
                                          Side side, const AnalyzeOptions& options = {});

/// Points in argument space e * L (equivalently |z|) satisfying the system,
/// from the exact stratum solution. Empty when the stratum is infeasible.
std::vector<Eigen::VectorXd> sample_stratum(const ExponentSystem& sys, const StratumReduction& reduction,
                                            std::size_t count, std::uint64_t seed, double spread,
                                            const Tolerances& tolerances, std::size_t* solution_dim = nullptr,
                                            double* log_residual = nullptr);

/// Rank of the Jacobian of `sys` at monomial arguments `args`.
std::size_t rank_at(const ExponentSystem& sys, const Eigen::VectorXd& args, const Tolerances& tolerances = {});

struct Witness {
  std::size_t vertex = 0;
  std::vector<std::size_t> vanishing;
  Eigen::VectorXd args;
  std::size_t rank = 0;
};

struct VertexReport {
  std::size_t vertex = 0;
  std::vector<StratumReport> strata;
};

struct SmoothnessVerdict {
  std::size_t expected_rank = 0;  // n - k
  Side side = Side::G;
  std::vector<VertexReport> vertices;
  bool overall = false;
  std::optional<Witness> witness;
  std::size_t compared_points = 0;  // f/g cross-check
  std::size_t rank_mismatches = 0;
};

enum class CheckSides { F, G, Both };

/// Runs the stratified analysis at every vertex. With Both the verdict comes
/// from side G, and side F is evaluated at the same points (z_i = e L_i) with
/// every rank disagreement counted.
SmoothnessVerdict is_embedded_toric(const DelzantPolytope& polytope, const AffineSubspace& v,
                                    CheckSides sides = CheckSides::Both, const AnalyzeOptions& options = {});

std::string to_string(StratumStatus s);
std::string to_string(RankVerdict v);

}  // namespace delzant
