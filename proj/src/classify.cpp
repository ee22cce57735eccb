#include "delzant/classify.hpp"

#include <algorithm>
#include <map>

#include "delzant/error.hpp"

namespace delzant {

namespace {

bool matches_2d(const BigInt& a, const BigInt& b) {
  return (a == 1 && b >= 0) || (b == 1 && a >= 0) || (a >= 0 && b < 0);
}

bool matches_3d(const IntVec& q, bool strict_all_positive) {
  const bool all_positive = strict_all_positive ? (q[0] > 0 && q[1] > 0 && q[2] > 0)
                                                : (q[0] >= 0 && q[1] >= 0 && q[2] >= 0);
  if (all_positive) return true;
  for (std::size_t i = 0; i < 3; ++i) {
    if (q[i] != -1) continue;
    bool rest = true;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i && q[j] < 0) rest = false;
    if (rest) return true;
  }
  return false;
}

IntVec negate(IntVec v) {
  for (auto& e : v) e = -e;
  return v;
}

bool up_to_sign(const IntVec& v, const auto& pred) { return pred(v) || pred(negate(v)); }

bool all_strata_full(const std::vector<StratumReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const StratumReport& r) { return r.verdict == RankVerdict::Deficient; });
}

}  // namespace

bool closed_form_member_2d(const IntVec& p) {
  if (p.size() != 2) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: expected a vector in Z^2");
  return up_to_sign(p, [](const IntVec& v) { return matches_2d(v[0], v[1]); });
}

bool closed_form_member_3d(const IntVec& q) {
  if (q.size() != 3) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: expected a vector in Z^3");
  return up_to_sign(q, [](const IntVec& v) { return matches_3d(v, true); });
}

bool corrected_member_3d(const IntVec& q) {
  if (q.size() != 3) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: expected a vector in Z^3");
  return up_to_sign(q, [](const IntVec& v) { return matches_3d(v, false); });
}

LocalModelResult local_model_member(const AffineSubspace& v, const AnalyzeOptions& options) {
  const std::size_t n = v.dim();
  const AffineSubspace local =
      v.k() + 1 == n ? v.with_anchor(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n))) : v;
  const OrthoBasis basis = ortho_basis(local);
  LocalModelResult out;
  out.full_rank = all_strata_full(analyze_vertex(orthant_chart(n), local, basis, Side::G, options));
  if (n == 2 && v.k() == 1) out.closed_form = closed_form_member_2d(v.slopes()[0].entries());
  if (n == 3 && v.k() == 2) out.closed_form = closed_form_member_3d(basis.normals[0].entries());
  return out;
}

PrimitiveVec transport_slope(const VertexChart& chart, const IntVec& p) { return primitive_part(chart.normals * p); }

PrimitiveVec pullback_slope(const VertexChart& chart, const IntVec& p) {
  return primitive_part(chart.directions.transpose() * p);
}

std::vector<PrimitiveVec> primitive_classes(std::size_t n, long box) {
  std::vector<PrimitiveVec> out;
  IntVec v(n, BigInt(-box));
  for (;;) {
    if (!is_zero(v) && content(v) == 1) {
      const PrimitiveVec p = primitive_part(v);
      if (p.entries() == v) out.push_back(p);
    }
    std::size_t i = n;
    while (i-- > 0) {
      if (v[i] < box) {
        ++v[i];
        break;
      }
      v[i] = -box;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffineSubspace hyperplane(const IntVec& normal) {
  const auto kernel = integer_kernel_basis(IntMatrix::from_rows(std::vector<IntVec>{normal}));
  std::vector<IntVec> slopes;
  for (const auto& p : kernel) slopes.push_back(p.entries());
  return AffineSubspace::make(slopes);
}

ClassificationSet classify_codim1(const DelzantPolytope& polytope, long box, const AnalyzeOptions& options) {
  const std::size_t n = polytope.dim();
  if (n < 2 || box < 1) throw Error(ErrorCode::InvalidSubspace, "InvalidSubspace: need n >= 2 and box >= 1");
  ClassificationSet out;
  out.dim = n;
  out.box = static_cast<std::size_t>(box);
  out.by_normal = n >= 3;
  out.per_vertex.resize(polytope.charts().size());

  std::map<IntVec, bool> cache;
  auto member = [&](const IntVec& local) {
    auto it = cache.find(local);
    if (it != cache.end()) return it->second;
    const AffineSubspace v = n == 2 ? AffineSubspace::make({local}) : hyperplane(local);
    const bool full = local_model_member(v, options).full_rank;
    cache.emplace(local, full);
    return full;
  };

  const auto candidates = primitive_classes(n, box);
  out.candidates = candidates.size();
  for (const auto& c : candidates) {
    bool everywhere = true;
    for (const auto& chart : polytope.charts()) {
      // A normal pulls back through U^t where a direction pulls back through Q^t.
      const PrimitiveVec local =
          n == 2 ? pullback_slope(chart, c.entries()) : primitive_part(chart.normals.transpose() * c.entries());
      if (member(local.entries())) out.per_vertex[chart.vertex].push_back(c);
      else everywhere = false;
    }
    if (everywhere) out.members.push_back(c);
  }
  return out;
}

}  // namespace delzant
