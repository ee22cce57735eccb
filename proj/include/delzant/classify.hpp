#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "delzant/lattice.hpp"
#include "delzant/polytope.hpp"
#include "delzant/smoothness.hpp"
#include "delzant/subspace.hpp"

namespace delzant {

struct LocalModelResult {
  bool full_rank = false;             // stratified rank analysis on the orthant
  std::optional<bool> closed_form;    // set for (n, k) = (2, 1) and (3, 2)
};

/// Membership of V in the standard local model: g^O has full rank n-k on every
/// stratum of the orthant. For k = n-1 the anchor is replaced by 0.
LocalModelResult local_model_member(const AffineSubspace& v, const AnalyzeOptions& options = {});

/// The closed-form sets for n = 2, k = 1, in terms of the direction p:
/// +-p in {(1,b) : b >= 0} u {(b,1) : b >= 0} u {(c1,c2) : c1 >= 0, c2 < 0}.
bool closed_form_member_2d(const IntVec& direction);

/// The closed-form sets for n = 3, k = 2, in terms of the normal q of V:
/// +-q in B+++ u B-++ u B+-+ u B++-, with B+++ = {all entries > 0} and
/// B-++ = {(-1, b2, b3) : b2, b3 >= 0} (and likewise for the other two).
bool closed_form_member_3d(const IntVec& normal);

/// B+++ with >= in place of >, which matches the rank analysis.
bool corrected_member_3d(const IntVec& normal);

/// Local-model slope -> chart slope: primitive_part(U p), where U = t(Q)^{-1}.
PrimitiveVec transport_slope(const VertexChart& chart, const IntVec& p);

/// Chart slope -> local-model slope: primitive_part(t(Q) p). A slope p lies in
/// V_lambda iff pullback_slope(chart, p) lies in the local model.
PrimitiveVec pullback_slope(const VertexChart& chart, const IntVec& p);

struct ClassificationSet {
  std::size_t dim = 0;
  std::size_t box = 0;
  /// For n = 2 members are directions p; for n >= 3 they are normals q of the
  /// hyperplane V = q^perp.
  bool by_normal = false;
  std::vector<PrimitiveVec> members;                    // sorted canonical representatives
  std::vector<std::vector<PrimitiveVec>> per_vertex;    // V_lambda within the box
  std::size_t candidates = 0;
};

/// Canonical primitive vectors (first nonzero entry positive) with max-norm <= box.
std::vector<PrimitiveVec> primitive_classes(std::size_t n, long box);

/// Hyperplane spanned by the integer kernel of q (n >= 2).
AffineSubspace hyperplane(const IntVec& normal);

ClassificationSet classify_codim1(const DelzantPolytope& polytope, long box, const AnalyzeOptions& options = {});

}  // namespace delzant
