#include "delzant/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "delzant/error.hpp"

namespace delzant {

namespace {

// Advances `idx` to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Solves A x = b exactly; nullopt when A is singular.
std::optional<RationalVec> solve_exact(const IntMatrix& a, const RationalVec& b) {
  const std::size_t n = a.rows();
  std::vector<RationalVec> m(n, RationalVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  RationalVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

Rational facet_value(const Halfspace& h, const RationalVec& xi) {
  Rational s = -h.offset;
  for (std::size_t i = 0; i < xi.size(); ++i) s += Rational(h.normal[i]) * xi[i];
  return s;
}

bool recession_cone_trivial(const std::vector<Halfspace>& facets, std::size_t n) {
  std::vector<IntVec> rows;
  for (const auto& f : facets) rows.push_back(f.normal.entries());
  if (rank(IntMatrix::from_rows(rows)) < n) return false;
  // A pointed cone {y : <u_j, y> >= 0} is nontrivial iff one of its extreme
  // rays is, and every extreme ray is cut out by n-1 independent equalities.
  std::vector<std::size_t> idx(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) idx[i] = i;
  do {
    IntMatrix sub(n - 1, n);
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sub(r, c) = rows[idx[r]][c];
    const auto kernel = integer_kernel_basis(sub);
    if (kernel.size() != 1) continue;
    for (int sign : {1, -1}) {
      bool inside = true;
      for (const auto& u : rows)
        if (sign * dot(u, kernel[0].entries()) < 0) {
          inside = false;
          break;
        }
      if (inside) return false;
    }
  } while (n > 1 && next_combination(idx, facets.size()));
  return true;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::string format_point(const RationalVec& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += rational_str(p[i]);
  }
  return s + ")";
}

VertexChart orthant_chart(std::size_t n) {
  VertexChart c;
  c.position.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) c.facets.push_back(i);
  c.normals = IntMatrix::identity(n);
  c.directions = IntMatrix::identity(n);
  c.offsets.assign(n, Rational(0));
  return c;
}

DelzantPolytope DelzantPolytope::validate(std::vector<Halfspace> facets) {
  if (facets.empty()) throw Error(ErrorCode::Empty, "Empty: no facets given");
  const std::size_t n = facets.front().normal.size();
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: dimension must be at least 2");
  for (std::size_t j = 0; j < facets.size(); ++j) {
    if (facets[j].normal.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: facet " + std::to_string(j) + " has a normal of length " +
                                                    std::to_string(facets[j].normal.size()) + ", expected " +
                                                    std::to_string(n));
    for (std::size_t i = 0; i < j; ++i)
      if (facets[i].normal == facets[j].normal)
        throw Error(ErrorCode::DuplicateFacet, "DuplicateFacet: facets " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " share the normal " +
                                                   to_string(facets[j].normal.entries()));
  }
  const std::size_t d = facets.size();
  if (d < n + 1 || !recession_cone_trivial(facets, n))
    throw Error(ErrorCode::Unbounded, "Unbounded: the recession cone is nontrivial");

  DelzantPolytope out;
  out.dim_ = n;

  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  do {
    IntMatrix a(n, n);
    RationalVec b(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = facets[idx[r]].normal[c];
      b[r] = facets[idx[r]].offset;
    }
    auto x = solve_exact(a, b);
    if (!x) continue;
    std::vector<std::size_t> tight;
    bool feasible = true;
    for (std::size_t j = 0; j < d && feasible; ++j) {
      const Rational l = facet_value(facets[j], *x);
      if (l < 0) feasible = false;
      if (l == 0) tight.push_back(j);
    }
    if (!feasible) continue;
    const bool seen = std::any_of(out.vertices_.begin(), out.vertices_.end(),
                                  [&](const Vertex& v) { return v.position == *x; });
    if (seen) continue;
    if (tight.size() > n)
      throw Error(ErrorCode::NotSimple, "NotSimple at vertex " + format_point(*x) + ": on " +
                                            std::to_string(tight.size()) + " facets");
    out.vertices_.push_back({std::move(*x), std::move(tight)});
  } while (next_combination(idx, d));

  if (out.vertices_.empty()) throw Error(ErrorCode::Empty, "Empty: the inequalities have no common point");

  for (const auto& v : out.vertices_) {
    std::vector<IntVec> cols;
    for (std::size_t j : v.facets) cols.push_back(facets[j].normal.entries());
    const BigInt det = determinant(IntMatrix::from_columns(cols));
    if (det != 1 && det != -1) {
      const BigInt mag = det < 0 ? BigInt(-det) : det;
      throw Error(ErrorCode::NotSmooth, "NotSmooth at vertex " + format_point(v.position) + ": det " + mag.str());
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    const auto count = std::count_if(out.vertices_.begin(), out.vertices_.end(), [&](const Vertex& v) {
      return std::find(v.facets.begin(), v.facets.end(), j) != v.facets.end();
    });
    if (static_cast<std::size_t>(count) < n)
      throw Error(ErrorCode::RedundantFacet,
                  "RedundantFacet: inequality " + std::to_string(j) + " does not support a facet");
  }

  out.facets_ = std::move(facets);
  out.normal_rows_.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n));
  out.offset_values_.resize(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i)
      out.normal_rows_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          static_cast<double>(out.facets_[j].normal[i]);
    out.offset_values_(static_cast<Eigen::Index>(j)) = out.facets_[j].offset.convert_to<double>();
  }
  for (std::size_t v = 0; v < out.vertices_.size(); ++v) out.charts_.push_back(vertex_chart(out, v));
  return out;
}

const VertexChart& DelzantPolytope::chart(std::size_t vertex) const {
  if (vertex >= charts_.size())
    throw Error(ErrorCode::DimensionMismatch, "no vertex with index " + std::to_string(vertex));
  return charts_[vertex];
}

Eigen::VectorXd DelzantPolytope::vertex_position(std::size_t vertex) const {
  const auto& p = vertices_.at(vertex).position;
  Eigen::VectorXd x(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) x(static_cast<Eigen::Index>(i)) = p[i].convert_to<double>();
  return x;
}

VertexChart vertex_chart(const DelzantPolytope& polytope, std::size_t vertex) {
  const Vertex& v = polytope.vertices().at(vertex);
  VertexChart c;
  c.vertex = vertex;
  c.position = v.position;
  c.facets = v.facets;
  std::vector<IntVec> cols;
  for (std::size_t j : c.facets) cols.push_back(polytope.facets()[j].normal.entries());
  IntMatrix u = IntMatrix::from_columns(cols);
  if (determinant(u) < 0) {
    std::swap(c.facets[0], c.facets[1]);
    u.swap_columns(0, 1);
  }
  c.normals = u;
  c.directions = unimodular_inverse(u.transpose());
  for (std::size_t j : c.facets) c.offsets.push_back(polytope.facets()[j].offset);
  return c;
}

IntMatrix transition(const DelzantPolytope& polytope, std::size_t lambda, std::size_t mu) {
  // Q^{-1} = U^t because Q U^t = identity.
  return polytope.chart(lambda).normals.transpose() * polytope.chart(mu).directions;
}

Eigen::VectorXd facet_values(const DelzantPolytope& polytope, const Eigen::VectorXd& xi) {
  return polytope.normal_rows() * xi - polytope.offset_values();
}

std::vector<double> facet_values(const DelzantPolytope& polytope, std::span<const double> xi) {
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(xi.data(), static_cast<Eigen::Index>(xi.size()));
  const Eigen::VectorXd l = facet_values(polytope, x);
  return {l.data(), l.data() + l.size()};
}

Location locate(const DelzantPolytope& polytope, std::span<const double> xi, double tolerance) {
  const auto l = facet_values(polytope, xi);
  Location loc;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (l[j] < -tolerance) {
      loc.kind = LocationKind::Outside;
      loc.facets.clear();
      return loc;
    }
    if (std::abs(l[j]) <= tolerance) loc.facets.push_back(j);
  }
  if (loc.facets.empty()) return loc;
  loc.kind = LocationKind::Boundary;
  for (std::size_t v = 0; v < polytope.vertices().size(); ++v)
    if (polytope.vertices()[v].facets == loc.facets) {
      loc.kind = LocationKind::Vertex;
      loc.vertex = v;
    }
  return loc;
}

std::string describe(const Location& location) {
  switch (location.kind) {
    case LocationKind::Interior: return "interior";
    case LocationKind::Outside: return "outside";
    case LocationKind::Vertex: return "vertex:" + std::to_string(*location.vertex);
    case LocationKind::Boundary: break;
  }
  std::string s = location.facets.size() == 1 ? "facet:" : "face:";
  for (std::size_t i = 0; i < location.facets.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(location.facets[i]);
  }
  return s;
}

}  // namespace delzant
