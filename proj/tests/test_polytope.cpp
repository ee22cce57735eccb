#include <doctest.h>

#include <set>

#include "delzant/error.hpp"
#include "delzant/polytope.hpp"
#include "support.hpp"

using namespace delzant;
using delzant::testing::catalog;
using delzant::testing::catalog_names;

namespace {

Halfspace hs(std::initializer_list<long> normal, long offset) {
  return {PrimitiveVec::checked(make_int_vec(normal)), Rational(offset)};
}

RationalVec point(std::initializer_list<long> xs) {
  RationalVec p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

ErrorCode validate_error(std::vector<Halfspace> facets, std::string* message = nullptr) {
  try {
    DelzantPolytope::validate(std::move(facets));
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("validation unexpectedly succeeded");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("CP2 vertices") {
  const auto p = catalog("cp2");
  REQUIRE(p.vertices().size() == 3);
  std::set<RationalVec> got;
  for (const auto& v : p.vertices()) got.insert(v.position);
  CHECK(got == std::set<RationalVec>{point({0, 0}), point({2, 0}), point({0, 2})});
}

TEST_CASE("catalog polytopes validate with the expected vertex counts") {
  CHECK(catalog("square").vertices().size() == 4);
  CHECK(catalog("hirzebruch1").vertices().size() == 4);
  CHECK(catalog("cp3").vertices().size() == 4);
  const auto h = catalog("hirzebruch1");
  std::set<RationalVec> got;
  for (const auto& v : h.vertices()) got.insert(v.position);
  CHECK(got == std::set<RationalVec>{point({0, 0}), point({2, 0}), point({1, 1}), point({0, 1})});
}

TEST_CASE("validation rejects non-Delzant input") {
  std::string message;
  CHECK(validate_error({hs({1, 0}, 0), hs({0, 1}, 0), hs({-2, -1}, -2)}, &message) == ErrorCode::NotSmooth);
  CHECK(message == "NotSmooth at vertex (1,0): det 2");

  CHECK(validate_error({hs({0, 1}, 0)}) == ErrorCode::Unbounded);
  CHECK(validate_error({hs({0, 1}, 0), hs({1, 0}, -1), hs({-1, 0}, -1)}) == ErrorCode::Unbounded);
  CHECK(validate_error({hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, 1)}) == ErrorCode::Empty);
  // Square with a corner-cutting facet through (1,1): three facets meet there.
  CHECK(validate_error({hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, -1), hs({0, -1}, -1), hs({-1, -1}, -2)}) ==
        ErrorCode::NotSimple);
  CHECK(validate_error({hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -2), hs({-1, -1}, -5)}) ==
        ErrorCode::DuplicateFacet);
  CHECK(validate_error({hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, -1}, -2), hs({-1, 0}, -5)}) ==
        ErrorCode::RedundantFacet);
}

TEST_CASE("chart identities hold on the catalog") {
  for (const auto& name : catalog_names()) {
    const auto p = catalog(name);
    const std::size_t n = p.dim();
    for (const auto& c : p.charts()) {
      CHECK(c.directions * c.normals.transpose() == IntMatrix::identity(n));
      CHECK(determinant(c.directions) == 1);
      CHECK(determinant(c.normals) == 1);
      for (std::size_t j = 0; j < p.facets().size(); ++j) {
        Rational l = -p.facets()[j].offset;
        for (std::size_t i = 0; i < n; ++i) l += Rational(p.facets()[j].normal[i]) * c.position[i];
        const bool incident = std::find(c.facets.begin(), c.facets.end(), j) != c.facets.end();
        CHECK((incident ? l == 0 : l > 0));
      }
    }
  }
}

TEST_CASE("CP2 chart matrices match the expected set") {
  const auto p = catalog("cp2");
  std::set<std::string> got;
  for (const auto& c : p.charts()) got.insert(to_string(unimodular_inverse(c.directions.transpose())));
  const std::set<std::string> expected = {
      to_string(IntMatrix::identity(2)),
      to_string(IntMatrix::from_rows({{-1, 1}, {-1, 0}})),
      to_string(IntMatrix::from_rows({{0, -1}, {1, -1}})),
  };
  CHECK(got == expected);
  CHECK(to_string(p.chart(0).normals) == to_string(IntMatrix::identity(2)));
}

TEST_CASE("unit square charts use the incident normals with det +1") {
  const auto p = catalog("square");
  for (const auto& c : p.charts()) {
    if (c.position == point({1, 1})) CHECK(c.normals == IntMatrix::from_rows({{-1, 0}, {0, -1}}));
    if (c.position == point({1, 0})) CHECK(c.normals == IntMatrix::from_rows({{0, -1}, {1, 0}}));
    CHECK(determinant(c.normals) == 1);
    CHECK(determinant(c.directions) == 1);
  }
}

TEST_CASE("transition cocycle") {
  for (const auto& name : catalog_names()) {
    const auto p = catalog(name);
    const std::size_t m = p.vertices().size();
    for (std::size_t a = 0; a < m; ++a) {
      CHECK(transition(p, a, a) == IntMatrix::identity(p.dim()));
      for (std::size_t b = 0; b < m; ++b) {
        CHECK(determinant(transition(p, a, b)) == 1);
        for (std::size_t c = 0; c < m; ++c) CHECK(transition(p, a, b) * transition(p, b, c) == transition(p, a, c));
      }
    }
  }
}

TEST_CASE("facet values and location") {
  const auto p = catalog("cp2");
  const std::vector<double> inner{1.0, 0.5};
  const auto l = facet_values(p, inner);
  CHECK(l[0] == doctest::Approx(1.0));
  CHECK(l[1] == doctest::Approx(0.5));
  CHECK(l[2] == doctest::Approx(0.5));
  CHECK(describe(locate(p, inner)) == "interior");

  const std::vector<double> origin{0.0, 0.0};
  CHECK(facet_values(p, origin)[2] == doctest::Approx(2.0));
  const auto at_origin = locate(p, origin);
  CHECK(at_origin.kind == LocationKind::Vertex);
  CHECK(p.vertices()[*at_origin.vertex].position == point({0, 0}));

  const std::vector<double> outside{3.0, 0.0};
  CHECK(facet_values(p, outside)[2] == doctest::Approx(-1.0));
  CHECK(locate(p, outside).kind == LocationKind::Outside);

  const std::vector<double> edge{1.0, 0.0};
  CHECK(describe(locate(p, edge)) == "facet:1");
}
