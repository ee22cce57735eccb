#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "delzant/error.hpp"
#include "delzant/lattice.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace delzant;
using delzant::testing::random_matrix;
using delzant::testing::random_sl;
using namespace delzant::testing;

namespace {

void check_kernel(const IntMatrix& m) {
  const auto basis = integer_kernel_basis(m);
  const Small mm = to_small(m);
  REQUIRE(basis.size() == m.cols() - minor_rank(mm));
  for (const auto& q : basis) {
    CHECK(content(q.entries()) == 1);
    CHECK(is_zero(m * q.entries()));
  }
  const Small b = rows_of(basis);
  CHECK(minor_rank(b) == basis.size());
  CHECK(saturated(b));
}

}  // namespace

TEST_CASE("primitive_part divides by the gcd and fixes the sign") {
  CHECK(primitive_part(make_int_vec({2, 4})).entries() == make_int_vec({1, 2}));
  CHECK(primitive_part(make_int_vec({1, 0})).entries() == make_int_vec({1, 0}));
  CHECK(primitive_part(make_int_vec({-3, 6, -9})).entries() == make_int_vec({1, -2, 3}));
  CHECK(primitive_part(make_int_vec({0, -5})).entries() == make_int_vec({0, 1}));
  try {
    primitive_part(make_int_vec({0, 0}));
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("PrimitiveVec::checked keeps the sign and rejects non-primitive input") {
  CHECK(PrimitiveVec::checked(make_int_vec({-1, -1})).entries() == make_int_vec({-1, -1}));
  CHECK_THROWS_AS(PrimitiveVec::checked(make_int_vec({2, 4})), Error);
  CHECK_THROWS_AS(PrimitiveVec::checked(make_int_vec({0, 0, 0})), Error);
}

TEST_CASE("integer_kernel_basis examples") {
  auto k = integer_kernel_basis(IntMatrix::from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0].entries() == make_int_vec({1, -1}));

  k = integer_kernel_basis(IntMatrix::from_rows({{2, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0].entries() == make_int_vec({1, -2}));

  k = integer_kernel_basis(IntMatrix::from_rows({{1, 1, 1}}));
  REQUIRE(k.size() == 2);
  const Small expected = {{1, -1, 0}, {0, 1, -1}};
  const Small got = rows_of(k);
  CHECK(saturated(got));
  for (const auto& row : expected) CHECK(in_rational_span(got, row));
  for (const auto& row : got) CHECK(in_rational_span(expected, row));

  CHECK(integer_kernel_basis(IntMatrix::identity(3)).empty());
  CHECK(integer_kernel_basis(IntMatrix(0, 2)).size() == 2);
}

TEST_CASE("integer_kernel_basis against exhaustive enumeration") {
  auto g = testing::rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 2;
    const std::size_t cols = trial % 2 ? 3 : 2;
    const IntMatrix m = random_matrix(g, rows, cols, 5);
    check_kernel(m);
    const Small basis = rows_of(integer_kernel_basis(m));
    const long bound = 6;
    std::vector<long long> v(cols);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == cols) {
        IntVec iv(v.begin(), v.end());
        if (is_zero(m * iv)) CHECK(in_rational_span(basis, v));
        return;
      }
      for (long x = -bound; x <= bound; ++x) {
        v[i] = x;
        walk(i + 1);
      }
    };
    walk(0);
  }
}

TEST_CASE("integer_kernel_basis is complete and saturated on random matrices") {
  auto g = testing::rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cols = static_cast<std::size_t>(testing::uniform_int(g, 1, 4));
    const auto rows = static_cast<std::size_t>(testing::uniform_int(g, 1, 4));
    check_kernel(random_matrix(g, rows, cols, 9));
  }
}

TEST_CASE("unimodular_inverse examples and errors") {
  CHECK(unimodular_inverse(IntMatrix::identity(3)) == IntMatrix::identity(3));
  CHECK(unimodular_inverse(IntMatrix::from_rows({{-1, -1}, {1, 0}})) == IntMatrix::from_rows({{0, 1}, {-1, -1}}));
  CHECK(unimodular_inverse(IntMatrix::from_rows({{2, 1}, {1, 1}})) == IntMatrix::from_rows({{1, -1}, {-1, 2}}));
  try {
    unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}}));
    FAIL("expected NotUnimodular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnimodular);
  }
}

TEST_CASE("unimodular_inverse is a two-sided inverse on random SL(n,Z) products") {
  auto g = testing::rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(g, 1, 5));
    const IntMatrix m = random_sl(g, n, 12);
    const IntMatrix inv = unimodular_inverse(m);
    CHECK(m * inv == IntMatrix::identity(n));
    CHECK(inv * m == IntMatrix::identity(n));
  }
}

TEST_CASE("determinant matches the Leibniz expansion") {
  auto g = testing::rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(g, 1, 5));
    const IntMatrix m = random_matrix(g, n, n, 9);
    CHECK(determinant(m) == leibniz(to_small(m)));
  }
}

TEST_CASE("hermite_smith examples") {
  auto hs = hermite_smith(IntMatrix::identity(2));
  CHECK(hs.hermite.hermite == IntMatrix::identity(2));
  CHECK(hs.invariant_factors == std::vector<BigInt>{1, 1});

  hs = hermite_smith(IntMatrix::from_rows({{2, 4}}));
  CHECK(hs.hermite.hermite == IntMatrix::from_rows({{2, 4}}));
  CHECK(hs.invariant_factors == std::vector<BigInt>{2});

  hs = hermite_smith(IntMatrix::from_rows({{1, 1}, {0, 2}}));
  CHECK(hs.invariant_factors == std::vector<BigInt>{1, 2});
}

TEST_CASE("Hermite form shape and Smith invariants on random matrices") {
  auto g = testing::rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(testing::uniform_int(g, 1, 4));
    const auto cols = static_cast<std::size_t>(testing::uniform_int(g, 1, 4));
    const IntMatrix m = random_matrix(g, rows, cols, 9);
    const HermiteForm hf = hermite_form(m);
    CHECK(hf.transform * m == hf.hermite);
    const BigInt det = determinant(hf.transform);
    CHECK((det == 1 || det == -1));

    std::size_t last_pivot = 0;
    bool first = true;
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t c = 0;
      while (c < cols && hf.hermite(r, c) == 0) ++c;
      if (r >= hf.rank) {
        CHECK(c == cols);
        continue;
      }
      REQUIRE(c < cols);
      if (!first) CHECK(c > last_pivot);
      first = false;
      last_pivot = c;
      CHECK(hf.hermite(r, c) > 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(hf.hermite(above, c) >= 0);
        CHECK(hf.hermite(above, c) < hf.hermite(r, c));
      }
    }

    const auto inv = smith_invariants(m);
    const auto oracle = determinantal_invariants(to_small(m));
    REQUIRE(inv.size() == oracle.size());
    for (std::size_t i = 0; i < inv.size(); ++i) CHECK(inv[i] == oracle[i]);
  }
}
