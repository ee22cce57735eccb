#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "delzant/io.hpp"
#include "delzant/lattice.hpp"
#include "delzant/polytope.hpp"
#include "delzant/subspace.hpp"

namespace delzant::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long uniform_int(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline double uniform_real(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline IntMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform_int(g, -bound, bound);
  return m;
}

/// Product of `steps` random elementary and signed-swap matrices in SL(n, Z).
inline IntMatrix random_sl(std::mt19937_64& g, std::size_t n, int steps) {
  IntMatrix m = IntMatrix::identity(n);
  if (n < 2) return m;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform_int(g, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform_int(g, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    IntMatrix e = IntMatrix::identity(n);
    if (uniform_int(g, 0, 3) == 0) {
      e(i, i) = 0;
      e(j, j) = 0;
      e(i, j) = 1;
      e(j, i) = -1;
    } else {
      e(i, j) = uniform_int(g, -2, 2);
    }
    m = e * m;
  }
  return m;
}

inline Eigen::VectorXd random_real(std::mt19937_64& g, std::size_t size, double lo, double hi) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(size));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = uniform_real(g, lo, hi);
  return v;
}

/// Random k-dimensional rational subspace of R^n with slope entries in
/// [-bound, bound] and anchor entries in [-1, 1].
inline AffineSubspace random_subspace(std::mt19937_64& g, std::size_t n, std::size_t k, long bound = 3) {
  for (;;) {
    std::vector<IntVec> slopes;
    for (std::size_t l = 0; l < k; ++l) {
      IntVec p(n);
      for (auto& e : p) e = uniform_int(g, -bound, bound);
      slopes.push_back(p);
    }
    bool degenerate = false;
    for (const auto& p : slopes) degenerate |= is_zero(p);
    if (degenerate || rank(IntMatrix::from_rows(slopes)) != k) continue;
    return AffineSubspace::make(slopes, random_real(g, n, -1, 1));
  }
}

std::vector<std::string> catalog_names();
DelzantPolytope catalog(const std::string& name);

}  // namespace delzant::testing
