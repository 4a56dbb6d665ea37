#include "mvv/matrix.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "mvv/prng.hpp"

namespace {

using mvv::matrix;
using mvv::rational;

matrix random_int_matrix(std::size_t rows, std::size_t cols, mvv::prng& rng, long bound) {
  matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.entry(bound);
  return m;
}

// Independent oracle: plain rational Gaussian elimination with a seeded
// random choice among the nonzero pivot candidates in each column.
std::size_t rank_random_pivot(matrix m, std::uint64_t seed) {
  mvv::prng rng(seed);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::vector<std::size_t> candidates;
    for (std::size_t r = lead; r < rows; ++r)
      if (m(r, c) != 0) candidates.push_back(r);
    if (candidates.empty()) continue;
    const std::size_t pick = candidates[rng.below(candidates.size())];
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(lead, j), m(pick, j));
    for (std::size_t r = lead + 1; r < rows; ++r) {
      if (m(r, c) == 0) continue;
      const rational f = m(r, c) / m(lead, c);
      for (std::size_t j = c; j < cols; ++j) m(r, j) -= f * m(lead, j);
    }
    ++lead;
  }
  return lead;
}

TEST(MatrixRank, ZeroMatrix) { EXPECT_EQ(mvv::rank(matrix(3, 3)), 0u); }

TEST(MatrixRank, Identity) { EXPECT_EQ(mvv::rank(matrix::identity(4)), 4u); }

TEST(MatrixRank, AgreesWithRandomizedPivotElimination) {
  mvv::prng rng(42);
  for (int i = 0; i < 200; ++i) {
    matrix m = random_int_matrix(5, 7, rng, 9);
    const std::size_t expected = rank_random_pivot(m, rng.next());
    EXPECT_EQ(mvv::rank(m), expected);
    EXPECT_EQ(mvv::rank(m.transposed()), expected);
  }
}

TEST(MatrixRank, PivotOrderIndependent) {
  mvv::prng rng(43);
  for (int i = 0; i < 200; ++i) {
    // low-rank products make rank-deficient inputs likely
    matrix a = random_int_matrix(4, 2 + rng.below(3), rng, 5);
    matrix b = random_int_matrix(a.cols(), 6, rng, 5);
    matrix m = a * b;
    const std::size_t base = mvv::rank(m);
    // random row permutation
    matrix p(m.rows(), m.rows());
    std::vector<std::size_t> perm(m.rows());
    for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
    for (std::size_t j = perm.size(); j > 1; --j)
      std::swap(perm[j - 1], perm[rng.below(j)]);
    for (std::size_t j = 0; j < perm.size(); ++j) p(j, perm[j]) = 1;
    EXPECT_EQ(mvv::rank(p * m), base);
    EXPECT_EQ(rank_random_pivot(m, rng.next()), base);
  }
}

TEST(MatrixRank, RationalEntries) {
  matrix m(2, 3);
  m(0, 0) = mvv::make_rational(1, 2);
  m(0, 1) = mvv::make_rational(1, 3);
  m(0, 2) = mvv::make_rational(1, 6);
  m(1, 0) = mvv::make_rational(3, 2);
  m(1, 1) = 1;
  m(1, 2) = mvv::make_rational(1, 2);
  EXPECT_EQ(mvv::rank(m), 1u);  // second row is 3x the first
}

TEST(MatrixRref, CanonicalAndIdempotent) {
  mvv::prng rng(44);
  for (int i = 0; i < 100; ++i) {
    matrix m = random_int_matrix(3, 5, rng, 7);
    matrix r = mvv::rref(m);
    EXPECT_EQ(mvv::rref(r), r);
    EXPECT_EQ(mvv::rank(r), mvv::rank(m));
    // row space preserved: stacking changes nothing
    EXPECT_EQ(mvv::rank(matrix::vstack(m, r)), mvv::rank(m));
  }
}

TEST(MatrixKernel, SolvesAndComplements) {
  mvv::prng rng(45);
  for (int i = 0; i < 100; ++i) {
    matrix m = random_int_matrix(2 + rng.below(3), 4 + rng.below(3), rng, 7);
    matrix k = mvv::kernel_basis(m);
    EXPECT_EQ(k.rows() + mvv::rank(m), m.cols());
    if (k.rows() > 0) {
      matrix products = m * k.transposed();
      for (std::size_t r = 0; r < products.rows(); ++r)
        for (std::size_t c = 0; c < products.cols(); ++c) EXPECT_EQ(products(r, c), 0);
    }
    EXPECT_EQ(mvv::rank(k), k.rows());
  }
}

TEST(MatrixKernel, EmptyMatrixHasFullKernel) {
  matrix none(0, 5);
  EXPECT_EQ(mvv::kernel_basis(none), matrix::identity(5));
}

}  // namespace
