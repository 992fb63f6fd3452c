#include <gtest/gtest.h>

#include "injdim/linalg.hpp"
#include "oracles.hpp"

using namespace injdim;

namespace {

Mat M(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  return Mat::from_rows(PrimeField(p), rows);
}

}  // namespace

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(4), Error);
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_NO_THROW(PrimeField(65521));
}

TEST(PrimeField, InverseAndReduce) {
  PrimeField f(7);
  for (Residue a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.reduce(15), 1u);
}

TEST(Rref, Identity) {
  auto r = rref(Mat::identity(PrimeField(2), 2));
  EXPECT_EQ(r.reduced, Mat::identity(PrimeField(2), 2));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, Zero) {
  Mat z(PrimeField(3), 3, 2);
  auto r = rref(z);
  EXPECT_EQ(r.reduced, z);
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, AllOnesOverGF2) {
  auto r = rref(M(2, {{1, 1}, {1, 1}}));
  EXPECT_EQ(r.reduced, M(2, {{1, 1}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, EmptyShapes) {
  EXPECT_EQ(rref(Mat(PrimeField(5), 0, 4)).rank, 0u);
  EXPECT_EQ(rref(Mat(PrimeField(5), 4, 0)).rank, 0u);
  EXPECT_EQ(kernel_basis(Mat(PrimeField(5), 0, 3)).cols(), 3u);
  EXPECT_EQ(kernel_basis(Mat(PrimeField(5), 3, 0)).cols(), 0u);
}

// Covers the bit-packed GF(2) path (wide matrices span several words) and
// the generic path against textbook elimination.
TEST(Rref, MatchesNaiveElimination) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 12, c = 1 + rng() % (trial % 3 == 0 ? 150 : 12);
      Mat a = oracle::random_mat(p, r, c, rng, static_cast<int>(rng() % 80));
      auto got = rref(a);
      auto [want, piv] = oracle::naive_rref(oracle::rows_of(a), p);
      EXPECT_EQ(oracle::rows_of(got.reduced), want) << "p=" << p << " trial " << trial;
      EXPECT_EQ(got.pivots, piv);
      EXPECT_EQ(got.rank, piv.size());
    }
  }
}

TEST(Rref, Idempotent) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int t = 0; t < 30; ++t) {
      Mat a = oracle::random_mat(p, 1 + rng() % 9, 1 + rng() % 9, rng, 30);
      auto once = rref(a).reduced;
      EXPECT_EQ(rref(once).reduced, once);
    }
}

TEST(Multiply, MatchesNaiveProduct) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 11u})
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 9, k = 1 + rng() % 140, m = 1 + rng() % 9;
      Mat a = oracle::random_mat(p, n, k, rng), b = oracle::random_mat(p, k, m, rng);
      EXPECT_EQ(oracle::rows_of(a * b), oracle::naive_mul(oracle::rows_of(a), oracle::rows_of(b), p, k, m));
    }
}

TEST(Rank, MatchesImageEnumeration) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u})
    for (int t = 0; t < 40; ++t) {
      Mat a = oracle::random_mat(p, 1 + rng() % 5, 1 + rng() % 6, rng, 40);
      EXPECT_EQ(oracle::ipow(p, rank(a)), oracle::image_size(a));
    }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Mat::identity(PrimeField(3), 4)).cols(), 0u);
  Mat z(PrimeField(2), 2, 3);
  EXPECT_EQ(kernel_basis(z), Mat::identity(PrimeField(2), 3));
  Mat k = kernel_basis(M(2, {{1, 1}}));
  EXPECT_EQ(k, M(2, {{1}, {1}}));
  // Exhaustively: the only nonzero kernel vector of [[1,1]] over GF(2).
  std::size_t nonzero = 0;
  oracle::for_each_vector(2, 2, [&](const auto& v) {
    if ((v[0] || v[1]) && (v[0] + v[1]) % 2 == 0) ++nonzero;
  });
  EXPECT_EQ(nonzero, 1u);
}

TEST(Kernel, RankNullity) {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int t = 0; t < 50; ++t) {
      Mat a = oracle::random_mat(p, 1 + rng() % 10, 1 + rng() % 10, rng, 50);
      Mat k = kernel_basis(a);
      EXPECT_EQ(rank(a) + k.cols(), a.cols());
      EXPECT_TRUE((a * k).is_zero());
      EXPECT_EQ(rank(k), k.cols());
    }
}

TEST(Kernel, CanonicalFreeVariableConvention) {
  // x0 + x2 = 0, x1 + x2 = 0 over GF(3): free variable x2 only.
  Mat k = kernel_basis(M(3, {{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(k, M(3, {{2}, {2}, {1}}));
}

TEST(Solve, Examples) {
  Mat b = M(5, {{3}, {4}});
  EXPECT_EQ(*solve(Mat::identity(PrimeField(5), 2), b), b);
  EXPECT_FALSE(solve(Mat(PrimeField(2), 2, 2), M(2, {{1}, {0}})).has_value());
  EXPECT_EQ(*solve(M(3, {{1, 1}, {0, 0}}), M(3, {{2}, {0}})), M(3, {{2}, {0}}));
  EXPECT_THROW(solve(Mat(PrimeField(3), 2, 2), Mat(PrimeField(3), 3, 1)), Error);
}

TEST(Solve, SolutionsVerifiedAndFailuresExhaustive) {
  std::mt19937_64 rng(29);
  for (std::uint32_t p : {2u, 3u})
    for (int t = 0; t < 60; ++t) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % (p == 2 ? 8 : 5);
      Mat a = oracle::random_mat(p, r, c, rng, 50), b = oracle::random_mat(p, r, 1, rng);
      auto x = solve(a, b);
      if (x) {
        EXPECT_EQ(a * *x, b);
        continue;
      }
      bool found = false;
      oracle::for_each_vector(c, p, [&](const auto& v) {
        if (oracle::apply(a, v) == oracle::rows_of(b.transpose())[0]) found = true;
      });
      EXPECT_FALSE(found);
    }
}

TEST(Kron, Examples) {
  PrimeField f(2);
  EXPECT_EQ(kron(Mat::identity(f, 2), Mat::identity(f, 3)), Mat::identity(f, 6));
  EXPECT_TRUE(kron(Mat(f, 2, 2), M(2, {{1, 1}, {0, 1}})).is_zero());
  EXPECT_EQ(kron(M(2, {{1, 1}}), M(2, {{1}, {1}})), M(2, {{1, 1}, {1, 1}}));
}

TEST(Kron, MixedProduct) {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int t = 0; t < 20; ++t) {
      const std::size_t a1 = 1 + rng() % 3, a2 = 1 + rng() % 3, a3 = 1 + rng() % 3;
      const std::size_t b1 = 1 + rng() % 3, b2 = 1 + rng() % 3, b3 = 1 + rng() % 3;
      Mat A = oracle::random_mat(p, a1, a2, rng), C = oracle::random_mat(p, a2, a3, rng);
      Mat B = oracle::random_mat(p, b1, b2, rng), D = oracle::random_mat(p, b2, b3, rng);
      EXPECT_EQ(kron(A, B) * kron(C, D), kron(A * C, B * D));
    }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(37);
  for (std::uint32_t p : {2u, 3u, 7u})
    for (int t = 0; t < 20; ++t) {
      Mat a = oracle::random_mat(p, 4, 4, rng);
      auto i = inverse(a);
      EXPECT_EQ(i.has_value(), rank(a) == 4);
      if (i) EXPECT_EQ(a * *i, Mat::identity(a.field(), 4));
    }
}

TEST(Subquotient, CoordinatesOfRepresentatives) {
  // Z = all of GF(3)^3, B = span(e0): quotient of dim 2 with reps e1, e2.
  PrimeField f(3);
  Mat z = Mat::identity(f, 3);
  Mat b = M(3, {{1}, {0}, {0}});
  Subquotient q(z, b);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_EQ(q.coordinates(q.representatives()), Mat::identity(f, 2));
  EXPECT_TRUE(q.coordinates(b).is_zero());
  // e0 + 2 e2 is 2 * rep(e2) modulo B.
  EXPECT_EQ(q.coordinates(M(3, {{1}, {0}, {2}})), M(3, {{0}, {2}}));
}
