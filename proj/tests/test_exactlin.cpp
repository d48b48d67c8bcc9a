#include <gtest/gtest.h>

#include <random>

#include "homleib/exactlin.hpp"
#include "support.hpp"

using namespace homleib;
using homleib::testing::mat;
using homleib::testing::random_matrix;
using homleib::testing::vec;
using Q = Rational;

TEST(Rref, Identity) {
  const auto e = rref(identity<Q>(2));
  EXPECT_EQ(e.form, identity<Q>(2));
  EXPECT_EQ(e.pivots, (std::vector<Index>{0, 1}));
}

TEST(Rref, HandReduction) {
  const auto e = rref(mat({{2, 4}, {1, 2}}));
  EXPECT_EQ(e.form, mat({{1, 2}, {0, 0}}));
  EXPECT_EQ(e.pivots, (std::vector<Index>{0}));
}

TEST(Rref, ZeroMatrix) {
  const Mat<Q> z = Mat<Q>::Zero(2, 3);
  const auto e = rref(z);
  EXPECT_EQ(e.form, z);
  EXPECT_TRUE(e.pivots.empty());
}

TEST(Kernel, Basics) {
  EXPECT_TRUE(kernel(identity<Q>(3)).is_zero());
  EXPECT_TRUE(kernel(Mat<Q>(Mat<Q>::Zero(3, 3))).is_full());
  const auto k = kernel(mat({{1, 2}}));
  ASSERT_EQ(k.dim(), 1);
  EXPECT_EQ(k.vector(0), vec({Q(1), Q(-1, 2)}));
}

TEST(Subspace, SumIntersectMember) {
  const auto e1 = Subspace<Q>::span(mat({{1, 0}}), 2);
  const auto e2 = Subspace<Q>::span(mat({{0, 1}}), 2);
  EXPECT_EQ(subspace_sum(e1, e1), e1);
  EXPECT_TRUE(subspace_intersect(e1, e2).is_zero());
  EXPECT_TRUE(member(vec({Q(1), Q(1)}), subspace_sum(e1, e2)));
  EXPECT_FALSE(member(vec({Q(1), Q(1)}), e1));
  EXPECT_THROW(subspace_sum(e1, Subspace<Q>::zero(3)), DimensionError);
}

TEST(Solve, ConsistentAndInconsistent) {
  const auto a = mat({{1, 1}, {1, 1}});
  auto x = solve(a, vec({Q(2), Q(2)}));
  ASSERT_TRUE(x);
  EXPECT_EQ(Vec<Q>(a * *x), vec({Q(2), Q(2)}));
  EXPECT_FALSE(solve(a, vec({Q(1), Q(2)})));
}

TEST(Quotient, Examples) {
  const auto trivial = quotient(3, Subspace<Q>::zero(3));
  EXPECT_EQ(trivial.proj(), identity<Q>(3));
  EXPECT_EQ(trivial.section(), identity<Q>(3));
  EXPECT_EQ(quotient(3, Subspace<Q>::full(3)).dim(), 0);

  const auto q = quotient(2, Subspace<Q>::span(mat({{1, 1}}), 2));
  EXPECT_EQ(q.dim(), 1);
  EXPECT_TRUE(is_zero_matrix(q.project(vec({Q(1), Q(1)}))));
  EXPECT_EQ(q.representatives(), (std::vector<Index>{1}));
}

TEST(InducedMap, IdentityZeroAndNonDescent) {
  const auto k = Subspace<Q>::span(mat({{1, 1}}), 2);
  const auto q = quotient(2, k);
  EXPECT_EQ(*induced_map(q, q, identity<Q>(2)), identity<Q>(1));
  EXPECT_EQ(*induced_map(q, q, Mat<Q>(Mat<Q>::Zero(2, 2))), Mat<Q>(Mat<Q>::Zero(1, 1)));
  // (1,1) ↦ (1,0), which is not a multiple of (1,1).
  EXPECT_FALSE(induced_map(q, q, mat({{1, 0}, {0, 0}})));
}

TEST(TensorIndex, RoundTrip) {
  const TensorIndex t{3, 5};
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 5; ++j) EXPECT_EQ(t.split(t(i, j)), std::make_pair(i, j));
  // Agrees with the Kronecker convention.
  const Vec<Q> x = unit_vector<Q>(3, 2), y = unit_vector<Q>(5, 4);
  EXPECT_EQ(Vec<Q>(kron(x, y)), unit_vector<Q>(15, t(2, 4)));
}

TEST(ExactlinProperties, RrefCanonicalAndRankNullity) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<Index> dim(0, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const Index r = dim(rng), c = dim(rng);
    const Mat<Q> m = random_matrix(rng, r, c, 0.4);
    const auto e = rref(m);
    EXPECT_EQ(rref(e.form).form, e.form);
    EXPECT_EQ(kernel(m).dim() + e.rank(), c);
    EXPECT_TRUE(is_zero_matrix(Mat<Q>(m * kernel(m).basis_columns())));
    // Row space is invariant under left multiplication by an invertible matrix.
    if (r > 0) {
      Mat<Q> g = random_matrix(rng, r, r);
      if (is_bijective(g)) EXPECT_EQ(Subspace<Q>::span(Mat<Q>(g * m), c), Subspace<Q>::span(m, c));
    }
  }
}

TEST(ExactlinProperties, QuotientInvariantsUpToForty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Index> dim(1, 40);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = dim(rng);
    std::uniform_int_distribution<Index> kd(0, n);
    const auto k = Subspace<Q>::span(random_matrix(rng, kd(rng), n, 0.3), n);
    const auto q = quotient(n, k);
    EXPECT_EQ(q.dim(), n - k.dim());
    EXPECT_EQ(Mat<Q>(q.proj() * q.section()), identity<Q>(q.dim()));
    EXPECT_TRUE(is_zero_matrix(Mat<Q>(q.proj() * k.basis_columns())));
    EXPECT_EQ(kernel(q.proj()), k);
  }
}

TEST(ExactlinProperties, InducedMapCommutes) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 6;
    const Mat<Q> m = random_matrix(rng, n, n, 0.5);
    const auto ks = Subspace<Q>::span(random_matrix(rng, 2, n), n);
    // Choose the destination kernel to contain m(ks) so that descent holds.
    const auto kd = subspace_sum(image(m, ks), Subspace<Q>::span(random_matrix(rng, 1, n), n));
    const auto qs = quotient(n, ks), qd = quotient(n, kd);
    const auto induced = induced_map(qs, qd, m);
    ASSERT_TRUE(induced);
    EXPECT_EQ(Mat<Q>(qd.proj() * m), Mat<Q>(*induced * qs.proj()));
  }
}

TEST(ExactlinProperties, IntersectionAgreesWithMembership) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 7;
    const auto a = Subspace<Q>::span(random_matrix(rng, 4, n, 0.5), n);
    const auto b = Subspace<Q>::span(random_matrix(rng, 4, n, 0.5), n);
    const auto i = subspace_intersect(a, b);
    EXPECT_TRUE(a.contains(i));
    EXPECT_TRUE(b.contains(i));
    EXPECT_EQ(i.dim() + subspace_sum(a, b).dim(), a.dim() + b.dim());
  }
}

TEST(ExactlinProperties, PreimageAndInverses) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat<Q> m = random_matrix(rng, 5, 5, 0.6);
    const auto s = Subspace<Q>::span(random_matrix(rng, 2, 5), 5);
    const auto pre = preimage(m, s);
    EXPECT_TRUE(s.contains(image(m, pre)));
    EXPECT_TRUE(pre.contains(kernel(m)));
    if (is_bijective(m)) EXPECT_EQ(Mat<Q>(inverse(m) * m), identity<Q>(5));
  }
}

TEST(Exactlin, PrimeFieldKernel) {
  Fp::Modulus scope(5);
  Mat<Fp> m(1, 2);
  m << Fp(1), Fp(2);
  const auto k = kernel(m);
  ASSERT_EQ(k.dim(), 1);
  // 1·x + 2·y = 0 over GF(5): (1, 2) since 1 + 4 = 5.
  EXPECT_EQ(k.vector(0)(1), Fp(2));
}
