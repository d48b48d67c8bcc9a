#include <gtest/gtest.h>

#include <random>

#include "homleib/corpus.hpp"
#include "support.hpp"

using namespace homleib;
using homleib::testing::random_matrix;
using Q = Rational;

namespace {

const char* const kActions[] = {"SL2_adjoint", "SL2_on_SL2ab", "SL2_on_V2", "DP", "SD2"};

// The same algebra in the basis given by the columns of P⁻¹ (new = P · old).
HomAlgebra<Q> transport(const HomAlgebra<Q>& L, const Mat<Q>& P) {
  const Mat<Q> Pi = inverse(P);
  return HomAlgebra<Q>(L.name + "'", Mat<Q>(P * L.brackets * kron(Pi, Pi)), Mat<Q>(P * L.alpha * Pi), L.labels);
}

Mat<Q> random_invertible(std::mt19937_64& rng, Index n) {
  for (;;) {
    Mat<Q> m = random_matrix(rng, n, n);
    if (is_bijective(m)) return m;
  }
}

// Axiom a evaluated directly on basis vectors, independent of ActionCheck.
bool axiom_a_by_loops(const HomAction<Q>& a) {
  const Index l = a.actor.dim(), m = a.target.dim();
  for (Index p = 0; p < m; ++p)
    for (Index x = 0; x < l; ++x)
      for (Index y = 0; y < l; ++y) {
        const Vec<Q> am = a.target.alpha.col(p), ax = a.actor.alpha.col(x), ay = a.actor.alpha.col(y);
        const Vec<Q> mp = unit_vector<Q>(m, p), ex = unit_vector<Q>(l, x), ey = unit_vector<Q>(l, y);
        const Vec<Q> lhs = a.right(am, a.actor.bracket_of_basis(x, y));
        const Vec<Q> rhs = a.right(a.right(mp, ex), ay) - a.right(a.right(mp, ey), ax);
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST(Actions, CorpusActionsSatisfyAxioms) {
  for (const char* name : kActions) {
    SCOPED_TRACE(name);
    const auto a = corpus::action(name);
    const auto check = check_action_axioms(a);
    EXPECT_TRUE(check) << check.first_failure.what;
    EXPECT_TRUE(axiom_a_by_loops(a));
  }
}

TEST(Actions, BrokenActionIsRejectedWithWitness) {
  auto a = corpus::action("SL2_on_V2");
  a.lambda(0, 0) += Q(1);
  const auto check = check_action_axioms(a);
  EXPECT_FALSE(check);
  EXPECT_FALSE(check.first_failure.witness.empty());
  EXPECT_THROW(semidirect(a), PreconditionError);
}

TEST(Actions, SelfActionAndEmbedding) {
  const auto sl2 = corpus::algebra("SL2");
  EXPECT_TRUE(check_action_axioms(self_action(sl2)));
  const auto full = Subspace<Q>::full(3);
  const auto a = action_from_embedding(sl2, full, full);
  EXPECT_EQ(a.lambda, sl2.brackets);
  EXPECT_TRUE(is_zero_matrix(trivial_action(sl2, corpus::algebra("V2")).lambda));
}

TEST(Semidirect, ContractOnCorpusActions) {
  for (const char* name : kActions) {
    SCOPED_TRACE(name);
    const auto a = corpus::action(name);
    const auto sd = semidirect(a);
    EXPECT_TRUE(check_hom_leibniz(sd.algebra));
    EXPECT_TRUE(check_multiplicative(sd.algebra));
    EXPECT_TRUE(validate_split(split_extension_of(sd)));
    EXPECT_EQ(Mat<Q>(sd.algebra.alpha * sd.sigma.map), Mat<Q>(sd.sigma.map * a.actor.alpha));
    EXPECT_EQ(Mat<Q>(sd.algebra.alpha * sd.i.map), Mat<Q>(sd.i.map * a.target.alpha));
    EXPECT_EQ(Mat<Q>(sd.theta * sd.i.map), identity<Q>(a.target.dim()));
  }
}

TEST(SplitEquivalence, RoundTripOnCorpus) {
  for (const char* name : kActions) {
    SCOPED_TRACE(name);
    const auto a = corpus::action(name);
    const auto eq = check_split_equivalence(split_extension_of(semidirect(a)));
    EXPECT_TRUE(eq.result) << eq.result.what;
    EXPECT_EQ(eq.action, a);
  }
}

TEST(SplitEquivalence, SurvivesRandomBasisChange) {
  std::mt19937_64 rng(3);
  for (const char* name : {"SL2_adjoint", "SL2_on_V2", "SD2"}) {
    SCOPED_TRACE(name);
    const auto a = corpus::action(name);
    const auto se = split_extension_of(semidirect(a));
    const Mat<Q> P = random_invertible(rng, se.B.dim());
    const SplitExtension<Q> moved{se.M, transport(se.B, P), se.C, Mat<Q>(P * se.i), Mat<Q>(se.pi * inverse(P)),
                                  Mat<Q>(P * se.s)};
    ASSERT_TRUE(validate_split(moved));
    const auto eq = check_split_equivalence(moved);
    EXPECT_TRUE(eq.result) << eq.result.what;
    EXPECT_EQ(eq.action, a);
  }
}

TEST(SplitEquivalence, RejectsBrokenSection) {
  const auto se = split_extension_of(semidirect(corpus::action("SL2_on_V2")));
  auto bad = se;
  bad.s(0, 0) += Q(1);
  EXPECT_FALSE(validate_split(bad));
  EXPECT_THROW(induced_action_from_split(bad), PreconditionError);
}

TEST(Derivations, InnerDerivationsOfSl2) {
  const auto sl2 = corpus::algebra("SL2");
  const auto a = self_action(sl2);
  const auto space = derivation_space(a);
  EXPECT_EQ(space.size(), 3u);
  for (Index x = 0; x < 3; ++x) EXPECT_TRUE(check_derivation(a, left_mult(sl2, unit_vector<Q>(3, x))));
  EXPECT_TRUE(check_derivation(a, corpus::matrix("der_SL2_adh")));
  EXPECT_FALSE(check_derivation(a, identity<Q>(3)));
}

TEST(Derivations, HomCorrespondenceRoundTrips) {
  std::mt19937_64 rng(5);
  const auto sl2 = corpus::algebra("SL2");
  const std::vector<Mat<Q>> fs = {identity<Q>(3), corpus::matrix("aut_SL2_torus")};
  int pairs = 0;
  for (const char* name : {"SL2_on_V2", "SL2_on_SL2ab"}) {
    const auto a = corpus::action(name);
    const auto sd = semidirect(a);
    for (const auto& fm : fs) {
      const HomMorphism<Q> f(sl2, sl2, fm);
      const auto space = derivation_space(pullback(a, f));
      ASSERT_FALSE(space.empty());
      for (int t = 0; t < 3; ++t) {
        Mat<Q> d = Mat<Q>::Zero(a.target.dim(), 3);
        for (const auto& basis : space) d += homleib::testing::small_rational(rng) * basis;
        ASSERT_TRUE(check_f_derivation(sl2, fm, a, d));
        const auto h = derivation_to_hom(f, a, d, sd);
        const auto back = hom_to_derivation(h, sd);
        EXPECT_EQ(back.f.map, fm);
        EXPECT_EQ(back.d, d);
        EXPECT_EQ(derivation_to_hom(back.f, a, back.d, sd).map, h.map);
        ++pairs;
      }
    }
  }
  EXPECT_GE(pairs, 10);
}

TEST(Derivations, NonAbelianTargetRefused) {
  const auto sl2 = corpus::algebra("SL2");
  const auto a = self_action(sl2);
  const auto sd = semidirect(a);
  EXPECT_THROW(derivation_to_hom(identity_morphism(sl2), a, Mat<Q>(Mat<Q>::Zero(3, 3)), sd), PreconditionError);
}
