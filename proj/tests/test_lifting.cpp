#include <gtest/gtest.h>

#include "homleib/corpus.hpp"
#include "homleib/lifting.hpp"
#include "support.hpp"

using namespace homleib;
using homleib::testing::mat;
using Q = Rational;

namespace {

const Mat<Q> kWeyl = mat({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});

}  // namespace

TEST(AlphaCover, UniversalCoverOfSl2HasTrivialObstruction) {
  const auto cov = make_alpha_cover(corpus::cover("SL2_universal"));
  EXPECT_TRUE(all_pass(cov.checks));
  EXPECT_TRUE(cov.C.is_zero());
  EXPECT_TRUE(cov.uce_dst.hl2.contains(cov.C));
}

TEST(AlphaCover, RejectsNonCentralMaps) {
  const auto sd = semidirect(corpus::action("SL2_adjoint"));
  EXPECT_THROW(make_alpha_cover(sd.pi), PreconditionError);
}

TEST(Lifting, AutomorphismsAndDerivationsLiftOverSl2) {
  const auto cov = make_alpha_cover(corpus::cover("SL2_universal"));
  const auto sl2 = cov.base();
  const Mat<Q> torus = corpus::matrix("aut_SL2_torus");
  for (const Mat<Q>& h : {torus, kWeyl, Mat<Q>(torus * kWeyl)}) {
    const auto r = lift_automorphism(cov, h, 4);
    ASSERT_TRUE(r);
    EXPECT_TRUE(all_pass(r.checks));
    EXPECT_EQ(Mat<Q>(cov.f.map * *r.lift), Mat<Q>(h * cov.f.map));
  }
  for (Index x = 0; x < 3; ++x) {
    const Mat<Q> d = left_mult(sl2, unit_vector<Q>(3, x));
    const auto r = lift_derivation(cov, d, 4);
    ASSERT_TRUE(r);
    EXPECT_TRUE(all_pass(r.checks));
  }
  const auto checks = check_lift_bijections(cov, {torus, kWeyl, Mat<Q>(torus * kWeyl)},
                                            {left_mult(sl2, unit_vector<Q>(3, 0)), left_mult(sl2, unit_vector<Q>(3, 1)),
                                             left_mult(sl2, unit_vector<Q>(3, 2))},
                                            8);
  EXPECT_GE(checks.size(), 9u);
  for (const auto& c : checks) EXPECT_TRUE(c.result) << c.name;
}

TEST(Lifting, ShearIsObstructedOnQuotientCover) {
  const auto cov = make_alpha_cover(corpus::cover("SLV2_shear"));
  EXPECT_TRUE(all_pass(cov.checks));
  EXPECT_EQ(cov.C.dim(), 1);
  const Mat<Q> shear = corpus::matrix("aut_SLV2_shear");
  const auto r = lift_automorphism(cov, shear, 2);
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.obstruction.has_value());
  EXPECT_TRUE(obstruction_holds(cov, r));

  // Automorphisms acting on both copies alike preserve C and lift.
  Mat<Q> scale = identity<Q>(7);
  for (Index k = 3; k < 7; ++k) scale(k, k) = Q(2);
  const auto ok = lift_automorphism(cov, scale, 2);
  ASSERT_TRUE(ok);
  EXPECT_TRUE(all_pass(ok.checks));

  // Inner derivations always lift along a cover.
  const auto base = cov.base();
  for (Index x = 0; x < base.dim(); ++x) {
    const auto d = lift_derivation(cov, left_mult(base, unit_vector<Q>(base.dim(), x)), 3);
    ASSERT_TRUE(d);
    EXPECT_TRUE(all_pass(d.checks));
  }
  // The shear's derivation analogue moves copy 2 into copy 1 and is obstructed too.
  const Mat<Q> nil = shear - identity<Q>(7);
  ASSERT_TRUE(check_derivation(self_action(base), nil));
  const auto dn = lift_derivation(cov, nil, 3);
  EXPECT_FALSE(dn);
  EXPECT_TRUE(obstruction_holds(cov, dn));
}

TEST(Lifting, DescendAlongCoverRoundTrip) {
  const auto cov = make_alpha_cover(corpus::cover("SL2_universal"));
  const auto r = lift_automorphism(cov, kWeyl, 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(descend_along_cover(cov, *r.lift), kWeyl);
}
