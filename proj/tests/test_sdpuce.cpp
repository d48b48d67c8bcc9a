#include <gtest/gtest.h>

#include "homleib/corpus.hpp"
#include "homleib/sdpuce.hpp"
#include "support.hpp"

using namespace homleib;
using Q = Rational;

namespace {

SdpSetup<Q> setup_from(const HomAction<Q>& a) { return make_setup(split_extension_of(semidirect(a))); }

void expect_all(const CheckList& checks) {
  for (const auto& c : checks) EXPECT_TRUE(c.result) << c.name << ": " << c.result.what;
}

HomAction<Q> twisted_adjoint() {
  const auto sl2 = corpus::algebra("SL2");
  return pullback(corpus::action("SL2_adjoint"), HomMorphism<Q>(sl2, sl2, corpus::matrix("aut_SL2_torus")));
}

}  // namespace

TEST(Setup, SymmetryFlags) {
  const auto sd1 = setup_from(corpus::action("SL2_adjoint"));
  EXPECT_TRUE(sd1.symmetric);
  expect_all(sd1.checks);
  const auto dp = setup_from(corpus::action("DP"));
  EXPECT_TRUE(dp.symmetric);
  expect_all(dp.checks);
}

TEST(Setup, RefusesNonPerfectQuotient) {
  const auto heis = corpus::algebra("HEIS");
  const auto sl2 = corpus::algebra("SL2");
  EXPECT_THROW(setup_from(trivial_action(heis, sl2)), PreconditionError);
}

TEST(InducedActions, KerPiOnAllSetups) {
  for (const auto& a : {corpus::action("SL2_adjoint"), corpus::action("DP"), twisted_adjoint()}) {
    const auto s = setup_from(a);
    const auto act = induced_action_on_ker_pi(s);
    EXPECT_TRUE(check_action_axioms(act));
    const auto eq = check_split_equivalence(top_row(s));
    EXPECT_TRUE(eq.result) << eq.result.what;
    EXPECT_EQ(eq.action, act);
  }
}

TEST(InducedActions, UceQOnUceM) {
  const auto dp = setup_from(corpus::action("DP"));
  const auto zero = induced_action_uceQ_on_uceM(dp);
  EXPECT_TRUE(is_zero_matrix(zero.lambda));
  EXPECT_TRUE(is_zero_matrix(zero.rho));

  const auto sd1 = setup_from(corpus::action("SL2_adjoint"));
  const auto a = induced_action_uceQ_on_uceM(sd1);
  EXPECT_FALSE(is_zero_matrix(a.lambda));
  EXPECT_TRUE(check_action_axioms(a));
  // Under symmetry ρ(m̂, q̂) = −λ(q̂, m̂) on basis tuples.
  for (Index q = 0; q < a.actor.dim(); ++q)
    for (Index m = 0; m < a.target.dim(); ++m) {
      const Vec<Q> eq = unit_vector<Q>(a.actor.dim(), q), em = unit_vector<Q>(a.target.dim(), m);
      EXPECT_EQ(a.right(em, eq), Vec<Q>(-a.left(eq, em)));
    }
}

TEST(Statements, OneTwoThreeOnAllSetups) {
  for (const auto& a : {corpus::action("SL2_adjoint"), corpus::action("DP"), twisted_adjoint(), corpus::action("SD2")}) {
    SCOPED_TRACE(a.target.name);
    expect_all(check_statement_1_2_3(setup_from(a)).checks);
  }
}

TEST(Statements, FourFiveOnSymmetricSetups) {
  for (const auto& a : {corpus::action("SL2_adjoint"), corpus::action("DP"), twisted_adjoint(), corpus::action("SD2")}) {
    SCOPED_TRACE(a.target.name);
    const auto s = setup_from(a);
    ASSERT_TRUE(s.symmetric);
    expect_all(check_statement_4_5(s).checks);
  }
}

TEST(Statements, DpKernelDegenerates) {
  const auto s = setup_from(corpus::action("DP"));
  const auto p = build_product(s);
  EXPECT_TRUE(kernel(p.tau_sigma.map).is_zero());
}

TEST(Equivalences, AgreeOnEverySetup) {
  struct Case {
    HomAction<Q> action;
    bool expected;
  };
  const std::vector<Case> cases = {{corpus::action("SL2_adjoint"), true},
                                   {corpus::action("DP"), true},
                                   {twisted_adjoint(), true},
                                   {corpus::action("SD2"), false}};
  for (const auto& c : cases) {
    SCOPED_TRACE(c.action.target.name);
    const auto e = check_theorem_equivalences(setup_from(c.action), 5);
    expect_all(e.report.checks);
    EXPECT_EQ(e.phi_central, c.expected);
    EXPECT_EQ(e.action_trivial, c.expected);
    EXPECT_EQ(e.tau_sigma_bijective, c.expected);
    EXPECT_EQ(e.tau_injective, c.expected);
  }
}

TEST(Equivalences, DirectProductCorollary) {
  const auto s = setup_from(corpus::action("DP"));
  const auto r = check_direct_product(s);
  expect_all(r.checks);
  EXPECT_EQ(s.uce_G.dim(), s.uce_M.dim() + s.uce_Q.dim());
  EXPECT_THROW(check_direct_product(setup_from(corpus::action("SL2_adjoint"))), PreconditionError);
}
