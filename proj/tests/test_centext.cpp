#include <gtest/gtest.h>

#include <random>

#include "homleib/corpus.hpp"
#include "support.hpp"

using namespace homleib;
using homleib::testing::mat;
using Q = Rational;

namespace {

// Rank of I_L from its n³ generators written out term by term with explicit
// index loops; shares nothing with relation_generators beyond the algebra.
Index brute_force_relation_rank(const HomAlgebra<Q>& L) {
  const Index n = L.dim();
  std::vector<Vec<Q>> gens;
  for (Index x1 = 0; x1 < n; ++x1)
    for (Index x2 = 0; x2 < n; ++x2)
      for (Index x3 = 0; x3 < n; ++x3) {
        Vec<Q> g = Vec<Q>::Zero(n * n);
        for (Index p = 0; p < n; ++p)
          for (Index q = 0; q < n; ++q) {
            // coefficient of b_p ⊗ b_q
            g(p * n + q) += -L.c(x1, x2, p) * L.alpha(q, x3) + L.c(x1, x3, p) * L.alpha(q, x2) +
                            L.alpha(p, x1) * L.c(x2, x3, q);
          }
        gens.push_back(g);
      }
  Mat<Q> m(static_cast<Index>(gens.size()), n * n);
  for (std::size_t r = 0; r < gens.size(); ++r) m.row(static_cast<Index>(r)) = gens[r].transpose();
  return rank(m);
}

const char* const kAlphaPerfect[] = {"SL2", "TW2", "SLV2"};

}  // namespace

TEST(Uce, Sl2AgainstRankOracle) {
  const auto sl2 = corpus::algebra("SL2");
  const Index expected_rank = brute_force_relation_rank(sl2);
  EXPECT_EQ(expected_rank, 6);
  const auto r = uce(sl2);
  EXPECT_EQ(r.relations.dim(), expected_rank);
  EXPECT_EQ(r.dim(), 9 - expected_rank);
  EXPECT_EQ(r.hl2.dim(), r.dim() - 3);
  EXPECT_TRUE(all_pass(r.checks));
  EXPECT_TRUE(is_central(r.u));
  EXPECT_TRUE(is_perfect(r.alg));
  EXPECT_TRUE(is_surjective(r.u.map));
  // u{h, e} = [h, e] = 2e
  EXPECT_EQ(Vec<Q>(r.u.map * r.pair(unit_vector<Q>(3, 1), unit_vector<Q>(3, 0))), Vec<Q>(2 * unit_vector<Q>(3, 0)));
}

TEST(Uce, RelationRanksOfLargerAlgebras) {
  for (const char* name : {"TW2", "SLV2"}) {
    SCOPED_TRACE(name);
    const auto L = corpus::algebra(name);
    const auto r = uce_alpha(L);
    EXPECT_EQ(r.relations.dim(), brute_force_relation_rank(L));
    EXPECT_EQ(r.dim(), L.dim() * L.dim() - r.relations.dim());
    EXPECT_TRUE(all_pass(r.checks));
  }
  EXPECT_EQ(uce_alpha(corpus::algebra("SLV2")).hl2.dim(), 3);
}

TEST(Uce, BracketMapAnnihilatesRelationsOnCorpus) {
  for (const auto& name : corpus::algebra_names()) {
    SCOPED_TRACE(name);
    const auto L = corpus::algebra(name);
    const Mat<Q> gens = relation_generators(L);
    EXPECT_TRUE(is_zero_matrix(Mat<Q>(L.brackets * gens)));
  }
}

TEST(Uce, RefusesNonPerfect) {
  EXPECT_THROW(uce(corpus::algebra("AB2")), PreconditionError);
  EXPECT_THROW(uce(corpus::algebra("HEIS")), PreconditionError);
  EXPECT_THROW(uce_alpha(corpus::algebra("NL2")), PreconditionError);
  EXPECT_EQ(hl1_dim(corpus::algebra("AB2")), 2);
  EXPECT_EQ(hl1_dim(corpus::algebra("SL2")), 0);
  EXPECT_FALSE(is_superperfect(corpus::algebra("AB2")));
}

TEST(Uce, AlphaAndPlainCoincideAndAreCentrallyClosed) {
  for (const char* name : kAlphaPerfect) {
    SCOPED_TRACE(name);
    const auto L = corpus::algebra(name);
    const auto a = uce_alpha(L);
    const auto p = uce(L);
    EXPECT_EQ(a.alg, p.alg);
    EXPECT_EQ(a.u.map, p.u.map);
    EXPECT_TRUE(a.carrier.is_full());
    const auto again = uce(a.alg);
    EXPECT_TRUE(again.hl2.is_zero());
    EXPECT_TRUE(is_bijective(again.u.map));
    EXPECT_TRUE(is_centrally_closed(a.alg));
  }
  EXPECT_TRUE(is_centrally_closed(corpus::algebra("SL2")));
  EXPECT_FALSE(is_centrally_closed(corpus::algebra("SLV2")));
  EXPECT_TRUE(is_superperfect(corpus::algebra("SL2")));
}

TEST(Uce, AlphaTwistOnUntwistedIsIdentity) {
  const auto r = uce_alpha(corpus::algebra("SL2"));
  EXPECT_EQ(r.alg.alpha, identity<Q>(r.dim()));
}

TEST(Extensions, CentralityPredicates) {
  const auto heis = corpus::algebra("HEIS");
  Mat<Q> pi = Mat<Q>::Zero(2, 3);
  pi(0, 0) = Q(1);
  pi(1, 1) = Q(1);
  const auto e = extension_of(HomMorphism<Q>(heis, corpus::algebra("V2"), Mat<Q>(pi)));
  ASSERT_TRUE(validate_extension(e));
  EXPECT_TRUE(is_central(e));

  const auto sd = semidirect(corpus::action("SL2_adjoint"));
  const auto e2 = extension_of(sd.pi);
  EXPECT_FALSE(is_central(e2));

  // Kernel with zero twist: α-central without being central.
  const auto nl2 = corpus::algebra("NL2");
  const HomAlgebra<Q> nl2_zero("NL2_0", nl2.brackets, Mat<Q>(Mat<Q>::Zero(2, 2)), nl2.labels);
  const auto sd0 = semidirect(self_action(nl2_zero));
  const auto e3 = extension_of(sd0.pi);
  EXPECT_FALSE(is_central(e3));
  EXPECT_TRUE(is_alpha_central(e3));
}

TEST(Universal, InducedToCentralIsSectionIndependent) {
  const auto sl2 = corpus::algebra("SL2");
  const auto r = uce(sl2);
  std::vector<Extension<Q>> extensions = {extension_of(r.u), extension_of(identity_morphism(sl2))};
  const auto prod = direct_product(sl2, corpus::algebra("V2"));
  Mat<Q> pi = Mat<Q>::Zero(3, 5);
  pi.leftCols(3) = identity<Q>(3);
  extensions.push_back(extension_of(HomMorphism<Q>(prod, sl2, pi)));
  for (std::uint64_t seed : {1u, 2u, 3u})
    for (const auto& e : extensions) {
      const auto h = induced_to_central(r, e, seed);
      EXPECT_TRUE(all_pass(h.checks));
    }
  EXPECT_EQ(induced_to_central(r, extensions[0], 9).h.map, identity<Q>(r.dim()));
  EXPECT_EQ(induced_to_central(r, extensions[1], 9).h.map, r.u.map);
  EXPECT_THROW(induced_to_central(r, extension_of(semidirect(corpus::action("SL2_adjoint")).pi), 1), PreconditionError);
}

TEST(Functoriality, IdentityCompositionAndHl2) {
  const auto sl2 = corpus::algebra("SL2");
  const auto r = uce(sl2);
  const auto id = uce_functor(identity_morphism(sl2), r, r);
  EXPECT_EQ(id.map.map, identity<Q>(r.dim()));
  const Mat<Q> torus = corpus::matrix("aut_SL2_torus");
  const Mat<Q> weyl = mat({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  const HomMorphism<Q> f(sl2, sl2, torus), g(sl2, sl2, weyl);
  ASSERT_TRUE(check_morphism(g));
  const auto uf = uce_functor(f, r, r), ug = uce_functor(g, r, r), ugf = uce_functor(compose(g, f), r, r);
  EXPECT_EQ(ugf.map.map, Mat<Q>(ug.map.map * uf.map.map));
  EXPECT_TRUE(all_pass(uf.checks));
  EXPECT_TRUE(all_pass(ug.checks));

  const auto tw2 = corpus::algebra("TW2");
  const auto ra = uce_alpha(tw2);
  const auto ida = uce_alpha_functor(identity_morphism(tw2), ra, ra);
  EXPECT_EQ(ida.map.map, identity<Q>(ra.dim()));
  const HomMorphism<Q> ft(tw2, tw2, torus);
  ASSERT_TRUE(check_morphism(ft));
  const auto a1 = uce_alpha_functor(ft, ra, ra), a2 = uce_alpha_functor(compose(ft, ft), ra, ra);
  EXPECT_EQ(a2.map.map, Mat<Q>(a1.map.map * a1.map.map));
  EXPECT_TRUE(all_pass(a1.checks));
  EXPECT_THROW(uce_alpha_functor(ft, uce(tw2), ra), PreconditionError);
}

TEST(Functoriality, DerivationsCompatibleWithUce) {
  const auto sl2 = corpus::algebra("SL2");
  const auto r = uce_alpha(sl2);
  const Mat<Q> adh = corpus::matrix("der_SL2_adh");
  const auto D = uce_alpha_derivation(r, adh);
  EXPECT_TRUE(all_pass(D.checks));
  EXPECT_TRUE(is_zero_matrix(uce_alpha_derivation(r, Mat<Q>(Mat<Q>::Zero(3, 3))).map.map));

  // Triples (f, d, d′) with f·d′ = d·f.
  struct Triple {
    std::string base;
    Mat<Q> f, d_prime;
  };
  const Mat<Q> weyl = mat({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  const Mat<Q> ade = left_mult(sl2, unit_vector<Q>(3, 0));
  const auto tw2 = corpus::algebra("TW2");
  const auto tw_ders = derivation_space(self_action(tw2));
  ASSERT_FALSE(tw_ders.empty());
  Mat<Q> torus3 = Mat<Q>::Zero(3, 3);
  torus3(0, 0) = Q(3);
  torus3(1, 1) = Q(1);
  torus3(2, 2) = Q(1, 3);
  const std::vector<Triple> triples = {{"SL2", weyl, ade},
                                       {"SL2", corpus::matrix("aut_SL2_torus"), ade},
                                       {"TW2", corpus::matrix("aut_SL2_torus"), tw_ders[0]},
                                       {"TW2", torus3, tw_ders.back()}};
  for (const auto& t : triples) {
    SCOPED_TRACE(t.base);
    const auto L = corpus::algebra(t.base);
    const auto u = uce_alpha(L);
    const Mat<Q> d = t.f * t.d_prime * inverse(t.f);
    ASSERT_TRUE(check_derivation(self_action(L), d));
    const Mat<Q> uf = uce_alpha_functor(HomMorphism<Q>(L, L, t.f), u, u).map.map;
    const Mat<Q> ud = uce_alpha_derivation(u, d).map.map;
    const Mat<Q> udp = uce_alpha_derivation(u, t.d_prime).map.map;
    EXPECT_EQ(Mat<Q>(uf * udp), Mat<Q>(ud * uf));
  }
}

TEST(Covers, CoverReportOnUniversalExtension) {
  const auto r = uce(corpus::algebra("SL2"));
  for (const auto& c : cover_report(r.u)) EXPECT_TRUE(c.result) << c.name;
  const auto slv = uce_alpha(corpus::algebra("SLV2"));
  for (const auto& c : cover_report(slv.u)) EXPECT_TRUE(c.result) << c.name;
}

TEST(Covers, ShearCoverFromFile) {
  const auto f = corpus::cover("SLV2_shear");
  EXPECT_EQ(f.src.dim(), 9);
  EXPECT_TRUE(is_central(f));
  EXPECT_TRUE(is_alpha_perfect(f.src));
  for (const auto& c : cover_report(f)) EXPECT_TRUE(c.result) << c.name;
}
