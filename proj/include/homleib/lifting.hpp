#pragma once

// Lifting automorphisms and derivations along α-covers f: L′ ↠ L (central
// extensions with α-perfect L′). The obstruction subspace is
// C = uce_α(f)(Ker U_α′) inside uce_α(L); lifts are pushed down through the
// surjection P = U_α′ · uce_α(f)⁻¹, whose kernel is C.

#include <cstdint>
#include <optional>
#include <random>

#include "homleib/centext.hpp"

namespace homleib {

template <class S>
struct AlphaCover {
  HomMorphism<S> f;       // L′ → L
  UceResult<S> uce_src;   // uce_α(L′)
  UceResult<S> uce_dst;   // uce_α(L)
  Mat<S> uce_f;           // uce_α(f), bijective
  Mat<S> uce_f_inverse;
  Subspace<S> C;          // in uce_α(L) class coordinates
  Mat<S> P;               // uce_α(L) → L′
  Mat<S> P_section;       // fixed right inverse of P
  CheckList checks;

  [[nodiscard]] const HomAlgebra<S>& cover() const { return f.src; }
  [[nodiscard]] const HomAlgebra<S>& base() const { return f.dst; }
};

template <class S>
AlphaCover<S> make_alpha_cover(const HomMorphism<S>& f) {
  if (auto r = check_morphism(f); !r) throw PreconditionError("morphism", "f fails " + r.what);
  if (!is_surjective(f.map)) throw PreconditionError("surjective", "cover map is not onto");
  if (!is_central(f)) throw PreconditionError("central", "kernel of the cover map is not central");
  if (!is_alpha_perfect(f.src)) throw PreconditionError("alpha-perfect", f.src.name + " is not alpha-perfect");
  AlphaCover<S> c;
  c.f = f;
  c.checks.push_back({"base alpha-perfect", expect(is_alpha_perfect(f.dst))});
  c.uce_src = uce_alpha(f.src);
  c.uce_dst = uce_alpha(f.dst);
  UceMorphism<S> uf = uce_alpha_functor(f, c.uce_src, c.uce_dst);
  c.uce_f = uf.map.map;
  for (auto& check : uf.checks) c.checks.push_back(std::move(check));
  if (!is_bijective(c.uce_f)) throw TheoremViolation("uce_alpha(f) is not bijective for an alpha-cover");
  c.checks.push_back({"uce_alpha(f) bijective", CheckResult::pass()});
  c.uce_f_inverse = inverse(c.uce_f);
  c.C = image(c.uce_f, c.uce_src.hl2);
  c.checks.push_back({"C in Ker U_alpha", expect(c.uce_dst.hl2.contains(c.C))});
  c.P = c.uce_src.u.map * c.uce_f_inverse;
  c.checks.push_back({"Ker P = C", expect(kernel(c.P) == c.C)});
  c.P_section = right_inverse(c.P);
  return c;
}

template <class S>
struct LiftResult {
  std::optional<Mat<S>> lift;     // θ_h or δ_d on L′
  std::optional<Vec<S>> obstruction;  // a vector of C whose image leaves C
  Mat<S> induced;                 // uce_α(h) or uce_α(d)
  CheckList checks;

  explicit operator bool() const { return lift.has_value(); }
};

namespace detail {

template <class S>
std::optional<Vec<S>> escaping_vector(const Subspace<S>& C, const Mat<S>& map) {
  for (Index k = 0; k < C.dim(); ++k) {
    const Vec<S> image_k = map * C.vector(k);
    if (!C.contains(image_k)) return C.vector(k);
  }
  return std::nullopt;
}

/// P · map · (section + random kernel perturbation); equal for every choice
/// of preimages exactly when map preserves Ker P.
template <class S>
Mat<S> push_down(const AlphaCover<S>& cov, const Mat<S>& map, std::mt19937_64* rng) {
  Mat<S> section = cov.P_section;
  if (rng && cov.C.dim() > 0)
    section += cov.C.basis_columns() * random_small_matrix<S>(*rng, cov.C.dim(), cov.cover().dim());
  return cov.P * map * section;
}

}  // namespace detail

/// θ_h with f·θ_h = h·f, when uce_α(h)(C) = C.
template <class S>
LiftResult<S> lift_automorphism(const AlphaCover<S>& cov, const Mat<S>& h, std::uint64_t seed = 1) {
  const HomAlgebra<S>& L = cov.base();
  if (!is_bijective(h)) throw PreconditionError("bijective", "h is not invertible");
  if (auto r = check_morphism(L, L, h); !r) throw PreconditionError("automorphism", "h fails " + r.what);
  LiftResult<S> out;
  out.induced = uce_alpha_functor(HomMorphism<S>(L, L, h), cov.uce_dst, cov.uce_dst).map.map;
  if (!(image(out.induced, cov.C) == cov.C)) {
    out.obstruction = detail::escaping_vector(cov.C, out.induced);
    if (!out.obstruction) out.obstruction = cov.C.vector(0);  // image shrinks: impossible for bijective maps
    return out;
  }
  const Mat<S> theta = detail::push_down(cov, out.induced, nullptr);
  std::mt19937_64 rng(seed);
  const Mat<S> f = cov.f.map;
  const Subspace<S> kf = kernel(f);
  out.checks.push_back({"independent of preimages", expect(detail::push_down(cov, out.induced, &rng) == theta)});
  out.checks.push_back({"theta is a morphism", check_morphism(cov.cover(), cov.cover(), theta)});
  out.checks.push_back({"theta bijective", expect(is_bijective(theta))});
  out.checks.push_back({"f theta = h f", expect(Mat<S>(f * theta) == Mat<S>(h * f))});
  out.checks.push_back({"theta(Ker f) = Ker f", expect(image(theta, kf) == kf)});
  out.lift = theta;
  return out;
}

/// δ_d with f·δ_d = d·f, when uce_α(d)(C) ⊆ C.
template <class S>
LiftResult<S> lift_derivation(const AlphaCover<S>& cov, const Mat<S>& d, std::uint64_t seed = 1) {
  LiftResult<S> out;
  out.induced = uce_alpha_derivation(cov.uce_dst, d).map.map;
  if (auto escape = detail::escaping_vector(cov.C, out.induced)) {
    out.obstruction = *escape;
    return out;
  }
  const Mat<S> delta = detail::push_down(cov, out.induced, nullptr);
  std::mt19937_64 rng(seed);
  const Mat<S> f = cov.f.map;
  const Subspace<S> kf = kernel(f);
  out.checks.push_back({"independent of preimages", expect(detail::push_down(cov, out.induced, &rng) == delta)});
  out.checks.push_back({"delta is a derivation", check_derivation(self_action(cov.cover()), delta)});
  out.checks.push_back({"f delta = d f", expect(Mat<S>(f * delta) == Mat<S>(d * f))});
  out.checks.push_back({"delta(Ker f) in Ker f", expect(kf.contains(image(delta, kf)))});
  out.lift = delta;
  return out;
}

/// Re-verifies an obstruction: the vector lies in C and its image does not.
template <class S>
bool obstruction_holds(const AlphaCover<S>& cov, const LiftResult<S>& r) {
  return r.obstruction && cov.C.contains(*r.obstruction) && !cov.C.contains(Vec<S>(r.induced * *r.obstruction));
}

/// Map on L induced by an endomorphism g of L′ preserving Ker f.
template <class S>
Mat<S> descend_along_cover(const AlphaCover<S>& cov, const Mat<S>& g) {
  const Mat<S>& f = cov.f.map;
  const Subspace<S> kf = kernel(f);
  if (!kf.contains(image(g, kf))) throw PreconditionError("preserves Ker f", "map does not descend along the cover");
  return f * g * right_inverse(f);
}

/// Group law, inverses, linearity, injectivity and round-trip surjectivity of
/// the lifting maps on finite samples.
template <class S>
CheckList check_lift_bijections(const AlphaCover<S>& cov, const std::vector<Mat<S>>& automorphisms,
                                const std::vector<Mat<S>>& derivations, std::uint64_t seed) {
  CheckList out;
  std::vector<Mat<S>> thetas;
  for (const auto& h : automorphisms) {
    const auto r = lift_automorphism(cov, h, seed);
    if (!r) {
      out.push_back({"sampled automorphism lifts", CheckResult::fail("no lift", {})});
      return out;
    }
    thetas.push_back(*r.lift);
  }
  for (std::size_t a = 0; a < automorphisms.size(); ++a) {
    const auto composite = lift_automorphism(cov, Mat<S>(automorphisms[a] * automorphisms[(a + 1) % automorphisms.size()]), seed);
    out.push_back({"Theta(h1 h2) = Theta(h1) Theta(h2)",
                   expect(composite.lift && *composite.lift == Mat<S>(thetas[a] * thetas[(a + 1) % thetas.size()]))});
    const auto inv = lift_automorphism(cov, inverse(automorphisms[a]), seed);
    out.push_back({"Theta(h^-1) = Theta(h)^-1", expect(inv.lift && *inv.lift == inverse(thetas[a]))});
    out.push_back({"round trip theta -> h -> theta",
                   expect(descend_along_cover(cov, thetas[a]) == automorphisms[a])});
    for (std::size_t b = 0; b < a; ++b)
      if (automorphisms[a] != automorphisms[b])
        out.push_back({"Theta injective on sample", expect(thetas[a] != thetas[b])});
  }

  std::vector<Mat<S>> deltas;
  for (const auto& d : derivations) {
    const auto r = lift_derivation(cov, d, seed);
    if (!r) {
      out.push_back({"sampled derivation lifts", CheckResult::fail("no lift", {})});
      return out;
    }
    deltas.push_back(*r.lift);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (std::size_t a = 0; a < derivations.size(); ++a) {
    const std::size_t b = (a + 1) % derivations.size();
    const S c1(coeff(rng)), c2(coeff(rng));
    const auto combo = lift_derivation(cov, Mat<S>(c1 * derivations[a] + c2 * derivations[b]), seed);
    out.push_back({"Delta linear", expect(combo.lift && *combo.lift == Mat<S>(c1 * deltas[a] + c2 * deltas[b]))});
    out.push_back({"round trip delta -> d -> delta", expect(descend_along_cover(cov, deltas[a]) == derivations[a])});
  }
  return out;
}

}  // namespace homleib
