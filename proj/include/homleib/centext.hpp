#pragma once

// Central and α-central extensions, the universal central extension
// uce(L) = L⊗L / I_L and its α-variant, induced maps and closure predicates.

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "homleib/actions.hpp"

namespace homleib {

/// 0 → M → K → L → 0.
template <class S>
struct Extension {
  HomAlgebra<S> M;
  HomAlgebra<S> K;
  HomAlgebra<S> L;
  Mat<S> i;   // K × M
  Mat<S> pi;  // L × K
};

/// The extension Ker(π) → K → L determined by a surjective morphism.
template <class S>
Extension<S> extension_of(const HomMorphism<S>& pi) {
  if (!is_surjective(pi.map)) throw PreconditionError("surjective", "extension_of needs a surjection");
  const HomMorphism<S> inc = subalgebra_inclusion(pi.src, kernel(pi.map), "Ker(" + pi.src.name + "->" + pi.dst.name + ")");
  return {inc.src, pi.src, pi.dst, inc.map, pi.map};
}

template <class S>
CheckResult validate_extension(const Extension<S>& e) {
  if (auto r = check_morphism(e.M, e.K, e.i); !r) return CheckResult::fail("i is a morphism: " + r.what, r.witness);
  if (auto r = check_morphism(e.K, e.L, e.pi); !r) return CheckResult::fail("pi is a morphism: " + r.what, r.witness);
  if (!is_injective(e.i)) return CheckResult::fail("i injective", {});
  if (!is_surjective(e.pi)) return CheckResult::fail("pi surjective", {});
  if (!(image(e.i) == kernel(e.pi))) return CheckResult::fail("image(i) = kernel(pi)", {});
  return CheckResult::pass();
}

namespace detail {

template <class S>
bool brackets_vanish(const HomAlgebra<S>& K, const Subspace<S>& A) {
  const auto full = Subspace<S>::full(K.dim());
  return commutator(K, A, full).is_zero() && commutator(K, full, A).is_zero();
}

}  // namespace detail

/// [M, K] = 0 = [K, M].
template <class S>
bool is_central(const Extension<S>& e) {
  return detail::brackets_vanish(e.K, image(e.i));
}

/// [α_M(M), K] = 0 = [K, α_M(M)].
template <class S>
bool is_alpha_central(const Extension<S>& e) {
  return detail::brackets_vanish(e.K, image(Mat<S>(e.i * e.M.alpha)));
}

/// Kernel of a morphism is central in its source.
template <class S>
bool is_central(const HomMorphism<S>& pi) {
  return detail::brackets_vanish(pi.src, kernel(pi.map));
}

// ---------------------------------------------------------------------------
// Universal central extensions

enum class UceMode { plain, alpha };

/// Spanning family of I_L ⊆ L⊗L: for each ordered basis triple (i, j, k),
/// −[b_i,b_j]⊗α b_k + [b_i,b_k]⊗α b_j + α b_i⊗[b_j,b_k], as column i·n² + j·n + k.
template <class S>
Mat<S> relation_generators(const HomAlgebra<S>& L) {
  const Index n = L.dim();
  Mat<S> gens(n * n, n * n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Vec<S> ai = L.alpha.col(i), aj = L.alpha.col(j), ak = L.alpha.col(k);
        gens.col((i * n + j) * n + k) = kron(ai, L.bracket_of_basis(j, k)) - kron(L.bracket_of_basis(i, j), ak) +
                                         kron(L.bracket_of_basis(i, k), aj);
      }
  return gens;
}

template <class S>
struct UceResult {
  UceMode mode = UceMode::plain;
  HomAlgebra<S> base;
  TensorIndex tensor;
  Subspace<S> carrier;    // L⊗L, or α(L)⊗α(L) in alpha mode
  Subspace<S> relations;  // I_L
  QuotientSpace<S> q;     // carrier coordinates / I_L
  Mat<S> lift;            // classes → L⊗L representatives (n² × d)
  Mat<S> proj;            // L⊗L → classes, valid on the carrier (d × n²)
  HomAlgebra<S> alg;
  HomMorphism<S> u;
  Subspace<S> hl2;        // Ker u, in class coordinates
  CheckList checks;

  [[nodiscard]] Index dim() const { return alg.dim(); }

  /// Class of x ⊗ y.
  [[nodiscard]] Vec<S> pair(const Vec<S>& x, const Vec<S>& y) const { return proj * kron(x, y); }

  /// Map between classes induced by a map T: L_src⊗L_src → L⊗L, or nullopt
  /// when T does not carry carrier and relations of src into those of *this.
  [[nodiscard]] std::optional<Mat<S>> descend(const UceResult& src, const Mat<S>& T) const {
    if (!carrier.contains(image(T, src.carrier)) || !relations.contains(image(T, src.relations))) return std::nullopt;
    return Mat<S>(proj * T * src.lift);
  }
};

namespace detail {

template <class S>
UceResult<S> build_uce(const HomAlgebra<S>& L, UceMode mode) {
  if (auto r = check_hom_leibniz(L); !r) throw PreconditionError("hom-leibniz", "identity fails at a basis triple");
  if (auto r = check_multiplicative(L); !r) throw PreconditionError("multiplicative", "alpha does not preserve the bracket");
  const Index n = L.dim();
  UceResult<S> r;
  r.mode = mode;
  r.base = L;
  r.tensor = L.tensor();
  r.carrier = mode == UceMode::plain ? Subspace<S>::full(n * n) : image(Mat<S>(kron(L.alpha, L.alpha)));
  r.relations = Subspace<S>::span_columns(relation_generators(L));
  if (!r.carrier.contains(r.relations)) throw TheoremViolation(L.name + ": I_L is not contained in the carrier");

  // Quotient in carrier coordinates; the RREF basis gives coordinates by
  // reading the pivot entries.
  const Mat<S> W = r.carrier.basis_columns();
  Mat<S> coords = Mat<S>::Zero(r.carrier.dim(), n * n);
  for (Index a = 0; a < r.carrier.dim(); ++a) coords(a, r.carrier.pivots()[static_cast<std::size_t>(a)]) = S(1);
  r.q = QuotientSpace<S>(Subspace<S>::span_columns(Mat<S>(coords * r.relations.basis_columns())));
  r.lift = W * r.q.section();
  r.proj = r.q.proj() * coords;

  const Mat<S> m = L.brackets * r.lift;  // class ↦ [x₁, x₂]
  const Mat<S> products = kron(m, m);
  if (!r.carrier.contains(image(products))) throw TheoremViolation(L.name + ": brackets of classes leave the carrier");
  const Mat<S> twist_rep = kron(L.alpha, L.alpha);
  if (!r.relations.contains(image(twist_rep, r.relations)))
    throw TheoremViolation(L.name + ": alpha⊗alpha does not preserve I_L");

  const std::string suffix = mode == UceMode::plain ? "uce(" : "uce_alpha(";
  std::vector<std::string> labels;
  for (Index c : r.q.representatives()) {
    const auto [a, b] = r.tensor.split(r.carrier.pivots()[static_cast<std::size_t>(c)]);
    labels.push_back("{" + L.labels[static_cast<std::size_t>(a)] + "," + L.labels[static_cast<std::size_t>(b)] + "}");
  }
  r.alg = HomAlgebra<S>(suffix + L.name + ")", Mat<S>(r.proj * products), Mat<S>(r.proj * twist_rep * r.lift),
                        std::move(labels));
  r.u = HomMorphism<S>(r.alg, L, m);
  r.hl2 = kernel(m);

  r.checks.push_back({"bracket map annihilates I_L", expect(is_zero_matrix(Mat<S>(L.brackets * r.relations.basis_columns())))});
  r.checks.push_back({"u is a morphism", check_morphism(r.u)});
  r.checks.push_back({"u surjective", expect(is_surjective(m))});
  r.checks.push_back({"extension central", expect(detail::brackets_vanish(r.alg, r.hl2))});
  if (mode == UceMode::plain)
    r.checks.push_back({"uce algebra perfect", expect(is_perfect(r.alg))});
  else
    r.checks.push_back({"uce algebra alpha-perfect", expect(is_alpha_perfect(r.alg))});
  return r;
}

}  // namespace detail

template <class S>
UceResult<S> uce(const HomAlgebra<S>& L) {
  if (!is_perfect(L)) throw PreconditionError("perfect", L.name + " is not perfect");
  return detail::build_uce(L, UceMode::plain);
}

template <class S>
UceResult<S> uce_alpha(const HomAlgebra<S>& L) {
  if (!is_alpha_perfect(L)) throw PreconditionError("alpha-perfect", L.name + " is not alpha-perfect");
  return detail::build_uce(L, UceMode::alpha);
}

/// dim L/[L,L]; zero iff L is perfect.
template <class S>
Index hl1_dim(const HomAlgebra<S>& L) {
  return L.dim() - derived(L).dim();
}

template <class S>
const Subspace<S>& hl2_of(const UceResult<S>& r) {
  return r.hl2;
}

// ---------------------------------------------------------------------------
// Universal property and functoriality

template <class S>
struct InducedMorphism {
  HomMorphism<S> h;
  CheckList checks;
};

template <class S>
Mat<S> random_small_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::uniform_int_distribution<long> dist(-3, 3);
  Mat<S> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = S(dist(rng));
  return m;
}

/// The morphism uce(L) → K′ over L for a central extension π′: K′ → L,
/// h{x₁,x₂} = [s(x₁), s(x₂)] for a linear section s of π′. Computed for two
/// sections (a fixed one and a seeded random perturbation) and compared.
template <class S>
InducedMorphism<S> induced_to_central(const UceResult<S>& r, const Extension<S>& e, std::uint64_t seed) {
  if (!(e.L == r.base)) throw PreconditionError("same base", "extension is not over the uce base algebra");
  if (!is_central(e)) throw PreconditionError("central", "extension is not central");
  const Mat<S> s0 = right_inverse(e.pi);
  std::mt19937_64 rng(seed);
  const Mat<S> ker = kernel(e.pi).basis_columns();
  const Mat<S> s1 = s0 + ker * random_small_matrix<S>(rng, ker.cols(), e.L.dim());

  auto through = [&](const Mat<S>& s) { return Mat<S>(e.K.brackets * kron(s, s)); };
  const Mat<S> h0 = through(s0) * r.lift;
  const Mat<S> h1 = through(s1) * r.lift;
  InducedMorphism<S> out{{r.alg, e.K, h0}, {}};
  out.checks.push_back({"h kills I_L", expect(is_zero_matrix(Mat<S>(through(s0) * r.relations.basis_columns())))});
  out.checks.push_back({"section independent", expect(h0 == h1)});
  out.checks.push_back({"h is a morphism", check_morphism(out.h)});
  out.checks.push_back({"pi' h = u", expect(Mat<S>(e.pi * h0) == r.u.map)});
  return out;
}

template <class S>
struct UceMorphism {
  HomMorphism<S> map;
  CheckList checks;
};

/// uce(f){x₁,x₂} = {f x₁, f x₂} between prebuilt results of the same mode.
template <class S>
UceMorphism<S> uce_functor(const HomMorphism<S>& f, const UceResult<S>& src, const UceResult<S>& dst) {
  if (!(f.src == src.base) || !(f.dst == dst.base)) throw PreconditionError("matching bases", "f does not connect the uce bases");
  if (auto r = check_morphism(f); !r) throw PreconditionError("morphism", "f fails " + r.what);
  const auto induced = dst.descend(src, Mat<S>(kron(f.map, f.map)));
  if (!induced) throw TheoremViolation("f⊗f does not descend to the uce quotients");
  UceMorphism<S> out{{src.alg, dst.alg, *induced}, {}};
  out.checks.push_back({"uce(f) is a morphism", check_morphism(out.map)});
  out.checks.push_back({"u uce(f) = f u", expect(Mat<S>(dst.u.map * *induced) == Mat<S>(f.map * src.u.map))});
  if (f.src == f.dst && is_bijective(f.map))
    out.checks.push_back({"automorphism preserves HL2", expect(image(*induced, src.hl2) == dst.hl2)});
  return out;
}

template <class S>
UceMorphism<S> uce_alpha_functor(const HomMorphism<S>& f, const UceResult<S>& src, const UceResult<S>& dst) {
  if (src.mode != UceMode::alpha || dst.mode != UceMode::alpha) throw PreconditionError("alpha mode", "uce_alpha_functor needs alpha-mode results");
  return uce_functor(f, src, dst);
}

/// uce_α(d){αx₁,αx₂} = {d αx₁, α²x₂} + {α²x₁, d αx₂} for a derivation d of L
/// over itself commuting with α.
template <class S>
UceMorphism<S> uce_alpha_derivation(const UceResult<S>& r, const Mat<S>& d) {
  const HomAlgebra<S>& L = r.base;
  if (auto c = check_derivation(self_action(L), d); !c) throw PreconditionError("derivation", c.what);
  const Mat<S> T = kron(d, L.alpha) + kron(L.alpha, d);
  const auto induced = r.descend(r, T);
  if (!induced) throw TheoremViolation("derivation does not descend to the uce quotient");
  UceMorphism<S> out{{r.alg, r.alg, *induced}, {}};
  out.checks.push_back({"U D = d U", expect(Mat<S>(r.u.map * *induced) == Mat<S>(d * r.u.map))});
  out.checks.push_back({"D is a derivation", check_derivation(self_action(r.alg), *induced)});
  out.checks.push_back({"D preserves Ker U", expect(r.hl2.contains(image(*induced, r.hl2)))});
  return out;
}

// ---------------------------------------------------------------------------
// Closure predicates

template <class S>
bool is_centrally_closed(const HomAlgebra<S>& L) {
  if (!is_perfect(L)) throw PreconditionError("perfect", L.name + " is not perfect");
  const UceResult<S> r = uce(L);
  return r.hl2.is_zero() && is_bijective(r.u.map);
}

template <class S>
bool is_superperfect(const HomAlgebra<S>& L) {
  if (hl1_dim(L) != 0) return false;
  return uce(L).hl2.is_zero();
}

/// Decided through the equivalence with central closedness for perfect
/// algebras; the defining property quantifies over all central extensions.
template <class S>
bool is_simply_connected(const HomAlgebra<S>& L) {
  return is_centrally_closed(L);
}

/// Properties of a central surjection π: K ↠ L onto a perfect L.
template <class S>
CheckList cover_report(const HomMorphism<S>& pi) {
  const HomAlgebra<S>& K = pi.src;
  const HomAlgebra<S>& L = pi.dst;
  if (!is_surjective(pi.map)) throw PreconditionError("surjective", "cover map is not onto");
  if (!is_central(pi)) throw PreconditionError("central", "cover kernel is not central");
  if (!is_perfect(L)) throw PreconditionError("perfect", L.name + " is not perfect");
  CheckList out;
  const Subspace<S> kk = derived(K);
  out.push_back({"K = [K,K] + Ker(pi)", expect(subspace_sum(kk, kernel(pi.map)).is_full())});
  bool kk_perfect = false;
  if (is_subalgebra(K, kk)) kk_perfect = is_perfect(subalgebra_inclusion(K, kk).src);
  out.push_back({"[K,K] perfect", expect(kk_perfect)});
  out.push_back({"pi([K,K]) = L", expect(image(pi.map, kk).is_full())});
  const Subspace<S> zk = image(pi.map, center(K));
  const Subspace<S> zl = center(L);
  out.push_back({"pi(Z(K)) in Z(L)", expect(zl.contains(zk))});
  out.push_back({"alpha_L(Z(L)) in pi(Z(K))", expect(zk.contains(image(L.alpha, zl)))});
  return out;
}

}  // namespace homleib
