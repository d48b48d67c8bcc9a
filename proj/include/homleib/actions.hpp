#pragma once

// Hom-actions of one Hom-Leibniz algebra on another, semidirect products,
// split extensions and derivations.
//
// lambda is target.dim × (actor.dim · target.dim), column i·m + j = b_i · b'_j;
// rho is target.dim × (target.dim · actor.dim), column j·l + i = b'_j · b_i.

#include <array>
#include <string>
#include <utility>

#include "homleib/homalg.hpp"

namespace homleib {

template <class S>
struct HomAction {
  HomAlgebra<S> actor;   // L
  HomAlgebra<S> target;  // M
  Mat<S> lambda;
  Mat<S> rho;

  HomAction() = default;
  HomAction(HomAlgebra<S> actor_, HomAlgebra<S> target_, Mat<S> lambda_, Mat<S> rho_)
      : actor(std::move(actor_)), target(std::move(target_)), lambda(std::move(lambda_)), rho(std::move(rho_)) {
    const Index l = actor.dim(), m = target.dim();
    if (lambda.rows() != m || lambda.cols() != l * m || rho.rows() != m || rho.cols() != m * l)
      throw DimensionError("action of " + actor.name + " on " + target.name + ": tensor shape mismatch");
  }

  [[nodiscard]] Vec<S> left(const Vec<S>& x, const Vec<S>& m) const { return lambda * kron(x, m); }
  [[nodiscard]] Vec<S> right(const Vec<S>& m, const Vec<S>& x) const { return rho * kron(m, x); }

  /// Matrix of m ↦ x · m.
  [[nodiscard]] Mat<S> left_matrix(const Vec<S>& x) const {
    const Index m = target.dim();
    Mat<S> out = Mat<S>::Zero(m, m);
    for (Index i = 0; i < actor.dim(); ++i)
      if (!is_zero(x(i))) out += x(i) * lambda.middleCols(i * m, m);
    return out;
  }

  /// Matrix of m ↦ m · x.
  [[nodiscard]] Mat<S> right_matrix(const Vec<S>& x) const {
    const Index m = target.dim(), l = actor.dim();
    Mat<S> out(m, m);
    for (Index j = 0; j < m; ++j) out.col(j) = rho.middleCols(j * l, l) * x;
    return out;
  }

  friend bool operator==(const HomAction& a, const HomAction& b) {
    return a.actor == b.actor && a.target == b.target && a.lambda == b.lambda && a.rho == b.rho;
  }
};

template <class S>
HomAction<S> trivial_action(const HomAlgebra<S>& actor, const HomAlgebra<S>& target) {
  const Index l = actor.dim(), m = target.dim();
  return {actor, target, Mat<S>::Zero(m, l * m), Mat<S>::Zero(m, m * l)};
}

struct ActionCheck {
  CheckResult first_failure;
  std::array<bool, 8> axiom_ok{true, true, true, true, true, true, true, true};
  /// Exactly one of axioms b and c fails; they differ only in argument order
  /// and sign, so this may point at a misprint rather than a bad action.
  bool b_c_mismatch = false;

  explicit operator bool() const { return first_failure.ok; }
};

/// The eight action axioms on basis tuples; witness order is (x, y, m, m′)
/// restricted to the variables the axiom uses.
template <class S>
ActionCheck check_action_axioms(const HomAction<S>& a) {
  const HomAlgebra<S>& L = a.actor;
  const HomAlgebra<S>& M = a.target;
  const Index l = L.dim(), m = M.dim();
  std::vector<Mat<S>> lx, rx, lax, rax;
  for (Index i = 0; i < l; ++i) {
    lx.push_back(a.left_matrix(unit_vector<S>(l, i)));
    rx.push_back(a.right_matrix(unit_vector<S>(l, i)));
    lax.push_back(a.left_matrix(Vec<S>(L.alpha.col(i))));
    rax.push_back(a.right_matrix(Vec<S>(L.alpha.col(i))));
  }
  auto mb = [&](const Vec<S>& u, const Vec<S>& v) { return Vec<S>(bracket(M, u, v)); };
  auto am = [&](Index k) { return Vec<S>(M.alpha.col(k)); };

  ActionCheck out;
  std::array<CheckResult, 8> first;
  auto record = [&](int axiom, bool equal, std::vector<Index> witness) {
    if (equal || !out.axiom_ok[static_cast<std::size_t>(axiom)]) return;
    out.axiom_ok[static_cast<std::size_t>(axiom)] = false;
    first[static_cast<std::size_t>(axiom)] =
        CheckResult::fail(std::string("axiom ") + static_cast<char>('a' + axiom), std::move(witness));
  };

  for (Index i = 0; i < l; ++i)
    for (Index j = 0; j < l; ++j) {
      const Vec<S> xy = L.bracket_of_basis(i, j);
      const Mat<S> r_xy = a.right_matrix(xy);
      const Mat<S> l_xy = a.left_matrix(xy);
      for (Index k = 0; k < m; ++k) {
        // a) α(m)·[x,y] = (m·x)·α(y) − (m·y)·α(x)
        record(0, Vec<S>(r_xy * am(k)) == Vec<S>(rax[j] * rx[i].col(k) - rax[i] * rx[j].col(k)), {i, j, k});
        // b) α(x)·(m·y) = (x·m)·α(y) − [x,y]·α(m)
        record(1, Vec<S>(lax[i] * rx[j].col(k)) == Vec<S>(rax[j] * lx[i].col(k) - l_xy * am(k)), {i, j, k});
        // c) α(x)·(y·m) = [x,y]·α(m) − (x·m)·α(y)
        record(2, Vec<S>(lax[i] * lx[j].col(k)) == Vec<S>(l_xy * am(k) - rax[j] * lx[i].col(k)), {i, j, k});
      }
    }

  for (Index i = 0; i < l; ++i)
    for (Index k = 0; k < m; ++k)
      for (Index p = 0; p < m; ++p) {
        const Vec<S> mm = M.bracket_of_basis(k, p);
        // d) α(x)·[m,m′] = [x·m, α(m′)] − [x·m′, α(m)]
        record(3, Vec<S>(lax[i] * mm) == Vec<S>(mb(lx[i].col(k), am(p)) - mb(lx[i].col(p), am(k))), {i, k, p});
        // e) [α(m), m′·x] = [m,m′]·α(x) − [m·x, α(m′)]
        record(4, mb(am(k), rx[i].col(p)) == Vec<S>(rax[i] * mm - mb(rx[i].col(k), am(p))), {i, k, p});
        // f) [α(m), x·m′] = [m·x, α(m′)] − [m,m′]·α(x)
        record(5, mb(am(k), lx[i].col(p)) == Vec<S>(mb(rx[i].col(k), am(p)) - rax[i] * mm), {i, k, p});
      }

  for (Index i = 0; i < l; ++i) {
    // g) α(x·m) = α(x)·α(m);  h) α(m·x) = α(m)·α(x)
    const Mat<S> g = M.alpha * lx[i] - lax[i] * M.alpha;
    if (auto col = detail::first_nonzero_column(g)) record(6, false, {i, *col});
    const Mat<S> h = M.alpha * rx[i] - rax[i] * M.alpha;
    if (auto col = detail::first_nonzero_column(h)) record(7, false, {i, *col});
  }

  for (std::size_t n = 0; n < 8; ++n)
    if (!out.axiom_ok[n]) {
      out.first_failure = first[n];
      break;
    }
  int failures = 0;
  for (bool ok : out.axiom_ok) failures += ok ? 0 : 1;
  out.b_c_mismatch = failures == 1 && (!out.axiom_ok[1] || !out.axiom_ok[2]);
  if (out.b_c_mismatch) out.first_failure.detail = "only one of axioms b, c fails: possible misprint in their signs";
  return out;
}

/// Action of a subalgebra K on a two-sided ideal H by the bracket of L, in the
/// RREF coordinates of K and H.
template <class S>
HomAction<S> action_from_embedding(const HomAlgebra<S>& L, const Subspace<S>& K, const Subspace<S>& H) {
  if (!is_subalgebra(L, K)) throw PreconditionError("subalgebra", "acting subspace is not a subalgebra");
  if (!is_two_sided_ideal(L, H)) throw PreconditionError("two-sided ideal", "target subspace is not an ideal");
  const HomMorphism<S> k = subalgebra_inclusion(L, K, L.name + "_K");
  const HomMorphism<S> h = subalgebra_inclusion(L, H, L.name + "_H");
  const Index l = K.dim(), m = H.dim();
  Mat<S> lambda(m, l * m), rho(m, m * l);
  for (Index i = 0; i < l; ++i)
    for (Index j = 0; j < m; ++j) {
      const Vec<S> x = k.map.col(i), y = h.map.col(j);
      lambda.col(i * m + j) = H.coordinates(bracket(L, x, y));
      rho.col(j * l + i) = H.coordinates(bracket(L, y, x));
    }
  return {k.src, h.src, std::move(lambda), std::move(rho)};
}

/// L acting on itself by its bracket.
template <class S>
HomAction<S> self_action(const HomAlgebra<S>& L) {
  return {L, L, L.brackets, L.brackets};
}

/// Pulls an action of L back along a morphism f: X → L.
template <class S>
HomAction<S> pullback(const HomAction<S>& a, const HomMorphism<S>& f) {
  const Index m = a.target.dim();
  return {f.src, a.target, Mat<S>(a.lambda * kron(f.map, identity<S>(m))),
          Mat<S>(a.rho * kron(identity<S>(m), f.map))};
}

// ---------------------------------------------------------------------------
// Semidirect products

template <class S>
struct Semidirect {
  HomAlgebra<S> algebra;  // M ⊕ L, M coordinates first
  HomMorphism<S> i;       // M → M⋊L
  HomMorphism<S> pi;      // M⋊L → L
  HomMorphism<S> sigma;   // L → M⋊L
  Mat<S> theta;           // M⋊L → M, (m, l) ↦ m
};

template <class S>
Semidirect<S> semidirect(const HomAction<S>& a, std::string name = {}) {
  if (const ActionCheck check = check_action_axioms(a); !check)
    throw PreconditionError("valid action", check.first_failure.what + " fails");
  const HomAlgebra<S>& L = a.actor;
  const HomAlgebra<S>& M = a.target;
  const Index l = L.dim(), m = M.dim(), n = m + l;
  Mat<S> B = Mat<S>::Zero(n, n * n);
  for (Index k = 0; k < m; ++k)
    for (Index p = 0; p < m; ++p) B.col(k * n + p).head(m) = M.bracket_of_basis(k, p);
  for (Index i = 0; i < l; ++i) {
    const Mat<S> lax = a.left_matrix(Vec<S>(L.alpha.col(i)));
    const Mat<S> rax = a.right_matrix(Vec<S>(L.alpha.col(i)));
    for (Index p = 0; p < m; ++p) {
      B.col((m + i) * n + p).head(m) = lax.col(p);  // [(0,l), (m,0)] = (α(l)·m, 0)
      B.col(p * n + m + i).head(m) = rax.col(p);    // [(m,0), (0,l)] = (m·α(l), 0)
    }
    for (Index j = 0; j < l; ++j) B.col((m + i) * n + m + j).tail(l) = L.bracket_of_basis(i, j);
  }
  Mat<S> alpha = Mat<S>::Zero(n, n);
  alpha.topLeftCorner(m, m) = M.alpha;
  alpha.bottomRightCorner(l, l) = L.alpha;
  std::vector<std::string> labels = M.labels;
  labels.insert(labels.end(), L.labels.begin(), L.labels.end());
  if (name.empty()) name = M.name + "x|" + L.name;
  HomAlgebra<S> G(std::move(name), std::move(B), std::move(alpha), std::move(labels));

  Mat<S> i = Mat<S>::Zero(n, m), pi = Mat<S>::Zero(l, n), sigma = Mat<S>::Zero(n, l), theta = Mat<S>::Zero(m, n);
  i.topRows(m) = identity<S>(m);
  theta.leftCols(m) = identity<S>(m);
  pi.rightCols(l) = identity<S>(l);
  sigma.bottomRows(l) = identity<S>(l);
  return {G, {M, G, i}, {G, L, pi}, {L, G, sigma}, theta};
}

// ---------------------------------------------------------------------------
// Split extensions 0 → M → B → C → 0 with a section s

template <class S>
struct SplitExtension {
  HomAlgebra<S> M;
  HomAlgebra<S> B;
  HomAlgebra<S> C;
  Mat<S> i;   // B × M
  Mat<S> pi;  // C × B
  Mat<S> s;   // B × C
};

template <class S>
SplitExtension<S> split_extension_of(const Semidirect<S>& sd) {
  return {sd.i.src, sd.algebra, sd.pi.dst, sd.i.map, sd.pi.map, sd.sigma.map};
}

template <class S>
CheckResult validate_split(const SplitExtension<S>& se) {
  if (se.i.rows() != se.B.dim() || se.i.cols() != se.M.dim() || se.pi.rows() != se.C.dim() ||
      se.pi.cols() != se.B.dim() || se.s.rows() != se.B.dim() || se.s.cols() != se.C.dim())
    throw DimensionError("split extension: map shapes do not match the algebras");
  if (auto r = check_morphism(se.M, se.B, se.i); !r) return CheckResult::fail("i is a morphism: " + r.what, r.witness);
  if (auto r = check_morphism(se.B, se.C, se.pi); !r) return CheckResult::fail("pi is a morphism: " + r.what, r.witness);
  if (auto r = check_morphism(se.C, se.B, se.s); !r) return CheckResult::fail("s is a morphism: " + r.what, r.witness);
  if (!is_injective(se.i)) return CheckResult::fail("i injective", {});
  if (!is_surjective(se.pi)) return CheckResult::fail("pi surjective", {});
  if (!(image(se.i) == kernel(se.pi))) return CheckResult::fail("image(i) = kernel(pi)", {});
  if (Mat<S>(se.pi * se.s) != identity<S>(se.C.dim())) return CheckResult::fail("pi s = Id", {});
  return CheckResult::pass();
}

/// c·a = i⁻¹[s(c), i(a)], a·c = i⁻¹[i(a), s(c)] for α_C = Id.
template <class S>
HomAction<S> induced_action_from_split(const SplitExtension<S>& se) {
  if (se.C.alpha != identity<S>(se.C.dim())) throw PreconditionError("alpha_C = Id", "induced action needs an untwisted quotient");
  if (auto r = validate_split(se); !r) throw PreconditionError("split extension", r.what);
  const Index c = se.C.dim(), m = se.M.dim();
  const Subspace<S> im = image(se.i);
  const Mat<S> inv = left_inverse(se.i);
  auto pull = [&](const Vec<S>& b) -> Vec<S> {
    if (!im.contains(b)) throw PreconditionError("ideal kernel", "bracket with the section leaves image(i)");
    return inv * b;
  };
  Mat<S> lambda(m, c * m), rho(m, m * c);
  for (Index k = 0; k < c; ++k)
    for (Index a = 0; a < m; ++a) {
      const Vec<S> sc = se.s.col(k), ia = se.i.col(a);
      lambda.col(k * m + a) = pull(bracket(se.B, sc, ia));
      rho.col(a * c + k) = pull(bracket(se.B, ia, sc));
    }
  return {se.C, se.M, std::move(lambda), std::move(rho)};
}

template <class S>
struct SplitEquivalence {
  CheckResult result;
  HomAction<S> action;
  Semidirect<S> rebuilt;
  Mat<S> phi;  // M⋊C → B, (a, c) ↦ i(a) + s(c)
};

/// Rebuilds M ⋊ C from the induced action and verifies that
/// φ(a,c) = i(a) + s(c) is a morphism making the ladder commute.
template <class S>
SplitEquivalence<S> check_split_equivalence(const SplitExtension<S>& se) {
  SplitEquivalence<S> out;
  out.action = induced_action_from_split(se);
  out.rebuilt = semidirect(out.action, se.M.name + "x|" + se.C.name);
  out.phi = Mat<S>(se.B.dim(), se.M.dim() + se.C.dim());
  out.phi << se.i, se.s;
  if (auto r = check_morphism(out.rebuilt.algebra, se.B, out.phi); !r)
    out.result = CheckResult::fail("phi is a morphism: " + r.what, r.witness);
  else if (Mat<S>(out.phi * out.rebuilt.i.map) != se.i)
    out.result = CheckResult::fail("phi j = i", {});
  else if (Mat<S>(se.pi * out.phi) != out.rebuilt.pi.map)
    out.result = CheckResult::fail("pi phi = p", {});
  else if (!is_bijective(out.phi))
    out.result = CheckResult::fail("phi bijective", {});
  return out;
}

// ---------------------------------------------------------------------------
// Derivations

/// f-derivation law d[x₁,x₂] = α_L(f x₁)·d(x₂) + d(x₁)·α_L(f x₂) and
/// d·α_X = α_M·d, for f: X → L and an action of L on M. With X = L and
/// f = Id this is the ordinary derivation law.
template <class S>
CheckResult check_f_derivation(const HomAlgebra<S>& X, const Mat<S>& f, const HomAction<S>& a, const Mat<S>& d) {
  const Index x = X.dim();
  if (f.rows() != a.actor.dim() || f.cols() != x || d.rows() != a.target.dim() || d.cols() != x)
    throw DimensionError("derivation: map shapes do not match");
  const Mat<S> af = a.actor.alpha * f;
  for (Index i = 0; i < x; ++i) {
    const Mat<S> left = a.left_matrix(Vec<S>(af.col(i)));
    for (Index j = 0; j < x; ++j) {
      const Vec<S> lhs = d * X.bracket_of_basis(i, j);
      const Vec<S> rhs = left * d.col(j) + a.right_matrix(Vec<S>(af.col(j))) * d.col(i);
      if (lhs != rhs) return CheckResult::fail("derivation law", {i, j});
    }
  }
  const Mat<S> twist = d * X.alpha - a.target.alpha * d;
  if (auto col = detail::first_nonzero_column(twist)) return CheckResult::fail("twist", {*col});
  return CheckResult::pass();
}

template <class S>
CheckResult check_derivation(const HomAction<S>& a, const Mat<S>& d) {
  return check_f_derivation(a.actor, identity<S>(a.actor.dim()), a, d);
}

/// Basis of the space of derivations of the actor over the target, each as a
/// target.dim × actor.dim matrix.
template <class S>
std::vector<Mat<S>> derivation_space(const HomAction<S>& a) {
  const Index l = a.actor.dim(), m = a.target.dim();
  const Mat<S> Im = identity<S>(m);
  // vec(d) is column-major: d v = (vᵀ ⊗ I) vec(d).
  auto apply = [&](const Vec<S>& v) { return Mat<S>(kron(Mat<S>(v.transpose()), Im)); };
  Mat<S> rows(l * l * m + m * l, m * l);
  Index r = 0;
  for (Index i = 0; i < l; ++i) {
    const Mat<S> left = a.left_matrix(Vec<S>(a.actor.alpha.col(i)));
    for (Index j = 0; j < l; ++j) {
      const Mat<S> right = a.right_matrix(Vec<S>(a.actor.alpha.col(j)));
      rows.middleRows(r, m) = apply(a.actor.bracket_of_basis(i, j)) - left * apply(unit_vector<S>(l, j)) -
                              right * apply(unit_vector<S>(l, i));
      r += m;
    }
  }
  rows.middleRows(r, m * l) =
      kron(Mat<S>(a.actor.alpha.transpose()), Im) - kron(identity<S>(l), a.target.alpha);
  const Subspace<S> solutions = kernel(rows);
  std::vector<Mat<S>> out;
  for (Index k = 0; k < solutions.dim(); ++k) {
    const Vec<S> v = solutions.vector(k);
    out.push_back(Eigen::Map<const Mat<S>>(v.data(), m, l));
  }
  return out;
}

/// h(x) = (d(x), f(x)) into M ⋊ L for an f-derivation d into an abelian M.
template <class S>
HomMorphism<S> derivation_to_hom(const HomMorphism<S>& f, const HomAction<S>& a, const Mat<S>& d,
                                 const Semidirect<S>& sd) {
  if (!is_zero_matrix(a.target.brackets)) throw PreconditionError("representation", "target of the action is not abelian");
  if (auto r = check_morphism(f); !r) throw PreconditionError("morphism", "f fails " + r.what);
  if (auto r = check_f_derivation(f.src, f.map, a, d); !r) throw PreconditionError("f-derivation", r.what);
  Mat<S> h(d.rows() + f.map.rows(), f.src.dim());
  h << d, f.map;
  HomMorphism<S> out(f.src, sd.algebra, std::move(h));
  if (auto r = check_morphism(out); !r) throw TheoremViolation("h = (d, f) is not a morphism: " + r.what);
  return out;
}

template <class S>
struct FDerivation {
  HomMorphism<S> f;
  Mat<S> d;
};

/// f = π·h and d = θ·h.
template <class S>
FDerivation<S> hom_to_derivation(const HomMorphism<S>& h, const Semidirect<S>& sd) {
  return {{h.src, sd.pi.dst, Mat<S>(sd.pi.map * h.map)}, Mat<S>(sd.theta * h.map)};
}

}  // namespace homleib
