#pragma once

// Hom-Leibniz algebras given by structure constants.
//
// The bracket is stored as an n × n² matrix B with B(k, i·n + j) = c[i][j][k],
// so that [x, y] = B · (x ⊗ y). Column block i of B is left multiplication by
// the basis vector b_i.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homleib/exactlin.hpp"

namespace homleib {

template <class S>
struct HomAlgebra {
  std::string name;
  std::vector<std::string> labels;
  Mat<S> brackets;  // n × n²
  Mat<S> alpha;     // n × n

  HomAlgebra() : brackets(0, 0), alpha(0, 0) {}

  HomAlgebra(std::string name_, Mat<S> brackets_, Mat<S> alpha_, std::vector<std::string> labels_ = {})
      : name(std::move(name_)), labels(std::move(labels_)), brackets(std::move(brackets_)), alpha(std::move(alpha_)) {
    const Index n = alpha.rows();
    if (alpha.cols() != n) throw DimensionError(name + ": alpha is not square");
    if (brackets.rows() != n || brackets.cols() != n * n)
      throw DimensionError(name + ": bracket table must be n × n²");
    if (labels.empty())
      for (Index i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    if (static_cast<Index>(labels.size()) != n) throw DimensionError(name + ": label count != dim");
  }

  /// Zero bracket with the given twist.
  static HomAlgebra abelian(std::string name, Mat<S> alpha, std::vector<std::string> labels = {}) {
    const Index n = alpha.rows();
    return HomAlgebra(std::move(name), Mat<S>::Zero(n, n * n), std::move(alpha), std::move(labels));
  }

  [[nodiscard]] Index dim() const { return alpha.rows(); }
  [[nodiscard]] TensorIndex tensor() const { return {dim(), dim()}; }

  /// Structure constant c[i][j][k].
  [[nodiscard]] const S& c(Index i, Index j, Index k) const { return brackets(k, i * dim() + j); }
  void set_bracket(Index i, Index j, const Vec<S>& value) { brackets.col(i * dim() + j) = value; }
  [[nodiscard]] Vec<S> bracket_of_basis(Index i, Index j) const { return brackets.col(i * dim() + j); }

  friend bool operator==(const HomAlgebra& a, const HomAlgebra& b) {
    return a.dim() == b.dim() && a.brackets == b.brackets && a.alpha == b.alpha;
  }
};

template <class S>
struct HomMorphism {
  HomAlgebra<S> src;
  HomAlgebra<S> dst;
  Mat<S> map;  // dst.dim × src.dim

  HomMorphism() = default;
  HomMorphism(HomAlgebra<S> src_, HomAlgebra<S> dst_, Mat<S> map_)
      : src(std::move(src_)), dst(std::move(dst_)), map(std::move(map_)) {
    if (map.rows() != dst.dim() || map.cols() != src.dim())
      throw DimensionError("morphism " + src.name + " -> " + dst.name + ": matrix shape mismatch");
  }
};

/// Outcome of a mechanical identity check. `witness` holds the basis indices
/// of the first violating tuple in lexicographic order.
struct CheckResult {
  bool ok = true;
  std::string what;
  std::vector<Index> witness;
  std::string detail;

  explicit operator bool() const { return ok; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string what, std::vector<Index> witness, std::string detail = {}) {
    return {false, std::move(what), std::move(witness), std::move(detail)};
  }
};

struct NamedCheck {
  std::string name;
  CheckResult result;
};

using CheckList = std::vector<NamedCheck>;

inline bool all_pass(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.result.ok) return false;
  return true;
}

inline CheckResult expect(bool condition, std::string what = {}) {
  return condition ? CheckResult::pass() : CheckResult::fail(std::move(what), {});
}

// ---------------------------------------------------------------------------
// Evaluation

template <class S>
Vec<S> bracket(const HomAlgebra<S>& L, const Vec<S>& x, const Vec<S>& y) {
  if (x.size() != L.dim() || y.size() != L.dim()) throw DimensionError("bracket: vector length != dim");
  return L.brackets * kron(x, y);
}

/// Matrix of y ↦ [x, y].
template <class S>
Mat<S> left_mult(const HomAlgebra<S>& L, const Vec<S>& x) {
  const Index n = L.dim();
  Mat<S> m = Mat<S>::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (!is_zero(x(i))) m += x(i) * L.brackets.middleCols(i * n, n);
  return m;
}

/// Matrix of x ↦ [x, y].
template <class S>
Mat<S> right_mult(const HomAlgebra<S>& L, const Vec<S>& y) {
  const Index n = L.dim();
  Mat<S> m(n, n);
  for (Index i = 0; i < n; ++i) m.col(i) = L.brackets.middleCols(i * n, n) * y;
  return m;
}

namespace detail {

template <class S>
std::optional<Index> first_nonzero_column(const Mat<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return j;
  return std::nullopt;
}

/// Reorders the columns of an n × (a·b) matrix indexed (p, q) ↦ p·b + q into (q, p).
template <class S>
Mat<S> swap_tensor_columns(const Mat<S>& m, Index a, Index b) {
  Mat<S> out(m.rows(), m.cols());
  for (Index p = 0; p < a; ++p)
    for (Index q = 0; q < b; ++q) out.col(q * a + p) = m.col(p * b + q);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Identities

/// [α(x),[y,z]] = [[x,y],α(z)] − [[x,z],α(y)] on all basis triples.
template <class S>
CheckResult check_hom_leibniz(const HomAlgebra<S>& L) {
  const Index n = L.dim();
  const Mat<S>& B = L.brackets;
  for (Index i = 0; i < n; ++i) {
    const Mat<S> lhs = left_mult(L, Vec<S>(L.alpha.col(i))) * B;
    const Mat<S> first = B * kron(B.middleCols(i * n, n), L.alpha);
    const Mat<S> second = detail::swap_tensor_columns(first, n, n);
    if (auto col = detail::first_nonzero_column(Mat<S>(lhs - first + second)))
      return CheckResult::fail("hom-leibniz", {i, *col / n, *col % n});
  }
  return CheckResult::pass();
}

/// α[b_i, b_j] = [α b_i, α b_j] on all basis pairs.
template <class S>
CheckResult check_multiplicative(const HomAlgebra<S>& L) {
  const Mat<S> defect = L.alpha * L.brackets - L.brackets * kron(L.alpha, L.alpha);
  if (auto col = detail::first_nonzero_column(defect))
    return CheckResult::fail("multiplicative", {*col / L.dim(), *col % L.dim()});
  return CheckResult::pass();
}

/// Bracket and twist compatibility of a linear map between algebras.
template <class S>
CheckResult check_morphism(const HomAlgebra<S>& src, const HomAlgebra<S>& dst, const Mat<S>& f) {
  if (f.rows() != dst.dim() || f.cols() != src.dim()) throw DimensionError("check_morphism: shape mismatch");
  const Mat<S> bracket_defect = f * src.brackets - dst.brackets * kron(f, f);
  if (auto col = detail::first_nonzero_column(bracket_defect))
    return CheckResult::fail("bracket", {*col / src.dim(), *col % src.dim()});
  const Mat<S> twist_defect = f * src.alpha - dst.alpha * f;
  if (auto col = detail::first_nonzero_column(twist_defect)) return CheckResult::fail("twist", {*col});
  return CheckResult::pass();
}

template <class S>
CheckResult check_morphism(const HomMorphism<S>& f) {
  return check_morphism(f.src, f.dst, f.map);
}

template <class S>
bool is_valid(const HomAlgebra<S>& L) {
  return check_hom_leibniz(L).ok && check_multiplicative(L).ok;
}

/// Structure constants are antisymmetric ([x,x] = 0 on the polarization basis).
template <class S>
bool is_antisymmetric(const HomAlgebra<S>& L) {
  const Index n = L.dim();
  for (Index i = 0; i < n; ++i) {
    if (!is_zero_matrix(L.bracket_of_basis(i, i))) return false;
    for (Index j = i + 1; j < n; ++j)
      if (!is_zero_matrix(Vec<S>(L.bracket_of_basis(i, j) + L.bracket_of_basis(j, i)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Morphism helpers

template <class S>
HomMorphism<S> identity_morphism(const HomAlgebra<S>& L) {
  return {L, L, identity<S>(L.dim())};
}

template <class S>
HomMorphism<S> compose(const HomMorphism<S>& g, const HomMorphism<S>& f) {
  if (f.dst.dim() != g.src.dim()) throw DimensionError("compose: inner target != outer source");
  return {f.src, g.dst, Mat<S>(g.map * f.map)};
}

// ---------------------------------------------------------------------------
// Subspaces

template <class S>
Subspace<S> commutator(const HomAlgebra<S>& L, const Subspace<S>& H, const Subspace<S>& K) {
  const Index n = L.dim();
  if (H.ambient_dim() != n || K.ambient_dim() != n) throw DimensionError("commutator: ambient != dim");
  Mat<S> gens(n, H.dim() * K.dim());
  for (Index a = 0; a < H.dim(); ++a) {
    const Mat<S> left = left_mult(L, H.vector(a));
    gens.middleCols(a * K.dim(), K.dim()) = left * K.basis_columns();
  }
  return Subspace<S>::span_columns(gens);
}

template <class S>
Subspace<S> derived(const HomAlgebra<S>& L) {
  return image(L.brackets);
}

template <class S>
Subspace<S> alpha_image(const HomAlgebra<S>& L) {
  return image(L.alpha);
}

template <class S>
bool is_subalgebra(const HomAlgebra<S>& L, const Subspace<S>& H) {
  return H.contains(commutator(L, H, H)) && H.contains(image(L.alpha, H));
}

template <class S>
bool is_two_sided_ideal(const HomAlgebra<S>& L, const Subspace<S>& H) {
  const auto full = Subspace<S>::full(L.dim());
  return H.contains(image(L.alpha, H)) && H.contains(commutator(L, H, full)) && H.contains(commutator(L, full, H));
}

/// {x : [x, b_j] = 0 = [b_j, x] for all j}.
template <class S>
Subspace<S> center(const HomAlgebra<S>& L) {
  const Index n = L.dim();
  Mat<S> stacked(2 * n * n, n);
  for (Index j = 0; j < n; ++j) {
    stacked.middleRows(2 * j * n, n) = right_mult(L, unit_vector<S>(n, j));
    stacked.middleRows((2 * j + 1) * n, n) = L.brackets.middleCols(j * n, n);
  }
  return kernel(stacked);
}

/// Span of all squares [x, x], via the polarization basis
/// {[b_i,b_i]} ∪ {[b_i,b_j] + [b_j,b_i]}.
template <class S>
Subspace<S> ann_ideal(const HomAlgebra<S>& L) {
  const Index n = L.dim();
  Mat<S> gens(n, n * (n + 1) / 2);
  Index g = 0;
  for (Index i = 0; i < n; ++i) {
    gens.col(g++) = L.bracket_of_basis(i, i);
    for (Index j = i + 1; j < n; ++j) gens.col(g++) = L.bracket_of_basis(i, j) + L.bracket_of_basis(j, i);
  }
  return Subspace<S>::span_columns(gens);
}

template <class S>
bool is_perfect(const HomAlgebra<S>& L) {
  return derived(L).is_full();
}

/// L = [α(L), α(L)].
template <class S>
bool is_alpha_perfect(const HomAlgebra<S>& L) {
  const auto a = alpha_image(L);
  return commutator(L, a, a).is_full();
}

/// Smallest two-sided ideal closed under α that contains `gens`.
template <class S>
Subspace<S> ideal_closure(const HomAlgebra<S>& L, Subspace<S> gens) {
  const auto full = Subspace<S>::full(L.dim());
  for (;;) {
    Subspace<S> next = subspace_sum(gens, image(L.alpha, gens));
    next = subspace_sum(next, commutator(L, gens, full));
    next = subspace_sum(next, commutator(L, full, gens));
    if (next.dim() == gens.dim()) return gens;
    gens = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Constructions

template <class S>
struct QuotientAlgebra {
  HomAlgebra<S> algebra;
  HomMorphism<S> projection;
  QuotientSpace<S> space;
};

/// L / H on the non-pivot coordinates of H.
template <class S>
QuotientAlgebra<S> quotient_algebra(const HomAlgebra<S>& L, const Subspace<S>& H, std::string name = {}) {
  if (H.ambient_dim() != L.dim()) throw DimensionError("quotient_algebra: ambient != dim");
  if (!is_two_sided_ideal(L, H)) throw PreconditionError("two-sided ideal", "quotient by a subspace that is not an ideal");
  QuotientSpace<S> q(H);
  std::vector<std::string> labels;
  for (Index c : q.representatives()) labels.push_back(L.labels[static_cast<std::size_t>(c)]);
  if (name.empty()) name = L.name + "/H";
  HomAlgebra<S> alg(std::move(name), Mat<S>(q.proj() * L.brackets * kron(q.section(), q.section())),
                    Mat<S>(q.proj() * L.alpha * q.section()), std::move(labels));
  HomMorphism<S> proj(L, alg, q.proj());
  return {std::move(alg), std::move(proj), std::move(q)};
}

/// L / L^ann.
template <class S>
QuotientAlgebra<S> lie_quotient(const HomAlgebra<S>& L) {
  return quotient_algebra(L, ann_ideal(L), L.name + "_Lie");
}

/// (L, [φ-, φ-], φ) for a Leibniz algebra L (α = Id) and an endomorphism φ.
template <class S>
HomAlgebra<S> yau_twist(const HomAlgebra<S>& L, const Mat<S>& phi, std::string name = {}) {
  if (L.alpha != identity<S>(L.dim())) throw PreconditionError("leibniz", "yau_twist needs an algebra with α = Id");
  if (!check_morphism(L, L, phi)) throw PreconditionError("endomorphism", "phi does not preserve the bracket");
  if (name.empty()) name = L.name + "_twisted";
  return HomAlgebra<S>(std::move(name), Mat<S>(L.brackets * kron(phi, phi)), phi, L.labels);
}

/// Defect vectors α[b_i,b_j] − [α b_i, α b_j].
template <class S>
Subspace<S> multiplicativity_defect(const HomAlgebra<S>& L) {
  return image(Mat<S>(L.alpha * L.brackets - L.brackets * kron(L.alpha, L.alpha)));
}

/// Quotient of L by the α-closed two-sided ideal generated by the defect set.
template <class S>
QuotientAlgebra<S> multiplicativization(const HomAlgebra<S>& L) {
  const auto ideal = ideal_closure(L, multiplicativity_defect(L));
  return quotient_algebra(L, ideal, L.name + "_mult");
}

/// The subalgebra H ⊆ L in the coordinates of H's RREF basis, with its inclusion.
template <class S>
HomMorphism<S> subalgebra_inclusion(const HomAlgebra<S>& L, const Subspace<S>& H, std::string name = {}) {
  if (!is_subalgebra(L, H)) throw PreconditionError("subalgebra", "subspace is not closed under bracket and α");
  const Index k = H.dim();
  const Mat<S> V = H.basis_columns();
  Mat<S> B(k, k * k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) B.col(a * k + b) = H.coordinates(bracket(L, Vec<S>(V.col(a)), Vec<S>(V.col(b))));
  Mat<S> alpha(k, k);
  for (Index a = 0; a < k; ++a) alpha.col(a) = H.coordinates(Vec<S>(L.alpha * V.col(a)));
  if (name.empty()) name = L.name + "_sub";
  return {HomAlgebra<S>(std::move(name), std::move(B), std::move(alpha)), L, V};
}

/// A × B with componentwise bracket and twist; basis of A first.
template <class S>
HomAlgebra<S> direct_product(const HomAlgebra<S>& A, const HomAlgebra<S>& B, std::string name = {}) {
  const Index a = A.dim(), b = B.dim(), n = a + b;
  Mat<S> brackets = Mat<S>::Zero(n, n * n);
  for (Index i = 0; i < a; ++i)
    for (Index j = 0; j < a; ++j) brackets.col(i * n + j).head(a) = A.bracket_of_basis(i, j);
  for (Index i = 0; i < b; ++i)
    for (Index j = 0; j < b; ++j) brackets.col((a + i) * n + a + j).tail(b) = B.bracket_of_basis(i, j);
  Mat<S> alpha = Mat<S>::Zero(n, n);
  alpha.topLeftCorner(a, a) = A.alpha;
  alpha.bottomRightCorner(b, b) = B.alpha;
  std::vector<std::string> labels = A.labels;
  labels.insert(labels.end(), B.labels.begin(), B.labels.end());
  if (name.empty()) name = A.name + "x" + B.name;
  return HomAlgebra<S>(std::move(name), std::move(brackets), std::move(alpha), std::move(labels));
}

// ---------------------------------------------------------------------------
// Diagnostics

template <class S>
struct AlgebraReport {
  CheckResult hom_leibniz;
  CheckResult multiplicative;
  bool perfect = false;
  bool alpha_perfect = false;
  bool antisymmetric = false;
  Subspace<S> center;
  Subspace<S> derived;
  Subspace<S> alpha_image;
  Subspace<S> ann_ideal;
  std::vector<std::string> warnings;
};

template <class S>
AlgebraReport<S> analyze(const HomAlgebra<S>& L) {
  AlgebraReport<S> r;
  r.hom_leibniz = check_hom_leibniz(L);
  r.multiplicative = check_multiplicative(L);
  r.perfect = is_perfect(L);
  r.alpha_perfect = is_alpha_perfect(L);
  r.antisymmetric = is_antisymmetric(L);
  r.center = homleib::center(L);
  r.derived = homleib::derived(L);
  r.alpha_image = homleib::alpha_image(L);
  r.ann_ideal = homleib::ann_ideal(L);
  if (!r.alpha_image.is_full() && !is_two_sided_ideal(L, r.center))
    r.warnings.push_back("alpha is not surjective and the center is not a Hom-ideal");
  return r;
}

}  // namespace homleib
