#pragma once

// Exact linear algebra over a field scalar S (Rational or Fp): row reduction,
// subspaces in canonical reduced row echelon form, quotient spaces with a
// fixed section, and tensor-square indexing.

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/KroneckerProduct>

#include "homleib/errors.hpp"
#include "homleib/scalar.hpp"

namespace homleib {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
Vec<S> unit_vector(Index n, Index i) {
  Vec<S> v = Vec<S>::Zero(n);
  v(i) = S(1);
  return v;
}

template <class S>
Mat<S> identity(Index n) {
  return Mat<S>::Identity(n, n);
}

/// Kronecker product; for vectors x ⊗ y has coordinate i·dim(y) + j.
template <class A, class B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using S = typename A::Scalar;
  return Mat<S>(Eigen::kroneckerProduct(a.derived(), b.derived()));
}

template <class S>
struct RowEchelon {
  Mat<S> form;
  std::vector<Index> pivots;
  [[nodiscard]] Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
template <class S>
RowEchelon<S> rref(Mat<S> m) {
  RowEchelon<S> out;
  const Index rows = m.rows(), cols = m.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index r = row; r < rows; ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (Index c = col; c < cols; ++c)
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.form = std::move(m);
  return out;
}

template <class S>
Index rank(const Mat<S>& m) {
  return rref(m).rank();
}

/// A linear subspace of S^n stored as the rows of its RREF basis.
template <class S>
class Subspace {
 public:
  Subspace() = default;

  /// Row space of `rows` (each row a vector of S^ambient).
  static Subspace span(const Mat<S>& rows, Index ambient) {
    if (rows.rows() > 0 && rows.cols() != ambient) throw DimensionError("Subspace::span: row length != ambient dim");
    Subspace s;
    s.ambient_ = ambient;
    if (rows.rows() == 0) {
      s.basis_ = Mat<S>(0, ambient);
      return s;
    }
    RowEchelon<S> e = rref(rows);
    s.basis_ = e.form.topRows(e.rank());
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  /// Span of the columns of `cols`.
  static Subspace span_columns(const Mat<S>& cols) { return span(cols.transpose(), cols.rows()); }

  static Subspace zero(Index n) { return span(Mat<S>(0, n), n); }
  static Subspace full(Index n) { return span(identity<S>(n), n); }

  [[nodiscard]] Index ambient_dim() const { return ambient_; }
  [[nodiscard]] Index dim() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_; }

  /// dim × ambient, rows in RREF.
  [[nodiscard]] const Mat<S>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<Index>& pivots() const { return pivots_; }
  /// ambient × dim, basis vectors as columns.
  [[nodiscard]] Mat<S> basis_columns() const { return basis_.transpose(); }
  [[nodiscard]] Vec<S> vector(Index r) const { return basis_.row(r).transpose(); }

  /// Removes the pivot components; zero iff v lies in the subspace.
  [[nodiscard]] Vec<S> residue(Vec<S> v) const {
    check_length(v);
    for (Index r = 0; r < dim(); ++r) {
      const S c = v(pivots_[r]);
      if (!homleib::is_zero(c)) v -= c * vector(r);
    }
    return v;
  }

  [[nodiscard]] bool contains(const Vec<S>& v) const { return is_zero_matrix(residue(v)); }

  [[nodiscard]] bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
    for (Index r = 0; r < other.dim(); ++r)
      if (!contains(other.vector(r))) return false;
    return true;
  }

  /// Coordinates of a member vector in the RREF basis.
  [[nodiscard]] Vec<S> coordinates(const Vec<S>& v) const {
    if (!contains(v)) throw PreconditionError("member", "vector is not in the subspace");
    Vec<S> c(dim());
    for (Index r = 0; r < dim(); ++r) c(r) = v(pivots_[r]);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  void check_length(const Vec<S>& v) const {
    if (v.size() != ambient_) throw DimensionError("Subspace: vector length != ambient dim");
  }

  Index ambient_ = 0;
  Mat<S> basis_;
  std::vector<Index> pivots_;
};

/// Right null space {x : m x = 0}.
template <class S>
Subspace<S> kernel(const Mat<S>& m) {
  const Index n = m.cols();
  RowEchelon<S> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Mat<S> gens(n - e.rank(), n);
  Index g = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    gens.row(g).setZero();
    gens(g, free) = S(1);
    for (Index r = 0; r < e.rank(); ++r) gens(g, e.pivots[static_cast<std::size_t>(r)]) = -e.form(r, free);
    ++g;
  }
  return Subspace<S>::span(gens, n);
}

/// Column space of m.
template <class S>
Subspace<S> image(const Mat<S>& m) {
  return Subspace<S>::span_columns(m);
}

/// m(s) for a subspace s of the source.
template <class S>
Subspace<S> image(const Mat<S>& m, const Subspace<S>& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("image: matrix/subspace mismatch");
  return Subspace<S>::span_columns(Mat<S>(m * s.basis_columns()));
}

/// {x : m x ∈ s}.
template <class S>
Subspace<S> preimage(const Mat<S>& m, const Subspace<S>& s) {
  if (m.rows() != s.ambient_dim()) throw DimensionError("preimage: matrix/subspace mismatch");
  // m x ∈ s  ⟺  annihilators of s vanish on m x.
  const Subspace<S> annihilator = kernel(s.basis());
  return kernel(Mat<S>(annihilator.basis() * m));
}

template <class S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_sum: ambient mismatch");
  Mat<S> rows(a.dim() + b.dim(), a.ambient_dim());
  rows << a.basis(), b.basis();
  return Subspace<S>::span(rows, a.ambient_dim());
}

template <class S>
Subspace<S> subspace_intersect(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_intersect: ambient mismatch");
  const Index n = a.ambient_dim();
  // Aᵀu = Bᵀw  ⟺  (u, w) ∈ ker [Aᵀ | −Bᵀ].
  Mat<S> stacked(n, a.dim() + b.dim());
  stacked << a.basis_columns(), Mat<S>(-b.basis_columns());
  const Subspace<S> k = kernel(stacked);
  Mat<S> vectors = a.basis_columns() * k.basis_columns().topRows(a.dim());
  return Subspace<S>::span_columns(vectors);
}

template <class S>
bool member(const Vec<S>& v, const Subspace<S>& s) {
  return s.contains(v);
}

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("solve: rhs length != rows");
  Mat<S> augmented(m.rows(), m.cols() + 1);
  augmented << m, rhs;
  const RowEchelon<S> e = rref(augmented);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(m.cols());
  for (Index r = 0; r < e.rank(); ++r) x(e.pivots[static_cast<std::size_t>(r)]) = e.form(r, m.cols());
  return x;
}

template <class S>
bool is_injective(const Mat<S>& m) {
  return rank(m) == m.cols();
}

template <class S>
bool is_surjective(const Mat<S>& m) {
  return rank(m) == m.rows();
}

template <class S>
bool is_bijective(const Mat<S>& m) {
  return m.rows() == m.cols() && is_injective(m);
}

/// r with m r = I; requires m surjective.
template <class S>
Mat<S> right_inverse(const Mat<S>& m) {
  Mat<S> r(m.cols(), m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    auto x = solve(m, unit_vector<S>(m.rows(), i));
    if (!x) throw PreconditionError("surjective", "right_inverse of a non-surjective map");
    r.col(i) = *x;
  }
  return r;
}

/// l with l m = I; requires m injective.
template <class S>
Mat<S> left_inverse(const Mat<S>& m) {
  try {
    return right_inverse(Mat<S>(m.transpose())).transpose();
  } catch (const PreconditionError&) {
    throw PreconditionError("injective", "left_inverse of a non-injective map");
  }
}

template <class S>
Mat<S> inverse(const Mat<S>& m) {
  if (!is_bijective(m)) throw PreconditionError("bijective", "inverse of a singular matrix");
  return right_inverse(m);
}

/// V / K with the non-pivot section: quotient coordinates are the coordinates
/// of V that are not pivots of K's RREF basis.
template <class S>
class QuotientSpace {
 public:
  QuotientSpace() = default;

  explicit QuotientSpace(Subspace<S> kernel) : kernel_(std::move(kernel)) {
    const Index n = kernel_.ambient_dim();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (Index p : kernel_.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    for (Index c = 0; c < n; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) representatives_.push_back(c);
    const Index q = static_cast<Index>(representatives_.size());
    proj_ = Mat<S>::Zero(q, n);
    section_ = Mat<S>::Zero(n, q);
    for (Index a = 0; a < q; ++a) {
      const Index c = representatives_[static_cast<std::size_t>(a)];
      section_(c, a) = S(1);
      proj_(a, c) = S(1);
      for (Index r = 0; r < kernel_.dim(); ++r) proj_(a, kernel_.pivots()[static_cast<std::size_t>(r)]) = -kernel_.basis()(r, c);
    }
  }

  [[nodiscard]] Index ambient_dim() const { return kernel_.ambient_dim(); }
  [[nodiscard]] Index dim() const { return proj_.rows(); }
  [[nodiscard]] const Subspace<S>& kernel() const { return kernel_; }
  /// dim × ambient.
  [[nodiscard]] const Mat<S>& proj() const { return proj_; }
  /// ambient × dim; proj · section = I.
  [[nodiscard]] const Mat<S>& section() const { return section_; }
  /// Ambient coordinates used as class representatives.
  [[nodiscard]] const std::vector<Index>& representatives() const { return representatives_; }

  [[nodiscard]] Vec<S> project(const Vec<S>& v) const { return proj_ * v; }
  [[nodiscard]] Vec<S> lift(const Vec<S>& c) const { return section_ * c; }

 private:
  Subspace<S> kernel_;
  Mat<S> proj_;
  Mat<S> section_;
  std::vector<Index> representatives_;
};

template <class S>
QuotientSpace<S> quotient(Index ambient_dim, const Subspace<S>& kernel) {
  if (kernel.ambient_dim() != ambient_dim) throw DimensionError("quotient: kernel ambient mismatch");
  return QuotientSpace<S>(kernel);
}

/// The map q_src → q_dst induced by m, or nullopt when m(K_src) ⊄ K_dst.
template <class S>
std::optional<Mat<S>> induced_map(const QuotientSpace<S>& src, const QuotientSpace<S>& dst, const Mat<S>& m) {
  if (m.cols() != src.ambient_dim() || m.rows() != dst.ambient_dim())
    throw DimensionError("induced_map: matrix does not map source ambient to destination ambient");
  if (!is_zero_matrix(Mat<S>(dst.proj() * m * src.kernel().basis_columns()))) return std::nullopt;
  return Mat<S>(dst.proj() * m * src.section());
}

/// Coordinates of L ⊗ R: (i, j) ↔ i · right + j.
struct TensorIndex {
  Index left = 0;
  Index right = 0;

  [[nodiscard]] Index dim() const { return left * right; }
  [[nodiscard]] Index operator()(Index i, Index j) const { return i * right + j; }
  [[nodiscard]] std::pair<Index, Index> split(Index k) const { return {k / right, k % right}; }
};

}  // namespace homleib
