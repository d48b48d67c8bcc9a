#pragma once

// Definition files: versioned JSON documents with a "kind" field.
//
//   algebra          name, field, dim, basis, brackets [[i, j, [coeffs]]], alpha rows
//   action           actor, target (algebra refs), lambda [[i, j, [coeffs]]], rho
//   split_extension  M, B, C (algebra refs), i, pi, s (matrix rows)
//   cover            mode explicit | universal | quotient (see read_cover)
//   matrix           rows
//
// An algebra reference is either an inline algebra object or a path string
// relative to the referring file. Scalars are exact fraction strings.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "homleib/centext.hpp"

namespace homleib::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

struct Document {
  json value;
  std::string source;           // for diagnostics
  std::filesystem::path dir;    // base for relative references
};

/// Reads and parses a file; syntax errors carry line and column.
Document load_document(const std::filesystem::path& path);
Document parse_document(std::string_view text, std::string source, std::filesystem::path dir);

[[noreturn]] void fail(const Document& doc, const std::string& pointer, const std::string& message);

/// Field tag of a document ("Q" or "GF(p)"), following algebra references
/// when the document itself has none.
std::string field_of(const Document& doc);

/// 0 for "Q", p for "GF(p)".
std::uint64_t parse_field(const std::string& tag, const Document& doc);

const json& member(const Document& doc, const json& node, const std::string& pointer, const char* key);
std::string expect_kind(const Document& doc, std::initializer_list<const char*> kinds);

/// Resolves an algebra reference (inline object or relative path).
Document resolve(const Document& doc, const json& node, const std::string& pointer);

/// Compact rendering: one top-level member per line, arrays of arrays one
/// element per line.
std::string format(const json& value);

// ---------------------------------------------------------------------------

template <class S>
S read_scalar(const Document& doc, const json& node, const std::string& pointer) {
  try {
    if (node.is_string()) return ScalarTraits<S>::parse(node.get<std::string>());
    if (node.is_number_integer()) return S(node.get<long>());
  } catch (const std::exception& e) {
    fail(doc, pointer, e.what());
  }
  fail(doc, pointer, "expected an exact scalar (integer or fraction string)");
}

template <class S>
Mat<S> read_matrix(const Document& doc, const json& node, const std::string& pointer, Index rows, Index cols) {
  if (!node.is_array()) fail(doc, pointer, "expected an array of rows");
  if (rows >= 0 && static_cast<Index>(node.size()) != rows)
    fail(doc, pointer, "expected " + std::to_string(rows) + " rows, got " + std::to_string(node.size()));
  const Index r = static_cast<Index>(node.size());
  if (cols < 0) cols = r == 0 ? 0 : static_cast<Index>(node[0].is_array() ? node[0].size() : 0);
  Mat<S> m(r, cols);
  for (Index i = 0; i < r; ++i) {
    const std::string row_ptr = pointer + "/" + std::to_string(i);
    const json& row = node[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      fail(doc, row_ptr, "expected a row of " + std::to_string(cols) + " scalars");
    for (Index j = 0; j < cols; ++j)
      m(i, j) = read_scalar<S>(doc, row[static_cast<std::size_t>(j)], row_ptr + "/" + std::to_string(j));
  }
  return m;
}

/// Sparse bilinear table [[i, j, [coeffs]]] into an out × (left · right) matrix.
template <class S>
Mat<S> read_table(const Document& doc, const json& node, const std::string& pointer, Index left, Index right,
                  Index out) {
  if (!node.is_array()) fail(doc, pointer, "expected a list of [i, j, [coefficients]] entries");
  Mat<S> t = Mat<S>::Zero(out, left * right);
  std::vector<bool> seen(static_cast<std::size_t>(left * right), false);
  for (std::size_t e = 0; e < node.size(); ++e) {
    const std::string p = pointer + "/" + std::to_string(e);
    const json& entry = node[e];
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer())
      fail(doc, p, "expected [i, j, [coefficients]]");
    const long i = entry[0].get<long>(), j = entry[1].get<long>();
    if (i < 0 || i >= left) fail(doc, p + "/0", "index " + std::to_string(i) + " out of range");
    if (j < 0 || j >= right) fail(doc, p + "/1", "index " + std::to_string(j) + " out of range");
    const auto col = static_cast<std::size_t>(i * right + j);
    if (seen[col]) fail(doc, p, "duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    seen[col] = true;
    const json& coeffs = entry[2];
    if (!coeffs.is_array() || static_cast<Index>(coeffs.size()) != out)
      fail(doc, p + "/2", "expected " + std::to_string(out) + " coefficients");
    for (Index k = 0; k < out; ++k)
      t(k, static_cast<Index>(col)) = read_scalar<S>(doc, coeffs[static_cast<std::size_t>(k)], p + "/2/" + std::to_string(k));
  }
  return t;
}

template <class S>
json write_scalar(const S& x) {
  return ScalarTraits<S>::format(x);
}

template <class S>
json write_matrix(const Mat<S>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(write_scalar(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
json write_table(const Mat<S>& t, Index left, Index right) {
  json entries = json::array();
  for (Index i = 0; i < left; ++i)
    for (Index j = 0; j < right; ++j) {
      const auto col = t.col(i * right + j);
      if (is_zero_matrix(col)) continue;
      json coeffs = json::array();
      for (Index k = 0; k < t.rows(); ++k) coeffs.push_back(write_scalar(col(k)));
      entries.push_back(json::array({i, j, std::move(coeffs)}));
    }
  return entries;
}

template <class S>
HomAlgebra<S> read_algebra(const Document& doc) {
  expect_kind(doc, {"algebra"});
  const json& v = doc.value;
  const json& dim_node = member(doc, v, "", "dim");
  if (!dim_node.is_number_integer() || dim_node.get<long>() < 0) fail(doc, "/dim", "expected a nonnegative integer");
  const Index n = dim_node.get<long>();
  std::string name = v.contains("name") && v["name"].is_string() ? v["name"].get<std::string>() : doc.source;
  std::vector<std::string> labels;
  if (v.contains("basis")) {
    const json& b = v["basis"];
    if (!b.is_array() || static_cast<Index>(b.size()) != n) fail(doc, "/basis", "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) fail(doc, "/basis/" + std::to_string(i), "expected a string label");
      labels.push_back(b[i].get<std::string>());
    }
  }
  Mat<S> brackets = read_table<S>(doc, member(doc, v, "", "brackets"), "/brackets", n, n, n);
  Mat<S> alpha = read_matrix<S>(doc, member(doc, v, "", "alpha"), "/alpha", n, n);
  return HomAlgebra<S>(std::move(name), std::move(brackets), std::move(alpha), std::move(labels));
}

template <class S>
HomAlgebra<S> read_algebra_ref(const Document& doc, const json& node, const std::string& pointer) {
  return read_algebra<S>(resolve(doc, node, pointer));
}

template <class S>
json write_algebra(const HomAlgebra<S>& L) {
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "algebra";
  out["name"] = L.name;
  out["field"] = ScalarTraits<S>::field_name();
  out["dim"] = L.dim();
  out["basis"] = L.labels;
  out["brackets"] = write_table(L.brackets, L.dim(), L.dim());
  out["alpha"] = write_matrix(L.alpha);
  return out;
}

/// Reads an action document. Explicit actor/target override the references
/// in the file; at least one source must be present.
template <class S>
HomAction<S> read_action(const Document& doc, const HomAlgebra<S>* actor = nullptr,
                         const HomAlgebra<S>* target = nullptr) {
  expect_kind(doc, {"action"});
  const json& v = doc.value;
  HomAlgebra<S> L = actor ? *actor : read_algebra_ref<S>(doc, member(doc, v, "", "actor"), "/actor");
  HomAlgebra<S> M = target ? *target : read_algebra_ref<S>(doc, member(doc, v, "", "target"), "/target");
  const Index l = L.dim(), m = M.dim();
  Mat<S> lambda = read_table<S>(doc, member(doc, v, "", "lambda"), "/lambda", l, m, m);
  Mat<S> rho = read_table<S>(doc, member(doc, v, "", "rho"), "/rho", m, l, m);
  return HomAction<S>(std::move(L), std::move(M), std::move(lambda), std::move(rho));
}

template <class S>
json write_action(const HomAction<S>& a, const std::string& actor_ref, const std::string& target_ref) {
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "action";
  out["actor"] = actor_ref;
  out["target"] = target_ref;
  out["lambda"] = write_table(a.lambda, a.actor.dim(), a.target.dim());
  out["rho"] = write_table(a.rho, a.target.dim(), a.actor.dim());
  return out;
}

template <class S>
SplitExtension<S> read_split_extension(const Document& doc) {
  expect_kind(doc, {"split_extension"});
  const json& v = doc.value;
  SplitExtension<S> se;
  se.M = read_algebra_ref<S>(doc, member(doc, v, "", "M"), "/M");
  se.B = read_algebra_ref<S>(doc, member(doc, v, "", "B"), "/B");
  se.C = read_algebra_ref<S>(doc, member(doc, v, "", "C"), "/C");
  se.i = read_matrix<S>(doc, member(doc, v, "", "i"), "/i", se.B.dim(), se.M.dim());
  se.pi = read_matrix<S>(doc, member(doc, v, "", "pi"), "/pi", se.C.dim(), se.B.dim());
  se.s = read_matrix<S>(doc, member(doc, v, "", "s"), "/s", se.B.dim(), se.C.dim());
  return se;
}

template <class S>
Mat<S> read_matrix_document(const Document& doc, Index rows = -1, Index cols = -1) {
  expect_kind(doc, {"matrix"});
  return read_matrix<S>(doc, member(doc, doc.value, "", "rows"), "/rows", rows, cols);
}

template <class S>
json write_matrix_document(const Mat<S>& m) {
  json out;
  out["format_version"] = kFormatVersion;
  out["kind"] = "matrix";
  out["rows"] = write_matrix(m);
  return out;
}

/// An α-cover f: L′ → L.
///   explicit   source, target (algebra refs), map (matrix rows)
///   universal  base: U_α: uce_α(base) → base
///   quotient   base, pairs [[i, j], ...]: uce_α(base)/D → base where D is
///              Ker U_α intersected with the span of the classes {b_i, b_j}
template <class S>
HomMorphism<S> read_cover(const Document& doc) {
  expect_kind(doc, {"cover"});
  const json& v = doc.value;
  const json& mode_node = member(doc, v, "", "mode");
  const std::string mode = mode_node.is_string() ? mode_node.get<std::string>() : std::string();
  if (mode == "explicit") {
    HomAlgebra<S> src = read_algebra_ref<S>(doc, member(doc, v, "", "source"), "/source");
    HomAlgebra<S> dst = read_algebra_ref<S>(doc, member(doc, v, "", "target"), "/target");
    Mat<S> map = read_matrix<S>(doc, member(doc, v, "", "map"), "/map", dst.dim(), src.dim());
    return HomMorphism<S>(std::move(src), std::move(dst), std::move(map));
  }
  if (mode != "universal" && mode != "quotient") fail(doc, "/mode", "expected explicit, universal or quotient");
  const HomAlgebra<S> base = read_algebra_ref<S>(doc, member(doc, v, "", "base"), "/base");
  if (!is_alpha_perfect(base)) throw PreconditionError("alpha-perfect", base.name + " is not alpha-perfect");
  const UceResult<S> r = uce_alpha(base);
  if (mode == "universal") return r.u;
  const json& pairs = member(doc, v, "", "pairs");
  if (!pairs.is_array()) fail(doc, "/pairs", "expected an array of index pairs");
  const Index n = base.dim();
  Mat<S> classes(r.dim(), static_cast<Index>(pairs.size()));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const json& p = pairs[k];
    const std::string ptr = "/pairs/" + std::to_string(k);
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      fail(doc, ptr, "expected [i, j]");
    const long i = p[0].get<long>(), j = p[1].get<long>();
    if (i < 0 || j < 0 || i >= n || j >= n) fail(doc, ptr, "index out of range");
    classes.col(static_cast<Index>(k)) = r.pair(unit_vector<S>(n, i), unit_vector<S>(n, j));
  }
  const Subspace<S> D = subspace_intersect(r.hl2, image(classes));
  const QuotientAlgebra<S> q = quotient_algebra(r.alg, D, "uce_alpha(" + base.name + ")/D");
  // D ⊆ Ker U_α, so U_α factors through the quotient via its section.
  return HomMorphism<S>(q.algebra, base, Mat<S>(r.u.map * q.space.section()));
}

}  // namespace homleib::io
