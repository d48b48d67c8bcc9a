#pragma once

#include <random>

#include "homleib/exactlin.hpp"
#include "homleib/homalg.hpp"

namespace homleib::testing {

// Small exact values: integers in [-3, 3] and a few halves/thirds.
inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  return Rational(num(rng), den(rng));
}

inline Mat<Rational> random_matrix(std::mt19937_64& rng, Index rows, Index cols, double density = 1.0) {
  std::bernoulli_distribution keep(density);
  Mat<Rational> m = Mat<Rational>::Zero(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = small_rational(rng);
  return m;
}

inline Mat<Rational> mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Mat<Rational> m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

inline Vec<Rational> vec(std::initializer_list<Rational> xs) {
  Vec<Rational> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

/// Endomorphism candidates: random small matrices that pass the morphism check.
inline std::vector<Mat<Rational>> random_endomorphisms(std::mt19937_64& rng, const HomAlgebra<Rational>& L,
                                                        std::size_t count, int attempts = 4000) {
  std::vector<Mat<Rational>> out;
  std::uniform_int_distribution<int> pick(0, 2);
  for (int t = 0; t < attempts && out.size() < count; ++t) {
    // Sparse candidates with entries in {-1, 0, 1} hit endomorphisms often enough.
    Mat<Rational> m(L.dim(), L.dim());
    for (Index i = 0; i < L.dim(); ++i)
      for (Index j = 0; j < L.dim(); ++j) m(i, j) = Rational(pick(rng) - 1);
    if (check_morphism(L, L, m)) out.push_back(m);
  }
  return out;
}

}  // namespace homleib::testing
