#pragma once

#include <random>

#include "metanil/exact.hpp"

namespace metanil::testutil {

inline Rat rand_rat(std::mt19937_64& rng, int num_bound = 9, int den_bound = 3) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rat rand_int_rat(std::mt19937_64& rng, int bound = 4) {
  std::uniform_int_distribution<int> num(-bound, bound);
  return Rat(num(rng));
}

inline QVec rand_vec(std::mt19937_64& rng, int n, int num_bound = 9, int den_bound = 3) {
  QVec v(n);
  for (auto& x : v) x = rand_rat(rng, num_bound, den_bound);
  return v;
}

inline QMat rand_mat(std::mt19937_64& rng, int r, int c, int num_bound = 9,
                     int den_bound = 3) {
  QMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rand_rat(rng, num_bound, den_bound);
  return m;
}

// random invertible matrix built from elementary row operations
inline QMat rand_invertible(std::mt19937_64& rng, int n, int steps = 12) {
  QMat m = QMat::identity(n);
  std::uniform_int_distribution<int> row(0, n - 1), coeff(-2, 2);
  for (int s = 0; s < steps; ++s) {
    int i = row(rng), j = row(rng);
    int c = coeff(rng);
    if (i == j || c == 0) continue;
    for (int k = 0; k < n; ++k) m(i, k) += Rat(c) * m(j, k);
  }
  return m;
}

// random unimodular integer matrix (product of integer elementary operations)
inline QMat rand_unimodular(std::mt19937_64& rng, int n, int steps = 14) {
  return rand_invertible(rng, n, steps);
}

}  // namespace metanil::testutil
