#pragma once

// Test-only reference computations. None of these share code paths with the
// library routines they check: determinants by cofactor expansion, pullbacks
// by wedging generator images, coincidences by scanning a rational grid.

#include "coincidence/affine_solver.hpp"
#include "coincidence/exterior.hpp"
#include "coincidence/integer_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using coincidence::IntegerMatrix;
using coincidence::Rational;
using coincidence::exterior::ExteriorElement;

inline int64_t cofactor_det(const IntegerMatrix &a) {
  const int n = a.rows();
  if (n == 1)
    return a(0, 0);
  int64_t det = 0;
  for (int c = 0; c < n; ++c) {
    if (a(0, c) == 0)
      continue;
    std::vector<int> rows, cols;
    for (int r = 1; r < n; ++r)
      rows.push_back(r);
    for (int cc = 0; cc < n; ++cc)
      if (cc != c)
        cols.push_back(cc);
    const int64_t sub = cofactor_det(a.minor(rows, cols));
    det += (c % 2 == 0 ? 1 : -1) * a(0, c) * sub;
  }
  return det;
}

/// pullback(A, e^S) computed as the wedge of the pulled-back generators
/// e^i |-> sum_j A(i-1, j-1) e^j.
inline ExteriorElement pullback_by_wedge(const IntegerMatrix &a,
                                         const ExteriorElement &x) {
  const int m = a.cols();
  ExteriorElement out(m);
  for (const auto &[subset, coeff] : x.terms()) {
    ExteriorElement prod = ExteriorElement::scalar(m, coeff);
    for (int i : subset) {
      ExteriorElement image(m);
      for (int j = 1; j <= m; ++j)
        image = image + ExteriorElement::monomial(m, {j}, a(i - 1, j - 1));
      prod = coincidence::exterior::wedge(prod, image);
    }
    out = out + prod;
  }
  return out;
}

/// All x in ((1/grid) Z / Z)^m with D x == c (mod 1). Exhaustive; only for
/// small grid^m.
inline std::vector<std::vector<Rational>>
grid_coincidences(const std::vector<coincidence::affine::AffineTorusMap> &maps,
                  int64_t grid) {
  const auto d = coincidence::affine::stacked_difference(maps);
  const auto c = coincidence::affine::stacked_offset(maps);
  const int m = d.cols();
  std::vector<std::vector<Rational>> found;
  std::vector<int64_t> idx(static_cast<std::size_t>(m), 0);
  while (true) {
    bool ok = true;
    for (int r = 0; r < d.rows() && ok; ++r) {
      Rational acc = -c[static_cast<std::size_t>(r)];
      for (int j = 0; j < m; ++j)
        acc = acc + Rational(d(r, j) * idx[static_cast<std::size_t>(j)], grid);
      ok = acc.den() == 1;
    }
    if (ok) {
      std::vector<Rational> x;
      for (int64_t v : idx)
        x.emplace_back(v, grid);
      found.push_back(std::move(x));
    }
    int j = 0;
    while (j < m && ++idx[static_cast<std::size_t>(j)] == grid)
      idx[static_cast<std::size_t>(j++)] = 0;
    if (j == m)
      break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

inline IntegerMatrix random_matrix(std::mt19937_64 &rng, int rows, int cols,
                                   int64_t lo, int64_t hi) {
  std::uniform_int_distribution<int64_t> dist(lo, hi);
  IntegerMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      a(r, c) = dist(rng);
  return a;
}

inline ExteriorElement random_element(std::mt19937_64 &rng, int rank,
                                      int max_terms, int degree = -1) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int64_t> coeff(-4, 4);
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> deg_dist(0, rank);
  ExteriorElement x(rank);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    const int p = degree >= 0 ? degree : deg_dist(rng);
    const auto choices = coincidence::exterior::subsets_of_size(rank, p);
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    x = x + ExteriorElement::monomial(rank, choices[pick(rng)], coeff(rng));
  }
  return x;
}

/// Random rational in [0,1) with denominator in [1, max_den].
inline Rational random_translation(std::mt19937_64 &rng, int64_t max_den) {
  std::uniform_int_distribution<int64_t> den(1, max_den);
  const int64_t q = den(rng);
  std::uniform_int_distribution<int64_t> num(0, q - 1);
  return {num(rng), q};
}

} // namespace oracle
