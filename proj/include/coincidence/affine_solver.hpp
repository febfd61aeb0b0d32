#pragma once

// Exact coincidence enumeration for affine torus maps x |-> A x + b (mod 1).
// Coincidences of f_1..f_k solve the square congruence
//     (A_i - A_1) x == b_1 - b_i  (mod Z^n),  i = 2..k,
// which Smith normal form diagonalizes; each solution of a regular system has
// local index sign(det D).

#include "coincidence/execution.hpp"
#include "coincidence/integer_matrix.hpp"
#include "coincidence/rational.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace coincidence::affine {

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// all d_i >= 0.
struct SnfResult {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;

  [[nodiscard]] std::vector<int64_t> diagonal() const;
};

SnfResult smith_normal_form(const IntegerMatrix &a);

/// True iff `snf` is a valid certificate for `a`: U*A*V == D, D diagonal with
/// nonnegative divisibility chain, |det U| == |det V| == 1.
bool verify_snf(const IntegerMatrix &a, const SnfResult &snf);

class AffineTorusMap {
public:
  /// Translation entries are reduced modulo 1. Throws DimensionMismatch if
  /// translation.size() != matrix.rows().
  AffineTorusMap(IntegerMatrix matrix, std::vector<Rational> translation);

  [[nodiscard]] const IntegerMatrix &matrix() const noexcept { return matrix_; }
  [[nodiscard]] const std::vector<Rational> &translation() const noexcept {
    return translation_;
  }
  [[nodiscard]] int source_dim() const noexcept { return matrix_.cols(); }
  [[nodiscard]] int target_dim() const noexcept { return matrix_.rows(); }

private:
  IntegerMatrix matrix_;
  std::vector<Rational> translation_;
};

struct CoincidencePoint {
  std::vector<Rational> coordinates; // each in [0, 1)
  int local_index;                   // +1 or -1

  friend bool operator==(const CoincidencePoint &,
                         const CoincidencePoint &) = default;
  friend auto operator<=>(const CoincidencePoint &a,
                          const CoincidencePoint &b) {
    return a.coordinates <=> b.coordinates;
  }
};

/// The (k-1)n x m matrix stacking A_i - A_1 for i = 2..k, and the matching
/// right-hand side b_1 - b_i. Throws DimensionMismatch on fewer than two maps
/// or maps of differing shapes.
IntegerMatrix stacked_difference(const std::vector<AffineTorusMap> &maps);
std::vector<Rational> stacked_offset(const std::vector<AffineTorusMap> &maps);

/// Coincidence points sorted lexicographically. Throws DimensionMismatch
/// unless m == (k-1)n, NonTransverse when det D == 0.
std::vector<CoincidencePoint>
solve_coincidences(const std::vector<AffineTorusMap> &maps,
                   Execution exec = Execution::Parallel);

int64_t index_sum(const std::vector<CoincidencePoint> &points);

/// Upper bound on |det D| that solve_coincidences will enumerate.
inline constexpr int64_t kMaxEnumeratedPoints = int64_t{1} << 24;

} // namespace coincidence::affine
