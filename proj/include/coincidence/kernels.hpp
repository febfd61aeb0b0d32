#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with identical output; the public API picks one by Execution.

#include "coincidence/integer_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace coincidence::kernels {

/// det(A[rows, cols]) for every column set, in input order. Indices 0-based.
std::vector<int64_t>
minor_determinants_serial(const IntegerMatrix &a, std::span<const int> rows,
                          std::span<const std::vector<int>> col_sets);
std::vector<int64_t>
minor_determinants_parallel(const IntegerMatrix &a, std::span<const int> rows,
                            std::span<const std::vector<int>> col_sets);

/// Input to the residue enumeration of a diagonalized congruence system.
/// Point number t (mixed radix over `diagonal`, first coordinate fastest)
/// has scaled coordinates  y_j = offset_j + t_j * (denominator / diagonal_j),
/// and the kernel returns x = basis * y reduced modulo `denominator`.
struct ResidueLattice {
  IntegerMatrix basis;           // m x m, unimodular
  std::vector<int64_t> diagonal; // m positive entries
  std::vector<int64_t> offsets;  // m entries, already scaled
  int64_t denominator;           // common denominator, divisible by each d_j
};

/// Number of points, i.e. the product of the diagonal. Throws IntegerOverflow.
int64_t residue_count(const ResidueLattice &lattice);

/// Row-major [count x m] numerators in [0, denominator), in enumeration order.
std::vector<int64_t> enumerate_residues_serial(const ResidueLattice &lattice);
std::vector<int64_t> enumerate_residues_parallel(const ResidueLattice &lattice);

} // namespace coincidence::kernels
