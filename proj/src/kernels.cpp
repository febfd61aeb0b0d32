#include "coincidence/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coincidence::kernels {

namespace {

int64_t one_minor(const IntegerMatrix &a, std::span<const int> rows,
                  const std::vector<int> &cols) {
  return a.minor(rows, cols).determinant();
}

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  __int128 r = (static_cast<__int128>(a) * b) % m;
  if (r < 0)
    r += m;
  return static_cast<int64_t>(r);
}

void fill_point(const ResidueLattice &lat, int64_t index, int64_t *out) {
  const int m = static_cast<int>(lat.diagonal.size());
  const int64_t q = lat.denominator;
  // Scaled y, reduced mod q. Stack storage suffices: m is a torus dimension.
  int64_t y[64];
  for (int j = 0; j < m; ++j) {
    const int64_t t = index % lat.diagonal[j];
    index /= lat.diagonal[j];
    const int64_t step = q / lat.diagonal[j];
    y[j] = floor_mod(lat.offsets[j] + mulmod(t, step, q), q);
  }
  for (int i = 0; i < m; ++i) {
    __int128 acc = 0;
    for (int j = 0; j < m; ++j)
      acc += static_cast<__int128>(mulmod(lat.basis(i, j), y[j], q));
    out[i] = static_cast<int64_t>(acc % q);
  }
}

void check_lattice(const ResidueLattice &lat) {
  const auto m = lat.diagonal.size();
  if (m == 0 || m > 64 || lat.offsets.size() != m ||
      lat.basis.rows() != static_cast<int>(m) || !lat.basis.is_square())
    throw Error(Errc::DimensionMismatch, "malformed residue lattice");
  if (lat.denominator <= 0)
    throw Error(Errc::InvalidArgument, "nonpositive lattice denominator");
  for (int64_t d : lat.diagonal)
    if (d <= 0 || lat.denominator % d != 0)
      throw Error(Errc::InvalidArgument,
                  "lattice diagonal must be positive and divide the "
                  "denominator");
}

} // namespace

std::vector<int64_t>
minor_determinants_serial(const IntegerMatrix &a, std::span<const int> rows,
                          std::span<const std::vector<int>> col_sets) {
  std::vector<int64_t> out;
  out.reserve(col_sets.size());
  for (const auto &cols : col_sets)
    out.push_back(one_minor(a, rows, cols));
  return out;
}

std::vector<int64_t>
minor_determinants_parallel(const IntegerMatrix &a, std::span<const int> rows,
                            std::span<const std::vector<int>> col_sets) {
  const auto count = static_cast<std::ptrdiff_t>(col_sets.size());
  std::vector<int64_t> out(col_sets.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = one_minor(a, rows, col_sets[i]);
    } catch (...) {
#pragma omp critical(coincidence_minor_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return out;
}

int64_t residue_count(const ResidueLattice &lattice) {
  int64_t count = 1;
  for (int64_t d : lattice.diagonal)
    count = checked_mul(count, d);
  return count;
}

std::vector<int64_t> enumerate_residues_serial(const ResidueLattice &lattice) {
  check_lattice(lattice);
  const int64_t count = residue_count(lattice);
  const auto m = static_cast<int64_t>(lattice.diagonal.size());
  std::vector<int64_t> out(static_cast<std::size_t>(count * m));
  for (int64_t idx = 0; idx < count; ++idx)
    fill_point(lattice, idx, out.data() + idx * m);
  return out;
}

std::vector<int64_t>
enumerate_residues_parallel(const ResidueLattice &lattice) {
  check_lattice(lattice);
  const int64_t count = residue_count(lattice);
  const auto m = static_cast<int64_t>(lattice.diagonal.size());
  std::vector<int64_t> out(static_cast<std::size_t>(count * m));
#pragma omp parallel for schedule(static)
  for (int64_t idx = 0; idx < count; ++idx)
    fill_point(lattice, idx, out.data() + idx * m);
  return out;
}

} // namespace coincidence::kernels
