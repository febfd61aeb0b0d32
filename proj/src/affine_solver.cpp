#include "coincidence/affine_solver.hpp"

#include "coincidence/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

namespace coincidence::affine {

namespace {

struct Pivot {
  int row;
  int col;
};

// Smallest |entry| among nonzero entries of a[from:, from:].
std::optional<Pivot> smallest_nonzero(const IntegerMatrix &a, int from) {
  std::optional<Pivot> best;
  int64_t best_abs = 0;
  for (int r = from; r < a.rows(); ++r)
    for (int c = from; c < a.cols(); ++c) {
      const int64_t v = a(r, c);
      if (v == 0)
        continue;
      const int64_t av = checked_abs(v);
      if (!best || av < best_abs) {
        best = Pivot{r, c};
        best_abs = av;
      }
    }
  return best;
}

// Quotient rounded to nearest, so the remainder is at most |b|/2.
int64_t nearest_quotient(int64_t a, int64_t b) {
  const int64_t q = floor_div(a, b);
  const int64_t r = a - q * b;
  const int64_t ab = b < 0 ? -b : b;
  const bool up = b > 0 ? 2 * r > ab : 2 * r < -ab;
  return up ? q + 1 : q;
}

} // namespace

std::vector<int64_t> SnfResult::diagonal() const {
  std::vector<int64_t> out;
  for (int i = 0; i < std::min(d.rows(), d.cols()); ++i)
    out.push_back(d(i, i));
  return out;
}

SnfResult smith_normal_form(const IntegerMatrix &input) {
  IntegerMatrix a = input;
  IntegerMatrix u = IntegerMatrix::identity(a.rows());
  IntegerMatrix v = IntegerMatrix::identity(a.cols());

  auto move_to_pivot = [&](int t, Pivot p) {
    a.swap_rows(t, p.row);
    u.swap_rows(t, p.row);
    a.swap_cols(t, p.col);
    v.swap_cols(t, p.col);
  };

  const int steps = std::min(a.rows(), a.cols());
  for (int t = 0; t < steps; ++t) {
    const auto start = smallest_nonzero(a, t);
    if (!start)
      break;
    move_to_pivot(t, *start);

    while (true) {
      bool clean = true;
      for (int r = t + 1; r < a.rows(); ++r) {
        const int64_t q = checked_neg(nearest_quotient(a(r, t), a(t, t)));
        a.add_row_multiple(r, t, q);
        u.add_row_multiple(r, t, q);
        clean = clean && a(r, t) == 0;
      }
      for (int c = t + 1; c < a.cols(); ++c) {
        const int64_t q = checked_neg(nearest_quotient(a(t, c), a(t, t)));
        a.add_col_multiple(c, t, q);
        v.add_col_multiple(c, t, q);
        clean = clean && a(t, c) == 0;
      }
      if (!clean) {
        move_to_pivot(t, *smallest_nonzero(a, t));
        continue;
      }
      // Row and column cleared; enforce divisibility of the remainder.
      std::optional<int> offending;
      for (int r = t + 1; r < a.rows() && !offending; ++r)
        for (int c = t + 1; c < a.cols(); ++c)
          if (a(r, c) % a(t, t) != 0) {
            offending = r;
            break;
          }
      if (!offending)
        break;
      a.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

namespace {

using i128 = __int128;

// Entry (r, c) of U * A * V, exact in 128 bits; nullopt on overflow.
std::optional<i128> triple_product_entry(const IntegerMatrix &u,
                                         const IntegerMatrix &a,
                                         const IntegerMatrix &v, int r, int c) {
  i128 total = 0;
  for (int j = 0; j < a.cols(); ++j) {
    i128 ua = 0;
    for (int i = 0; i < a.rows(); ++i)
      ua += static_cast<i128>(u(r, i)) * a(i, j);
    i128 term;
    if (__builtin_mul_overflow(ua, static_cast<i128>(v(j, c)), &term) ||
        __builtin_add_overflow(total, term, &total))
      return std::nullopt;
  }
  return total;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1)
      r = mulmod(r, a, p);
  return r;
}

// det(a) mod p by Gaussian elimination over GF(p).
uint64_t det_mod(const IntegerMatrix &a, uint64_t p) {
  const int n = a.rows();
  std::vector<uint64_t> m(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int64_t x = a(r, c) % static_cast<int64_t>(p);
      m[r * n + c] = static_cast<uint64_t>(x < 0 ? x + static_cast<int64_t>(p) : x);
    }
  uint64_t det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && m[piv * n + k] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != k) {
      for (int c = 0; c < n; ++c)
        std::swap(m[k * n + c], m[piv * n + c]);
      det = p - det;
    }
    det = mulmod(det, m[k * n + k], p);
    const uint64_t inv = powmod(m[k * n + k], p - 2, p);
    for (int r = k + 1; r < n; ++r) {
      const uint64_t f = mulmod(m[r * n + k], inv, p);
      for (int c = k; c < n; ++c)
        m[r * n + c] = (m[r * n + c] + p - mulmod(f, m[k * n + c], p)) % p;
    }
  }
  return det % p;
}

// |det a| == 1, decided by residues modulo primes whose product exceeds the
// Hadamard bound.
bool is_unimodular(const IntegerMatrix &a) {
  static constexpr uint64_t kPrimes[] = {
      (uint64_t{1} << 61) - 1, (uint64_t{1} << 62) - 57,
      (uint64_t{1} << 63) - 25};
  long double log2_bound = 0;
  for (int r = 0; r < a.rows(); ++r) {
    long double norm2 = 0;
    for (int c = 0; c < a.cols(); ++c)
      norm2 += static_cast<long double>(a(r, c)) * a(r, c);
    log2_bound += std::log2(norm2) / 2;
  }
  if (log2_bound + 2 > 61 + 62 + 63)
    throw Error(Errc::IntegerOverflow,
                "transform too large to certify unimodularity");
  bool plus = true;
  bool minus = true;
  for (uint64_t p : kPrimes) {
    const uint64_t d = det_mod(a, p);
    plus = plus && d == 1;
    minus = minus && d == p - 1;
  }
  return plus || minus;
}

} // namespace

bool verify_snf(const IntegerMatrix &a, const SnfResult &snf) {
  if (snf.u.rows() != a.rows() || !snf.u.is_square() ||
      snf.v.rows() != a.cols() || !snf.v.is_square() ||
      snf.d.rows() != a.rows() || snf.d.cols() != a.cols())
    return false;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      const auto entry = triple_product_entry(snf.u, a, snf.v, r, c);
      if (!entry || *entry != snf.d(r, c))
        return false;
      if (r != c && snf.d(r, c) != 0)
        return false;
    }
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0)
      return false;
    if (i + 1 < diag.size()) {
      if (diag[i] == 0 && diag[i + 1] != 0)
        return false;
      if (diag[i] != 0 && diag[i + 1] % diag[i] != 0)
        return false;
    }
  }
  return is_unimodular(snf.u) && is_unimodular(snf.v);
}

AffineTorusMap::AffineTorusMap(IntegerMatrix matrix,
                               std::vector<Rational> translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (static_cast<int>(translation_.size()) != matrix_.rows())
    throw Error(Errc::DimensionMismatch,
                "translation has length " +
                    std::to_string(translation_.size()) + ", expected " +
                    std::to_string(matrix_.rows()));
  for (auto &b : translation_)
    b = b.mod_one();
}

namespace {

void require_uniform_shape(const std::vector<AffineTorusMap> &maps) {
  if (maps.size() < 2)
    throw Error(Errc::DimensionMismatch, "at least two maps are required");
  const int n = maps.front().target_dim();
  const int m = maps.front().source_dim();
  for (std::size_t i = 1; i < maps.size(); ++i)
    if (maps[i].target_dim() != n || maps[i].source_dim() != m)
      throw Error(Errc::DimensionMismatch,
                  "map " + std::to_string(i + 1) + " is " +
                      std::to_string(maps[i].target_dim()) + "x" +
                      std::to_string(maps[i].source_dim()) + ", expected " +
                      std::to_string(n) + "x" + std::to_string(m));
}

} // namespace

IntegerMatrix stacked_difference(const std::vector<AffineTorusMap> &maps) {
  require_uniform_shape(maps);
  const IntegerMatrix &base = maps.front().matrix();
  IntegerMatrix out = maps[1].matrix() - base;
  for (std::size_t i = 2; i < maps.size(); ++i)
    out = IntegerMatrix::vstack(out, maps[i].matrix() - base);
  return out;
}

std::vector<Rational> stacked_offset(const std::vector<AffineTorusMap> &maps) {
  require_uniform_shape(maps);
  const auto &base = maps.front().translation();
  std::vector<Rational> out;
  for (std::size_t i = 1; i < maps.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j)
      out.push_back((base[j] - maps[i].translation()[j]).mod_one());
  return out;
}

std::vector<CoincidencePoint>
solve_coincidences(const std::vector<AffineTorusMap> &maps, Execution exec) {
  require_uniform_shape(maps);
  const int n = maps.front().target_dim();
  const int m = maps.front().source_dim();
  const auto k = static_cast<int>(maps.size());
  if (m != (k - 1) * n)
    throw Error(Errc::DimensionMismatch,
                "source dimension " + std::to_string(m) + " != (k-1)n = " +
                    std::to_string((k - 1) * n));

  const IntegerMatrix diff = stacked_difference(maps);
  const int64_t det = diff.determinant();
  if (det == 0)
    throw Error(Errc::NonTransverse,
                "stacked difference matrix " + diff.to_string() +
                    " has determinant 0");
  if (checked_abs(det) > kMaxEnumeratedPoints)
    throw Error(Errc::InvalidArgument,
                "|det| = " + std::to_string(checked_abs(det)) +
                    " exceeds the enumeration limit");

  const SnfResult snf = smith_normal_form(diff);
  const auto diag = snf.diagonal();
  const auto offset = stacked_offset(maps);

  // u = U c (mod 1), then bring everything over Q = d_max * lcm(denominators).
  std::vector<Rational> uc(static_cast<std::size_t>(m));
  int64_t lcm_den = 1;
  for (int i = 0; i < m; ++i) {
    Rational acc;
    for (int j = 0; j < m; ++j)
      acc = acc + Rational(snf.u(i, j)) * offset[static_cast<std::size_t>(j)];
    uc[static_cast<std::size_t>(i)] = acc.mod_one();
    lcm_den = checked_lcm(lcm_den, acc.mod_one().den());
  }
  const int64_t d_max = diag.back();

  kernels::ResidueLattice lattice{snf.v, diag, {}, checked_mul(d_max, lcm_den)};
  lattice.offsets.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const Rational &r = uc[static_cast<std::size_t>(j)];
    const int64_t d = diag[static_cast<std::size_t>(j)];
    lattice.offsets.push_back(
        checked_mul(checked_mul(r.num(), lcm_den / r.den()), d_max / d));
  }

  const auto numerators = exec == Execution::Parallel
                              ? kernels::enumerate_residues_parallel(lattice)
                              : kernels::enumerate_residues_serial(lattice);
  const int sign = det > 0 ? 1 : -1;
  const auto count = numerators.size() / static_cast<std::size_t>(m);
  std::vector<CoincidencePoint> points;
  points.reserve(count);
  for (std::size_t p = 0; p < count; ++p) {
    CoincidencePoint pt{{}, sign};
    pt.coordinates.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      pt.coordinates.emplace_back(
          numerators[p * static_cast<std::size_t>(m) + static_cast<std::size_t>(i)],
          lattice.denominator);
    points.push_back(std::move(pt));
  }
  std::sort(points.begin(), points.end());
  return points;
}

int64_t index_sum(const std::vector<CoincidencePoint> &points) {
  int64_t sum = 0;
  for (const auto &p : points)
    sum = checked_add(sum, p.local_index);
  return sum;
}

} // namespace coincidence::affine
