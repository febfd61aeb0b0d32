// Times the OpenMP kernels against their serial references and checks that
// both produce the same answer.

#include "coincidence/affine_solver.hpp"
#include "coincidence/exterior.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

using namespace coincidence;

namespace {

template <class F> double seconds(F &&f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r)
    f();
  const std::chrono::duration<double> dt =
      std::chrono::steady_clock::now() - start;
  return dt.count() / reps;
}

IntegerMatrix random_matrix(std::mt19937_64 &rng, int rows, int cols, int lo,
                            int hi) {
  std::uniform_int_distribution<int64_t> dist(lo, hi);
  IntegerMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      a(r, c) = dist(rng);
  return a;
}

void report(const char *name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n",
              name, serial, parallel, serial / parallel,
              same ? "identical" : "MISMATCH");
}

} // namespace

int main() {
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  std::mt19937_64 rng(20160226);

  {
    // Three maps T^4 -> T^2 whose stacked difference has a large determinant.
    IntegerMatrix a1(2, 4);
    IntegerMatrix a2{{30, 1, 0, 0}, {0, 35, 0, 0}};
    IntegerMatrix a3{{0, 0, 20, 3}, {0, 0, 1, 25}};
    std::vector<affine::AffineTorusMap> maps{
        {a1, {Rational(1, 3), Rational(0)}},
        {a2, {Rational(0), Rational(2, 5)}},
        {a3, {Rational(1, 2), Rational(1, 4)}}};
    std::vector<affine::CoincidencePoint> s, p;
    const double ts =
        seconds([&] { s = affine::solve_coincidences(maps, Execution::Serial); }, 3);
    const double tp =
        seconds([&] { p = affine::solve_coincidences(maps, Execution::Parallel); }, 3);
    std::printf("solve: %zu points\n", s.size());
    report("solve_coincidences", ts, tp, s == p);
  }

  {
    const auto a = random_matrix(rng, 10, 14, -3, 3);
    exterior::ExteriorElement x(10);
    for (const auto &subset : exterior::subsets_of_size(10, 5))
      x = x + exterior::ExteriorElement::monomial(10, subset, 1);
    exterior::ExteriorElement s(14), p(14);
    const double ts =
        seconds([&] { s = exterior::pullback(a, x, Execution::Serial); }, 1);
    const double tp =
        seconds([&] { p = exterior::pullback(a, x, Execution::Parallel); }, 1);
    report("pullback (deg 5, 10x14)", ts, tp, s == p);
  }
  return 0;
}
