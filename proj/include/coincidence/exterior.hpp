#pragma once

// Integer exterior algebra Λ*(Z^m), the cohomology ring of the m-torus.
// Basis monomials e^S are indexed by strictly increasing subsets S of {1..m};
// the fundamental class is e^{1..m}.

#include "coincidence/execution.hpp"
#include "coincidence/integer_matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coincidence::exterior {

/// Strictly increasing 1-based indices. Ordered lexicographically.
using IndexSet = std::vector<int>;

class ExteriorElement {
public:
  using Terms = std::map<IndexSet, int64_t>;

  /// The zero element of Λ*(Z^rank).
  explicit ExteriorElement(int rank);
  /// Builds from possibly repeated / zero terms; duplicates are summed.
  /// Throws InvalidArgument on a subset that is not strictly increasing
  /// within {1..rank}.
  ExteriorElement(int rank, const std::vector<std::pair<IndexSet, int64_t>> &terms);

  static ExteriorElement scalar(int rank, int64_t value);
  /// e^i, 1-based.
  static ExteriorElement generator(int rank, int i);
  static ExteriorElement monomial(int rank, IndexSet subset, int64_t coeff);
  /// e^{1..rank}
  static ExteriorElement top(int rank);

  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] const Terms &terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] int64_t coefficient(const IndexSet &subset) const;
  /// Degree if every term has the same degree, -1 otherwise (0 for zero).
  [[nodiscard]] int homogeneous_degree() const;

  [[nodiscard]] ExteriorElement scaled(int64_t factor) const;
  [[nodiscard]] std::string to_string() const;

  friend ExteriorElement operator+(const ExteriorElement &a,
                                   const ExteriorElement &b);
  friend ExteriorElement operator-(const ExteriorElement &a,
                                   const ExteriorElement &b);
  friend bool operator==(const ExteriorElement &,
                         const ExteriorElement &) = default;

private:
  void add_term(const IndexSet &subset, int64_t coeff);

  int rank_;
  Terms terms_;
};

/// Graded (cup) product. Throws RankMismatch, IntegerOverflow.
ExteriorElement wedge(const ExteriorElement &a, const ExteriorElement &b);

/// Pullback along the map T^m -> T^n whose action on first homology is the
/// n x m matrix `map`: e^S |-> sum_T det(map[S, T]) e^T.
/// Throws RankMismatch when x.rank() != map.rows(), IntegerOverflow.
ExteriorElement pullback(const IntegerMatrix &map, const ExteriorElement &x,
                         Execution exec = Execution::Parallel);

/// Coefficient of the fundamental class e^{1..m}; 0 if absent.
int64_t top_coefficient(const ExteriorElement &x);

/// All p-element subsets of {1..m} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int m, int p);

} // namespace coincidence::exterior
