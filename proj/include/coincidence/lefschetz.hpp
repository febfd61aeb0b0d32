#pragma once

// Coincidence classes for k >= 2 maps into an n-manifold.
//
// Torus model: f_i : T^m -> T^n acts on H_1 by the n x m matrix A_i. The pair
// class of (f_1, f_i) is the pullback of the target's top class along
// D_i = A_i - A_1, and the k-map class is the cup product of the pair
// classes, taken in the order i = 2..k and evaluated on e^{1..m}.

#include "coincidence/exterior.hpp"
#include "coincidence/integer_matrix.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace coincidence::lefschetz {

struct TorusMapModel {
  int m; // source torus dimension
  int n; // target torus dimension
  std::vector<IntegerMatrix> matrices;

  [[nodiscard]] int k() const noexcept {
    return static_cast<int>(matrices.size());
  }
  /// Throws DimensionMismatch unless k >= 2 and every matrix is n x m.
  void validate() const;
};

class ClassValue {
public:
  enum class Kind { Integer, Zero, Unknown };

  static ClassValue integer(int64_t value, std::string provenance);
  static ClassValue zero(std::string reason, std::string provenance);
  static ClassValue unknown(std::string reason, std::string provenance = {});

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  /// Only meaningful for Kind::Integer.
  [[nodiscard]] int64_t value() const noexcept { return value_; }
  [[nodiscard]] const std::string &reason() const noexcept { return reason_; }
  [[nodiscard]] const std::string &provenance() const noexcept {
    return provenance_;
  }
  /// Zero, or Integer(0).
  [[nodiscard]] bool vanishes() const noexcept {
    return kind_ == Kind::Zero || (kind_ == Kind::Integer && value_ == 0);
  }

  friend bool operator==(const ClassValue &, const ClassValue &) = default;

private:
  ClassValue(Kind kind, int64_t value, std::string reason,
             std::string provenance)
      : kind_(kind), value_(value), reason_(std::move(reason)),
        provenance_(std::move(provenance)) {}

  Kind kind_;
  int64_t value_;
  std::string reason_;
  std::string provenance_;
};

std::string kind_name(ClassValue::Kind kind);

/// Pair class of (f_1, f_i), i 1-based in [2, k]. Throws IndexOutOfRange.
exterior::ExteriorElement pair_class_torus(const TorusMapModel &model, int i);

/// Integer class of (f_1, ..., f_k). Throws DimensionMismatch unless
/// m == (k-1)n.
ClassValue multi_class_torus(const TorusMapModel &model);

/// Sphere degree formula. hat_degrees[j-1] = d_j is the multiple of the
/// fundamental class given by the pullback along (f_1..f_{j-1},f_{j+1}..f_k):
///     sum_{i=0}^{k-1} (-1)^{i n} d_{k-i}.
/// Throws ArityMismatch when hat_degrees.size() != k, InvalidArgument for
/// k < 2 or n < 1.
ClassValue sphere_class(int n, int k, const std::vector<int64_t> &hat_degrees);

// Declared cohomology facts about a scenario M -> N.

struct PullbackOfFundamentalClassVanishes {
  std::string map_id;
};
struct CohomologyGroupVanishes {
  std::string space_id;
  int degree;
};
/// Pair (f_i, f_j), 1-based.
struct PairClassZero {
  int i;
  int j;
};

struct CohomologyFact {
  std::variant<PullbackOfFundamentalClassVanishes, CohomologyGroupVanishes,
               PairClassZero>
      statement;
  std::string justification;
};

struct DeclaredMap {
  std::string id;
  bool constant = false;
};

/// Declarations the facts may refer to.
struct FactModel {
  int n;                          // dimension of the target
  std::string source;             // id of M
  std::string target;             // id of N
  std::vector<DeclaredMap> maps;  // f_1..f_k, so k == maps.size()
  std::vector<CohomologyFact> facts;

  [[nodiscard]] int k() const noexcept { return static_cast<int>(maps.size()); }
};

/// Zero when some pair factor (f_1, f_j) is forced to vanish, otherwise
/// Unknown. Never produces a nonzero value. Throws UnknownIdentifier for
/// facts that name undeclared maps, spaces or indices.
ClassValue class_from_facts(const FactModel &model);

} // namespace coincidence::lefschetz
