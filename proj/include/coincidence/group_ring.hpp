#pragma once

// Z[pi^{k-1}] for a finitely generated abelian group pi, written additively,
// together with the pi^k action that twists the coincidence Thom class:
//
//   (s_1, ..., s_k) o (a_1, ..., a_{k-1})
//       = sgn(s_1)^{k-1} (s_2 + a_1 - s_1, ..., s_k + a_{k-1} - s_1)
//
// and its pullback to pi_1 of the source along k homomorphisms.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coincidence::group_ring {

/// Z^free_rank + Z/t_1 + ... + Z/t_r with t_1 | t_2 | ... | t_r, t_i >= 2.
class AbelianGroupSpec {
public:
  AbelianGroupSpec() = default;
  /// Throws InvalidArgument unless the torsion list is a divisibility chain
  /// of integers >= 2.
  AbelianGroupSpec(int free_rank, std::vector<int64_t> torsion);

  [[nodiscard]] int free_rank() const noexcept { return free_rank_; }
  [[nodiscard]] const std::vector<int64_t> &torsion() const noexcept {
    return torsion_;
  }
  [[nodiscard]] int generator_count() const noexcept {
    return free_rank_ + static_cast<int>(torsion_.size());
  }
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const AbelianGroupSpec &,
                          const AbelianGroupSpec &) = default;

private:
  int free_rank_ = 0;
  std::vector<int64_t> torsion_;
};

/// An element of an AbelianGroupSpec in normal form: free coordinates
/// followed by torsion residues in [0, t_i).
class GroupElement {
public:
  explicit GroupElement(AbelianGroupSpec group);
  /// Reduces torsion coordinates. Throws ArityMismatch on wrong lengths.
  GroupElement(AbelianGroupSpec group, std::vector<int64_t> free_part,
               std::vector<int64_t> torsion_part);

  static GroupElement identity(const AbelianGroupSpec &group) {
    return GroupElement(group);
  }
  /// The i-th generator (free generators first, then torsion), 0-based.
  static GroupElement generator(const AbelianGroupSpec &group, int i);

  [[nodiscard]] const AbelianGroupSpec &group() const noexcept { return group_; }
  [[nodiscard]] const std::vector<int64_t> &coords() const noexcept {
    return coords_;
  }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] std::string to_string() const;

  friend GroupElement operator+(const GroupElement &a, const GroupElement &b);
  friend GroupElement operator-(const GroupElement &a, const GroupElement &b);
  friend GroupElement operator-(const GroupElement &a);
  /// n * g
  friend GroupElement operator*(int64_t n, const GroupElement &g);

  friend auto operator<=>(const GroupElement &,
                          const GroupElement &) = default;

private:
  void reduce();

  AbelianGroupSpec group_;
  std::vector<int64_t> coords_;
};

/// A homomorphism pi -> {+1, -1}, given by its values on generators.
class OrientationCharacter {
public:
  /// Throws InvalidArgument if a sign is not +-1, or an odd-order torsion
  /// generator is sent to -1; ArityMismatch on a wrong number of signs.
  OrientationCharacter(AbelianGroupSpec group, std::vector<int> signs);

  static OrientationCharacter trivial(const AbelianGroupSpec &group);

  [[nodiscard]] const AbelianGroupSpec &group() const noexcept { return group_; }
  [[nodiscard]] int operator()(const GroupElement &g) const;

private:
  AbelianGroupSpec group_;
  std::vector<int> signs_;
};

using GroupTuple = std::vector<GroupElement>;

/// Finite Z-combination of (k-1)-tuples of group elements, canonical form.
class GroupRingElement {
public:
  using Terms = std::map<GroupTuple, int64_t>;

  /// Zero element. Throws InvalidArgument if k < 2.
  GroupRingElement(AbelianGroupSpec group, int k);
  /// Throws GroupMismatch / ArityMismatch on malformed tuples.
  GroupRingElement(AbelianGroupSpec group, int k,
                   const std::vector<std::pair<GroupTuple, int64_t>> &terms);

  static GroupRingElement basis(const AbelianGroupSpec &group,
                                const GroupTuple &tuple);

  [[nodiscard]] const AbelianGroupSpec &group() const noexcept { return group_; }
  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] const Terms &terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] int64_t coefficient(const GroupTuple &tuple) const;
  [[nodiscard]] GroupRingElement scaled(int64_t factor) const;
  [[nodiscard]] std::string to_string() const;

  friend GroupRingElement operator+(const GroupRingElement &a,
                                    const GroupRingElement &b);
  friend GroupRingElement operator-(const GroupRingElement &a,
                                    const GroupRingElement &b);
  friend bool operator==(const GroupRingElement &,
                         const GroupRingElement &) = default;

private:
  void add_term(const GroupTuple &tuple, int64_t coeff);

  AbelianGroupSpec group_;
  int k_;
  Terms terms_;
};

/// Homomorphism between abelian groups, stored as generator images.
class GroupHom {
public:
  /// Throws ArityMismatch / GroupMismatch on malformed images and
  /// InvalidArgument if a torsion generator of order d has an image g with
  /// d*g != 0.
  GroupHom(AbelianGroupSpec source, AbelianGroupSpec target,
           std::vector<GroupElement> images);

  [[nodiscard]] const AbelianGroupSpec &source() const noexcept {
    return source_;
  }
  [[nodiscard]] const AbelianGroupSpec &target() const noexcept {
    return target_;
  }
  [[nodiscard]] GroupElement operator()(const GroupElement &g) const;

private:
  AbelianGroupSpec source_;
  AbelianGroupSpec target_;
  std::vector<GroupElement> images_;
};

/// The k homomorphisms phi_i : pi_1(M) -> pi_1(N) induced by f_1..f_k.
struct HomSystem {
  AbelianGroupSpec source;
  AbelianGroupSpec target;
  std::vector<GroupHom> maps;
};

/// The pi^k action. Throws ArityMismatch if sigma.size() != x.k(),
/// GroupMismatch if an element or sgn lives in another group.
GroupRingElement act(const GroupTuple &sigma, const GroupRingElement &x,
                     const OrientationCharacter &sgn);

/// gamma acting through (phi_1(gamma), ..., phi_k(gamma)).
GroupRingElement induced_act(const GroupElement &gamma, const HomSystem &homs,
                             const GroupRingElement &x,
                             const OrientationCharacter &sgn);

/// Sum of coefficients.
int64_t augment(const GroupRingElement &x);

} // namespace coincidence::group_ring
