#pragma once

#include "coincidence/checked.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace coincidence {

/// Exact rational with int64 numerator and positive denominator, always in
/// lowest terms. Arithmetic is overflow-checked.
class Rational {
public:
  constexpr Rational() = default;
  Rational(int64_t num) : num_(num) {} // NOLINT(google-explicit-constructor)
  Rational(int64_t num, int64_t den);

  [[nodiscard]] int64_t num() const noexcept { return num_; }
  [[nodiscard]] int64_t den() const noexcept { return den_; }

  /// Representative of this value modulo 1, in [0, 1).
  [[nodiscard]] Rational mod_one() const;

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;
  /// Accepts "p", "-p", "p/q" with q != 0; throws Error{Schema} otherwise.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a);

  friend bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

} // namespace coincidence
