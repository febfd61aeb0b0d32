#include "coincidence/rational.hpp"

#include <charconv>

namespace coincidence {

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0)
    throw Error(Errc::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  const int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::mod_one() const { return {floor_mod(num_, den_), den_}; }

std::string Rational::to_string() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

int64_t parse_int(std::string_view text, std::string_view whole) {
  int64_t value = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && text.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw Error(Errc::IntegerOverflow,
                "rational \"" + std::string(whole) + "\" exceeds int64");
  if (ec != std::errc() || ptr != last || first == last)
    throw Error(Errc::Schema,
                "malformed rational \"" + std::string(whole) + "\"");
  return value;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return {parse_int(text, text)};
  const int64_t num = parse_int(text.substr(0, slash), text);
  const int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0)
    throw Error(Errc::Schema,
                "rational \"" + std::string(text) + "\" has zero denominator");
  return {num, den};
}

Rational operator+(const Rational &a, const Rational &b) {
  const int64_t g = std::gcd(a.den_, b.den_);
  const int64_t lhs = checked_mul(a.num_, b.den_ / g);
  const int64_t rhs = checked_mul(b.num_, a.den_ / g);
  return {checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_)};
}

Rational operator-(const Rational &a) {
  Rational r;
  r.num_ = checked_neg(a.num_);
  r.den_ = a.den_;
  return r;
}

Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

Rational operator*(const Rational &a, const Rational &b) {
  const int64_t g1 = std::gcd(a.num_, b.den_);
  const int64_t g2 = std::gcd(b.num_, a.den_);
  const int64_t d1 = g1 == 0 ? 1 : g1;
  const int64_t d2 = g2 == 0 ? 1 : g2;
  return {checked_mul(a.num_ / d1, b.num_ / d2),
          checked_mul(a.den_ / d2, b.den_ / d1)};
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

} // namespace coincidence
