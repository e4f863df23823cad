#ifndef CHEEGER_NUMBER_HPP
#define CHEEGER_NUMBER_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace cheeger
{

/// Exact fraction over 64-bit integers, always in lowest terms with a
/// positive denominator. Intermediate products use 128-bit arithmetic;
/// a result that does not fit throws std::overflow_error.
class Rational
{
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const
  { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;

  /// Parses "p", "p/q" or "-p/q".
  static Rational parse(std::string const &text);

  Rational operator-() const;
  friend Rational operator+(Rational const &a, Rational const &b);
  friend Rational operator-(Rational const &a, Rational const &b);
  friend Rational operator*(Rational const &a, Rational const &b);
  friend Rational operator/(Rational const &a, Rational const &b);

  friend bool operator==(Rational const &a, Rational const &b) = default;
  friend std::strong_ordering operator<=>(Rational const &a,
                                          Rational const &b);

private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A reported quantity: exact when it came out of integer enumeration,
/// floating otherwise.
class Number
{
public:
  Number() : value_(Rational{}) {}
  Number(Rational r) : value_(r) {}
  Number(double x) : value_(x) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  Rational const &exact() const { return std::get<Rational>(value_); }
  double to_double() const;

  /// Rationals as "p/q"; floats with 12 significant digits.
  std::string render() const;

  friend Number operator-(Number const &a, Number const &b);
  friend Number operator*(Number const &a, Number const &b);

private:
  std::variant<Rational, double> value_;
};

/// Rounds to 12 significant digits (printf %.12g, round-half-even on the
/// binary value) and returns the parsed result.
double round12(double x);
std::string format12(double x);

} // namespace cheeger

#endif // CHEEGER_NUMBER_HPP
