#include "cheeger/number.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cheeger
{

namespace
{

__int128 gcd128(__int128 a, __int128 b)
{
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den)
{
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi)
    throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::to_string() const
{
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string const &text)
{
  auto slash = text.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      auto v = std::stoll(text, &used);
      if (used != text.size())
        throw std::invalid_argument(text);
      return Rational(v);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::size_t ua = 0, ub = 0;
    auto p = std::stoll(a, &ua);
    auto q = std::stoll(b, &ub);
    if (ua != a.size() || ub != b.size())
      throw std::invalid_argument(text);
    return Rational(p, q);
  } catch (std::logic_error const &) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(Rational const &a, Rational const &b)
{
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(Rational const &a, Rational const &b) { return a + (-b); }

Rational operator*(Rational const &a, Rational const &b)
{
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(Rational const &a, Rational const &b)
{
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                             static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(Rational const &a, Rational const &b)
{
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r)
    return std::strong_ordering::less;
  if (l > r)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Number::to_double() const
{
  if (is_exact())
    return exact().to_double();
  return std::get<double>(value_);
}

std::string Number::render() const
{
  if (is_exact())
    return exact().to_string();
  return format12(std::get<double>(value_));
}

Number operator-(Number const &a, Number const &b)
{
  if (a.is_exact() && b.is_exact())
    return a.exact() - b.exact();
  return a.to_double() - b.to_double();
}

Number operator*(Number const &a, Number const &b)
{
  if (a.is_exact() && b.is_exact())
    return a.exact() * b.exact();
  return a.to_double() * b.to_double();
}

std::string format12(double x)
{
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x)
{
  if (!std::isfinite(x))
    return x;
  return std::strtod(format12(x).c_str(), nullptr);
}

} // namespace cheeger
