#ifndef CHEEGER_RNG_HPP
#define CHEEGER_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace cheeger
{

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based seed splitting: the stream for (seed, stream, counter) does
/// not depend on how work was scheduled.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t counter = 0)
{
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) + counter);
}

/// xoshiro256** with hand-rolled distributions, so results are identical
/// across standard libraries.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
  {
    std::uint64_t x = seed;
    for (auto &s : state_) {
      x = splitmix64(x);
      s = x;
    }
  }

  std::uint64_t next()
  {
    std::uint64_t const result = rotl(state_[1] * 5, 7) * 9;
    std::uint64_t const t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in {0, ..., n-1}.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  double normal()
  {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u <= 0.0)
      u = uniform();
    double const v = uniform();
    double const r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * std::numbers::pi * v);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * v);
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k)
  { return (x << k) | (x >> (64 - k)); }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

} // namespace cheeger

#endif // CHEEGER_RNG_HPP
