#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace siglearn {

namespace detail {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// Identity of a random stream. Identical (seed, stream) pairs reproduce
/// identical draw sequences across runs and across process boundaries; all
/// draws are generated in this header rather than by std:: distributions,
/// whose output is implementation-defined.
struct RngHandle {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// Derives an independent child stream, e.g. one per site, run, or tree.
  RngHandle fork(std::uint64_t child) const {
    std::uint64_t x = stream ^ (0xd1b54a32d192ed03ULL * (child + 1));
    return RngHandle{seed, detail::splitmix64_next(x)};
  }
};

/// xoshiro256** engine seeded from an RngHandle via splitmix64.
class Rng {
 public:
  explicit Rng(RngHandle handle) {
    std::uint64_t x = handle.seed;
    std::uint64_t mixed =
        detail::splitmix64_next(x) ^ (0x9e3779b97f4a7c15ULL * (handle.stream + 1));
    for (auto& word : state_) word = detail::splitmix64_next(mixed);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[3] = 1;
  }
  Rng(std::uint64_t seed, std::uint64_t stream) : Rng(RngHandle{seed, stream}) {}

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller (no cached spare).
  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Unbiased integer in [0, n) by rejection.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return draw % n;
  }

 private:
  std::uint64_t state_[4];
};

/// Fisher-Yates shuffle driven by an Rng.
template <class T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace siglearn
