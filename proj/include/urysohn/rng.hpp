#ifndef URYSOHN_RNG_HPP
#define URYSOHN_RNG_HPP

#include <cstdint>

namespace urysohn {

/// SplitMix64 stream. Used everywhere randomness is needed so that runs are
/// reproducible across platforms; std::mt19937 distributions are
/// implementation-defined and would break byte-identical reruns.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling keeps the distribution exact
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold)
        return r % bound;
    }
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Independent derived stream; deterministic in (current seed, tag).
  Rng fork(std::uint64_t tag) const {
    Rng r(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 0x632be59bd9b4e019ULL)));
    r.next();
    return r;
  }

private:
  std::uint64_t state_;
};

} // namespace urysohn

#endif
