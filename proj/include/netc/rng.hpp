#ifndef NETC_RNG_HPP
#define NETC_RNG_HPP

#include <cstdint>
#include <random>

namespace netc {

inline std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG wrapper.  Bounded draws are hand-rolled because
// std::uniform_int_distribution is implementation-defined; output must be
// byte-reproducible across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    engine_.seed(splitmix64(s));
  }

  // Substream for worker i of a master seed; substreams are independent and
  // stable regardless of evaluation order.
  static Rng substream(std::uint64_t master_seed, std::uint64_t stream) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return Rng(splitmix64(s));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace netc

#endif
