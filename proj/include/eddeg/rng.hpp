#pragma once

#include <cmath>
#include <cstdint>

namespace eddeg {

// SplitMix64 step.  Public-domain constants (Steele, Lea, Flood 2014).
struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

// Counter-based splittable stream: the pair (seed, index) fully determines
// the draws for sample `index`, so a Monte Carlo sweep produces identical
// results no matter how its samples are distributed over workers.  An extra
// `salt` opens a derived stream for the same sample (used when a degenerate
// draw has to be retried).
class SampleRng {
 public:
  SampleRng(uint64_t seed, uint64_t index, uint64_t salt = 0)
      : gen_(mix(seed, index, salt)) {
    gen_.next();  // burn one output so nearby keys decorrelate
  }

  // Uniform on (0, 1]; never returns 0 so log() below is safe.
  double uniform01() { return static_cast<double>((gen_.next() >> 11) + 1) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  uint64_t next_u64() { return gen_.next(); }

 private:
  static uint64_t mix(uint64_t seed, uint64_t index, uint64_t salt) {
    SplitMix64 m(seed ^ (0xa0761d6478bd642full * (index + 1)) ^
                 (0xe7037ed1a0b428dbull * salt));
    return m.next();
  }

  SplitMix64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace eddeg
