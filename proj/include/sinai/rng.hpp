#pragma once

#include <cmath>
#include <cstdint>

namespace sinai::rng {

// SplitMix64 step: advances the state by the golden-ratio increment and
// returns a well-mixed 64-bit output. Used only for seeding.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// xoshiro256++ stream with distribution helpers.
//
// Stream splitting: Stream(seed, purpose, index) seeds the generator from
// four consecutive SplitMix64 outputs taken at state offset
// mix(seed, purpose) + 4*index increments. Distinct (purpose, index) pairs
// consume disjoint SplitMix64 blocks, so derived states are distinct and
// statistically independent; trajectories of any realistic length collide
// with probability below 2^-120.
class Stream {
  public:
    Stream() : Stream(0, 0, 0) {}

    Stream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index) {
        std::uint64_t h = seed;
        std::uint64_t mixed = splitmix64(h);
        h = mixed ^ (0x632BE59BD9B4E019ull * (purpose + 1));
        mixed = splitmix64(h);
        std::uint64_t base = mixed + 4ull * 0x9E3779B97F4A7C15ull * index;
        for (auto& w : s_) w = splitmix64(base);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on the open interval (0, 1); never returns 0 or 1, so logs of
    // either u or 1-u are always finite.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exponential with the given mean (mean > 0).
    double exponential(double mean) { return -mean * std::log(uniform01()); }

    // Standard normal via Box-Muller; caches the second variate.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform01();
        double v = uniform01();
        double r = std::sqrt(-2.0 * std::log(u));
        double a = 6.283185307179586476925286766559 * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    bool coin() { return (next_u64() >> 63) != 0; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Purpose tags keeping unrelated consumers on disjoint stream families.
namespace purpose {
inline constexpr std::uint64_t path_right = 1;
inline constexpr std::uint64_t path_left = 2;
inline constexpr std::uint64_t engine = 3;
inline constexpr std::uint64_t renewal = 4;
inline constexpr std::uint64_t ldp = 5;
inline constexpr std::uint64_t sampler = 6;
}  // namespace purpose

}  // namespace sinai::rng
