#pragma once

#include <cmath>
#include <cstdint>

namespace tubal {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014). A counter-style generator: each call advances the
// state by a fixed odd gamma and hashes it, so independent streams are obtained
// by hashing (seed, stream_id) into a fresh state. All draws are deterministic
// functions of (seed, stream path), which is what makes parallel replicates
// reproducible regardless of scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed + kGolden)) {}

    // Child stream: replicate k of a run, half b of a split, and so on.
    // Distinct ids give statistically independent streams.
    Rng derive(std::uint64_t stream_id) const {
        return Rng(state_ ^ mix(stream_id + kGolden));
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform on [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1]; safe as a log() argument.
    double uniform01_open() { return 1.0 - uniform01(); }

    // Unbiased integer in [0, bound) by rejection (Lemire's method).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Standard normal via Box-Muller; the pair's second value is cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = uniform01_open();
        double v = uniform01();
        double rad = std::sqrt(-2.0 * std::log(u));
        double ang = 6.283185307179586476925286766559 * v;
        spare_ = rad * std::sin(ang);
        have_spare_ = true;
        return rad * std::cos(ang);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace tubal
