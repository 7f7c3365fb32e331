#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace specrisk {

// SplitMix64: tiny reproducible generator. Each (seed, stream name) pair gets
// an independent stream via derive_stream, so concurrent runs never share
// state and trajectories are replayable from the config alone.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Index in [0, n) consuming exactly one draw (fixed-point multiply).
    int next_index(int n) {
        return static_cast<int>((static_cast<unsigned __int128>(next()) *
                                 static_cast<unsigned __int128>(n)) >> 64);
    }

    // Standard normal via Box-Muller; consumes exactly two draws.
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

  private:
    std::uint64_t state_;
};

// FNV-1a over the stream name, mixed with the user seed. Used to split one
// experiment seed into per-(optimizer, purpose) streams.
inline std::uint64_t derive_stream(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    h ^= seed + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace specrisk
