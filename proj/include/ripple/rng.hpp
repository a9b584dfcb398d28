#pragma once

#include <cstdint>

namespace ripple {

// splitmix64 (Steele, Lea, Vigna). Entirely 64-bit integer arithmetic, so
// streams are bit-exact on every platform.
struct Splitmix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Per-episode seed derivation: the (index+1)-th splitmix64 output of a
// stream seeded with `base`. Avalanches, so adjacent indices give
// uncorrelated seeds.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace ripple
