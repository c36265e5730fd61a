#pragma once

#include <cstdint>

namespace pac {

// splitmix64 (Steele/Lea/Flood). Fixed algorithm so a seed produces the same
// stream on every platform; bounded draws use plain modulo reduction.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace pac
