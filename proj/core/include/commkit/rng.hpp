#pragma once

#include <cstdint>
#include <random>

namespace commkit {

// All stochastic components draw from std::mt19937_64 so that results are
// bit-reproducible for a given seed within one build.
using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent sub-stream seeds
// (e.g. per-vertex walk streams, per-run benchmark seeds).
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix_seed(base ^ mix_seed(stream));
}

}  // namespace commkit
