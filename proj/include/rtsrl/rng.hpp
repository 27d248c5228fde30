#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rtsrl {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derives an independent child seed from a root seed and a path of stream
// labels. derive_seed(s, {phase, episode, role}) never depends on any other
// path, so adding episodes leaves earlier streams untouched.
inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix64(root);
    for (std::uint64_t label : path) {
        h = splitmix64(h ^ splitmix64(label + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

}  // namespace rtsrl
