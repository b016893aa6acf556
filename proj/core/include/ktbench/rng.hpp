#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ktbench {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a purpose tag,
// so that e.g. fold splitting and weight init never share a stream.
inline std::uint64_t mix_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(base ^ h);
}

inline std::mt19937_64 make_rng(std::uint64_t base, std::string_view tag) {
    return std::mt19937_64(mix_seed(base, tag));
}

} // namespace ktbench
