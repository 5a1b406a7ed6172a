#pragma once

#include <cstdint>
#include <random>

namespace pssmp {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used to derive independent per-sample streams from a
// single user seed, so batch results do not depend on how work is split
// across threads.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ull));
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    return Rng(derive_stream(seed, stream));
}

}  // namespace pssmp
