#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace skelforge {

// splitmix64 finalizer; used both as a seed scrambler and as the hash behind
// deterministic sub-seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Deterministic sub-seed for an independent stream. Every stage of the
// pipeline derives its generator this way from the global seed, so
// concurrency and subcommand chaining cannot change outputs.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(seed ^ splitmix64(tag));
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::string_view tag) {
    return sub_seed(seed, fnv1a64(tag));
}

template <typename... Rest>
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag, Rest... rest) {
    return sub_seed(sub_seed(seed, tag), rest...);
}

template <typename... Rest>
std::uint64_t sub_seed(std::uint64_t seed, std::string_view tag, Rest... rest) {
    return sub_seed(sub_seed(seed, tag), rest...);
}

// mt19937_64 with a fixed raw-bits-to-double mapping. The standard library's
// distributions are not bit-stable across implementations; this mapping is,
// so fixed seeds reproduce byte-identical outputs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    std::uint64_t bits() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in [a, b); returns exactly a when a == b.
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace skelforge
