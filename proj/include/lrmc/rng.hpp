#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace lrmc {

// Seedable random stream with named substreams. Every stochastic choice in
// the library (factor init, entry shuffles, sampling, noise, row orders)
// draws from a stream derived here, so whole runs replay bit-for-bit from a
// single seed and independent streams never interleave.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix(seed)) {}

    // Child stream identified by a label and an optional index. Derivation
    // uses the root seed only, not the engine state, so the order in which
    // substreams are created does not matter.
    Rng derive(std::string_view label, std::uint64_t index = 0) const {
        std::uint64_t h = seed_;
        h = splitmix(h ^ fnv1a(label));
        h = splitmix(h ^ index);
        return Rng(h);
    }

    std::uint64_t seed() const { return seed_; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    double normal(double mean = 0.0, double stddev = 1.0) {
        return std::normal_distribution<double>(mean, stddev)(engine_);
    }

    // Fisher-Yates; deterministic given the stream state.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t k = v.size(); k > 1; --k) {
            std::size_t swap_with = static_cast<std::size_t>(below(k));
            std::swap(v[k - 1], v[swap_with]);
        }
    }

    std::mt19937_64& engine() { return engine_; }

private:
    static constexpr std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static constexpr std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace lrmc
