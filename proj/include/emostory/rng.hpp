#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

namespace emostory {

// FNV-1a, 64-bit. Stable across platforms; used for seed derivation and
// token hashing (never for anything adversarial).
constexpr std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// SplitMix64 with Box-Muller gaussians. std:: distributions are not
// reproducible across standard libraries, so all stochastic state in the
// project flows through this generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

// Deterministic seed for a child task, order-independent of other children.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    return SplitMix64(fnv1a(tag) ^ (master * 0x9e3779b97f4a7c15ull)).next_u64();
}

// Seeded hash embedding: a unit-RMS vector that depends only on (text, seed).
inline std::vector<double> hash_embedding(std::string_view text, std::uint64_t seed, int dim) {
    SplitMix64 rng(fnv1a(text) ^ (seed * 0x9e3779b97f4a7c15ull));
    std::vector<double> v(static_cast<std::size_t>(dim));
    double norm_sq = 0.0;
    for (auto& x : v) {
        x = rng.gaussian();
        norm_sq += x * x;
    }
    const double scale = norm_sq > 0.0 ? std::sqrt(static_cast<double>(dim) / norm_sq) : 0.0;
    for (auto& x : v) x *= scale;
    return v;
}

}  // namespace emostory
