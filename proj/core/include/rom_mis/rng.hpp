#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace rommis {

/// Seedable 64-bit generator. All randomness in the library flows from
/// explicit seeds through this wrapper; uniform draws below a bound use
/// rejection, so streams are reproducible across platforms for a fixed
/// seed (mt19937_64 is pinned by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        // masked rejection: unbiased, few retries
        std::uint64_t mask = ~0ULL;
        if (bound > 1) {
            int bits = 64 - __builtin_clzll(bound - 1);
            mask = (bits >= 64) ? ~0ULL : ((1ULL << bits) - 1);
        } else {
            return 0;
        }
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < bound)
                return v;
        }
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = index(i);
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

    /// Derives an independent stream seed from a base seed (splitmix64).
    static std::uint64_t derive(std::uint64_t base, std::uint64_t stream) {
        std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rommis
