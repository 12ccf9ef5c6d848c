#pragma once

#include <cstdint>

namespace atlas {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937_64 because
// the whole algorithm fits on a page and its output is pinned by these few
// lines alone: reports must be byte-identical across platforms and standard
// library versions, so no library engine or distribution is used anywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, n) by rejection on the biased tail; exact, not
    // just approximately uniform.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace atlas
