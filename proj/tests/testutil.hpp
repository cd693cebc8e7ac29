#pragma once

#include <cstdint>

#include "qlt/field.hpp"

namespace qlt::testing {

// Deterministic generator for property tests.
struct SplitMix {
    std::uint64_t state;

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::int64_t in_range(std::int64_t lo, std::int64_t hi) { // inclusive
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Rat random_rat(SplitMix& rng) {
    return make_rational(rng.in_range(-60, 60), rng.in_range(1, 40));
}

inline Rat random_nonzero_rat(SplitMix& rng) {
    for (;;) {
        const Rat x = random_rat(rng);
        if (!x.is_zero()) return x;
    }
}

inline Fp random_fp(SplitMix& rng, std::uint64_t p) {
    return Fp(static_cast<std::int64_t>(rng.next() % p), p);
}

inline Fp random_nonzero_fp(SplitMix& rng, std::uint64_t p) {
    return Fp(static_cast<std::int64_t>(1 + rng.next() % (p - 1)), p);
}

} // namespace qlt::testing
