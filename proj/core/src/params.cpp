#include "qlt/params.hpp"

namespace qlt {

namespace {

constexpr std::uint64_t kSplitMixGamma = 0x9e3779b97f4a7c15ull;

// SplitMix64 step (Steele, Lea, Flood). Fixed here so that sampled reports
// are reproducible across platforms and builds.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += kSplitMixGamma;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform draw from [0, bound) by rejection, so there is no modulo bias.
std::uint64_t draw_below(std::uint64_t& state, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        const std::uint64_t x = splitmix64(state);
        if (x >= threshold) return x % bound;
    }
}

} // namespace

QRacahParams<Fp> sample_params(const Field& field, int d, std::uint64_t seed) {
    if (field.kind() != FieldKind::prime) throw error("sampling requires a prime field");
    if (d < 0) throw error("diameter must be nonnegative");
    const std::uint64_t p = field.modulus();
    // stream state: fold (p, d) into the seed with two SplitMix64 steps
    std::uint64_t state = seed;
    state = splitmix64(state) ^ p;
    state = splitmix64(state) ^ static_cast<std::uint64_t>(d);
    auto nonzero = [&]() { return Fp(static_cast<std::int64_t>(1 + draw_below(state, p - 1)), p); };
    for (int round = 0; round < 10000; ++round) {
        const Fp q = nonzero(), a = nonzero(), b = nonzero(), c = nonzero();
        try {
            return validate_params(q, a, b, c, d);
        } catch (const assumption_error&) {
            // rejected; draw again
        }
    }
    throw error("sampling exhausted");
}

} // namespace qlt
