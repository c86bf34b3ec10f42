#ifndef ROBSEL_RNG_HPP
#define ROBSEL_RNG_HPP

#include <cstdint>

namespace robsel {

/// SplitMix64 generator.
///
/// Chosen because it is a named, widely documented algorithm whose output is
/// a pure function of the 64-bit state, which keeps sampled instances stable
/// across platforms and library versions. Substreams are derived with
/// `substream(seed, id)` so that vector rows draw from independent streams:
/// appending scenario rows never changes the draws of earlier rows.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], both inclusive, via rejection sampling
    /// (no modulo bias).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) return lo + static_cast<std::int64_t>(next()); // full 64-bit range
        std::uint64_t min_accept = (0ULL - range) % range; // 2^64 mod range
        std::uint64_t r;
        do {
            r = next();
        } while (r < min_accept);
        return lo + static_cast<std::int64_t>(r % range);
    }

    /// Fair coin; true with probability 1/2.
    bool coin() { return (next() & 1ULL) != 0; }

private:
    std::uint64_t state_;
};

/// Derives the generator for substream `id` of a master seed. Two mixing
/// rounds keep nearby (seed, id) pairs uncorrelated.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t id) {
    SplitMix64 outer(seed);
    std::uint64_t mixed = outer.next() ^ (id * 0xD1B54A32D192ED03ULL);
    SplitMix64 inner(mixed);
    return SplitMix64(inner.next());
}

} // namespace robsel

#endif
