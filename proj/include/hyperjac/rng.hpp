#ifndef HYPERJAC_RNG_HPP
#define HYPERJAC_RNG_HPP

#include <cstdint>

namespace hyperjac {

// SplitMix64 stream. Fully specified here so seeded workloads are identical
// across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t(0) / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    Rng r(a ^ ((b * 0xd6e8feb86659fd93ull) + 0x2545f4914f6cdd1dull));
    return r.next();
}

} // namespace hyperjac

#endif
