#pragma once

#include <cstdint>

namespace dualtube {

/*! Counter-based splittable pseudorandom stream (SplitMix64 core).
 *
 *  Identical seed => identical sequence, independent of platform/libc, which
 *  is the reproducibility contract the samplers rely on. SplitMix64 passes
 *  BigCrush as a 64-bit mixer and is the standard seeding/splitting choice;
 *  substreams are obtained from disjoint seeds.
 */
class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    //! Uniform double in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    //! Uniform double in the half-open interval (0, 1]: never returns 0.
    double next_double_open0() { return 1.0 - next_double(); }

    //! Uniform integer in {0, ..., n-1} (Lemire multiply-shift; n > 0).
    std::uint64_t next_below(std::uint64_t n) {
        // 128-bit multiply keeps the map unbiased enough for n << 2^64
        // (bias < n/2^64, irrelevant for n <= a few hundred).
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace dualtube
