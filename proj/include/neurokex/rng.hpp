#ifndef NEUROKEX_RNG_HPP
#define NEUROKEX_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace neurokex {

// mt19937_64 seeded from an arbitrary byte string via std::seed_seq. Both
// pieces are fully specified by the standard, so the draw sequence is
// reproducible across platforms.
inline std::mt19937_64 rng_from_bytes(std::span<const std::uint8_t> seed)
{
    std::vector<std::uint32_t> words(seed.begin(), seed.end());
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

inline std::vector<std::uint8_t> seed_bytes(std::uint64_t value)
{
    std::vector<std::uint8_t> out(8);
    for (int i = 0; i < 8; ++i)
        out[i] = static_cast<std::uint8_t>(value >> (8 * i));
    return out;
}

// Unbiased draw from [0, n). Avoids uniform_int_distribution, whose output
// sequence is implementation-defined.
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n)
{
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    for (;;) {
        const std::uint64_t r = g();
        if (r >= threshold)
            return r % n;
    }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& g)
{
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-mode seed splitting: independent sub-seeds for run `index`,
// distinguished by `stream_id` (weights A/B, input stream, noise, ...).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                 std::uint64_t stream_id)
{
    std::uint64_t s = splitmix64(master ^ splitmix64(index));
    return splitmix64(s ^ splitmix64(stream_id * 0xd1342543de82ef95ULL));
}

} // namespace neurokex

#endif // NEUROKEX_RNG_HPP
