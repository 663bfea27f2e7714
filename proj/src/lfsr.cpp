#include "neurokex/lfsr.hpp"

#include <bit>

#include "neurokex/error.hpp"

namespace neurokex {

void validate_spec(const LfsrSpec& spec)
{
    if (spec.width < 2 || spec.width > 64)
        throw ParameterError("LfsrSpec: width must be in [2, 64]");
    if (spec.taps.empty())
        throw ParameterError("LfsrSpec: tap set must not be empty");
    int max_tap = 0;
    std::uint64_t seen = 0;
    for (const int tap : spec.taps) {
        if (tap < 1 || tap > spec.width)
            throw ParameterError("LfsrSpec: tap position outside [1, width]");
        const std::uint64_t bit = 1ULL << (tap - 1);
        if (seen & bit)
            throw ParameterError("LfsrSpec: duplicate tap position");
        seen |= bit;
        if (tap > max_tap)
            max_tap = tap;
    }
    if (max_tap != spec.width)
        throw ParameterError("LfsrSpec: tap set must include the register width");
}

Lfsr::Lfsr(const LfsrSpec& spec, std::uint64_t seed) : spec_(spec)
{
    validate_spec(spec);
    mask_ = spec.width == 64 ? ~0ULL : (1ULL << spec.width) - 1;
    for (const int tap : spec.taps)
        tap_mask_ |= 1ULL << (spec.width - tap);
    state_ = seed & mask_;
    if (state_ == 0)
        throw ParameterError("Lfsr: seed must be non-zero in the register width");
}

int Lfsr::next_bit()
{
    if (state_ == 0)
        throw InvalidStateError("Lfsr: register degenerated to all-zero");
    const int out = static_cast<int>(state_ & 1u);
    const int feedback = std::popcount(state_ & tap_mask_) & 1;
    state_ = (state_ >> 1) | (static_cast<std::uint64_t>(feedback) << (spec_.width - 1));
    ++steps_;
    return out;
}

} // namespace neurokex
