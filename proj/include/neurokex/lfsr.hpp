#ifndef NEUROKEX_LFSR_HPP
#define NEUROKEX_LFSR_HPP

#include <cstdint>
#include <vector>

namespace neurokex {

// Feedback polynomial description. Tap positions are 1-based and must
// include the width; tap p reads register bit (width - p). Defaults give a
// maximal-period 64-bit register.
struct LfsrSpec {
    int width = 64;
    std::vector<int> taps = {64, 63, 61, 60};

    bool operator==(const LfsrSpec&) const = default;
};

void validate_spec(const LfsrSpec& spec);

// Fibonacci LFSR. One step: emit register bit 0, XOR the tapped bits into a
// feedback bit, shift right, insert the feedback at bit (width - 1). With a
// primitive tap polynomial the output is periodic with period 2^width - 1.
class Lfsr {
  public:
    Lfsr(const LfsrSpec& spec, std::uint64_t seed);

    int next_bit();

    std::uint64_t state() const { return state_; }
    std::uint64_t step_count() const { return steps_; }
    const LfsrSpec& spec() const { return spec_; }

  private:
    LfsrSpec spec_;
    std::uint64_t state_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t tap_mask_ = 0;
    std::uint64_t steps_ = 0;
};

} // namespace neurokex

#endif // NEUROKEX_LFSR_HPP
