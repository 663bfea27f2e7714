#ifndef NEUROKEX_INPUT_STREAM_HPP
#define NEUROKEX_INPUT_STREAM_HPP

#include <cstdint>

#include "neurokex/lfsr.hpp"
#include "neurokex/tpm.hpp"

namespace neurokex {

// The shared input secret: an LFSR seed plus the register description.
// offset delays the stream: a stream with offset D produces at its step t
// the vector the offset-0 stream produces at step t + D.
struct StreamConfig {
    LfsrSpec lfsr;
    std::uint64_t seed = 0;
    std::uint64_t offset = 0;
    TpmParams params;
};

// Deterministic +-1 input vectors drawn from the LFSR, bit 0 -> -1 and
// bit 1 -> +1, filled row-major. A value type; copying forks the stream.
class InputStream {
  public:
    explicit InputStream(const StreamConfig& cfg);

    InputVector next();

    std::uint64_t vectors_drawn() const { return drawn_; }
    const StreamConfig& config() const { return cfg_; }
    std::uint64_t lfsr_steps() const { return lfsr_.step_count(); }

  private:
    StreamConfig cfg_;
    Lfsr lfsr_;
    std::uint64_t drawn_ = 0;
};

// Challenge schedule selector: an iteration is an authentication step when
// the input vector's trailing bits equal `pattern`.
struct AuthPattern {
    int m = 4;                   // sub-pattern width, 1 <= m <= K*N
    std::uint64_t pattern = 0b0101; // m-bit value, MSB = earliest of the last m entries
};

// True iff the last m entries of x (row-major, +1 -> 1, -1 -> 0) equal the
// pattern value.
bool matches_auth_pattern(const InputVector& x, const AuthPattern& p);

// Product of all entries: +1 when the count of -1 entries is even. This is
// the bit transmitted in place of the machine output on an auth step.
int input_parity(const InputVector& x);

} // namespace neurokex

#endif // NEUROKEX_INPUT_STREAM_HPP
