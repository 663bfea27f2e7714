#ifndef NEUROKEX_KEYING_HPP
#define NEUROKEX_KEYING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "neurokex/bits.hpp"
#include "neurokex/input_stream.hpp"
#include "neurokex/session.hpp"
#include "neurokex/tpm.hpp"

namespace neurokex {

// Bits per weight in the canonical snapshot encoding.
int snapshot_bits_per_weight(const TpmParams& params);

// Canonical, injective weight-matrix encoding: each weight maps to w + L and
// is packed MSB-first in ceil(log2(2L+1)) bits, row-major. K=3, N=101, L=3
// gives 909-bit snapshots.
Bits encode_weights(const Tpm& tpm);

struct KeyMaterial {
    Bits bits;
    std::vector<std::uint64_t> source_iterations; // walker steps of the snapshots

    std::string hex() const { return bits.to_hex(); }
};

// Post-synchronisation evolution without communication: each step learns
// from the machine's own output (always an agreement). Two walkers forked
// from identically synchronized sessions stay identical forever.
class TrajectoryWalker {
  public:
    TrajectoryWalker(Tpm tpm, InputStream stream);

    void advance();
    std::uint64_t step() const { return step_; }
    const Tpm& tpm() const { return tpm_; }

  private:
    Tpm tpm_;
    InputStream stream_;
    std::uint64_t step_ = 0;
};

// Forks a walker from the session's machine and input stream state.
TrajectoryWalker walker_from_session(const Session& session);

// Concatenates trajectory snapshots (every `stride` steps, starting with the
// walker's current state) until target_bits are available, then truncates.
// With whiten set, each snapshot contributes its SHA-256 digest instead of
// the raw weight bits.
KeyMaterial derive_key(TrajectoryWalker& walker, std::size_t target_bits, std::size_t stride = 1,
                       bool whiten = false);

// Unbounded keystream: the snapshot bits of successive trajectory steps.
class OtpStream {
  public:
    explicit OtpStream(TrajectoryWalker walker, bool whiten = false);

    bool next_bit();
    std::uint8_t next_byte();
    void xor_buffer(std::span<std::uint8_t> data);

  private:
    void refill();

    TrajectoryWalker walker_;
    bool whiten_;
    Bits buffer_;
    std::size_t pos_ = 0;
};

std::vector<std::uint8_t> sha256(std::span<const std::uint8_t> data);

} // namespace neurokex

#endif // NEUROKEX_KEYING_HPP
