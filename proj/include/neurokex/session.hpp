#ifndef NEUROKEX_SESSION_HPP
#define NEUROKEX_SESSION_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "neurokex/auth.hpp"
#include "neurokex/input_stream.hpp"
#include "neurokex/tpm.hpp"

namespace neurokex {

enum class SessionStatus { authenticating, synchronising, synchronized, rejected, exhausted };
enum class StepKind { auth, sync };

std::string to_string(SessionStatus status);
std::string to_string(StepKind kind);

// Ordered +-1 output bits as exchanged on the channel. Carries no kind
// labels: auth and sync positions are indistinguishable on the wire.
using BitPackage = std::vector<std::int8_t>;

struct StepRecord {
    std::uint64_t t = 0;
    StepKind kind = StepKind::sync;
    int own_bit = 0;  // computed bit: machine output (sync) or input parity (auth)
    int sent_bit = 0; // own_bit after channel noise; auth bits are never flipped
    int peer_bit = 0; // 0 while pending
    TpmOutput out;    // hidden states, sync steps only
    InputVector input;
};

struct SessionConfig {
    TpmParams params;
    StreamConfig stream;
    AuthPolicy auth;
    int b = 10;                          // bit-package size
    int t_min = 50;                      // confirmation window of equal outputs
    double noise_rate = 0.0;             // per-bit flip probability, sync bits only
    std::uint64_t max_iterations = 10000;
};

void validate_config(const SessionConfig& cfg);

// One party's protocol engine. Produce a package of b output bits, hand the
// peer's package back, repeat. Weight updates are gated per bit on output
// agreement; pattern-scheduled auth steps transmit the input parity and
// never touch the weights. A value type; copying forks the session.
class Session {
  public:
    Session(const SessionConfig& cfg, Tpm tpm, std::uint64_t noise_seed = 1);

    static Session from_seeds(const SessionConfig& cfg,
                              std::span<const std::uint8_t> weight_seed,
                              std::uint64_t noise_seed = 1);

    // Test/diagnostic construction: inputs come from a fixed list instead of
    // the LFSR stream.
    static Session with_replay(const SessionConfig& cfg, Tpm tpm,
                               std::vector<InputVector> inputs,
                               std::uint64_t noise_seed = 1);

    // Draws b inputs, schedules auth vs sync per step, applies channel noise
    // to outgoing sync bits, and returns the bits for transmission.
    BitPackage produce_package();

    // Processes the peer's b bits against the pending package in order:
    // auth mismatch rejects immediately, sync bits drive learning and the
    // equal-output window.
    void consume_package(const BitPackage& peer);

    // Stepwise variant of consume_package, for drivers that interleave two
    // sessions. Returns the record just processed, or nullptr once the
    // package is finished (or the session rejected mid-package).
    void begin_consume(const BitPackage& peer);
    const StepRecord* consume_step();

    bool package_in_flight() const { return in_flight_; }
    std::span<const StepRecord> in_flight() const { return pending_; }

    SessionStatus status() const { return status_; }
    std::uint64_t iterations() const { return t_; }
    int auth_passed() const { return auth_passed_; }
    std::uint64_t equal_run() const { return equal_run_; }
    // Iteration at which the t_min window (and, in explicit_zk mode, the
    // auth threshold) was first satisfied; 0 if not yet.
    std::uint64_t sync_detected_at() const { return sync_detected_t_; }

    const Tpm& tpm() const { return tpm_; }
    const SessionConfig& config() const { return cfg_; }

    // Copy of the LFSR-backed input stream state (for trajectory walkers).
    // Throws for replay-fed sessions and while a package is in flight.
    InputStream stream_copy() const;

  private:
    struct Replay {
        std::vector<InputVector> inputs;
        std::size_t next = 0;
    };

    Session(const SessionConfig& cfg, Tpm tpm, std::variant<InputStream, Replay> feed,
            std::uint64_t noise_seed);

    InputVector draw_input();
    void process(StepRecord& r);
    void close_package();

    SessionConfig cfg_;
    Tpm tpm_;
    std::variant<InputStream, Replay> feed_;
    std::mt19937_64 noise_rng_;
    SessionStatus status_;
    std::uint64_t t_ = 0;
    int auth_passed_ = 0;
    std::uint64_t equal_run_ = 0;
    std::uint64_t sync_detected_t_ = 0;
    std::vector<StepRecord> pending_;
    std::size_t consume_idx_ = 0;
    bool in_flight_ = false;
    bool consuming_ = false;
};

} // namespace neurokex

#endif // NEUROKEX_SESSION_HPP
