#ifndef NEUROKEX_DRIVER_HPP
#define NEUROKEX_DRIVER_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "neurokex/session.hpp"

namespace neurokex {

struct TranscriptStep {
    std::uint64_t t = 0;
    double d = 0.0; // weight distance after this step's updates
    SessionStatus status_a = SessionStatus::synchronising;
    SessionStatus status_b = SessionStatus::synchronising;
    StepKind kind = StepKind::sync; // party A's schedule
};

struct TranscriptPair {
    SessionStatus status_a = SessionStatus::synchronising;
    SessionStatus status_b = SessionStatus::synchronising;
    std::uint64_t iterations = 0;       // steps executed by each party
    std::uint64_t sync_detected_a = 0;  // protocol-level detection, 0 = never
    std::uint64_t sync_detected_b = 0;
    std::uint64_t first_identical = 0;  // first t with weight distance 0, 0 = never
    double final_distance = 1.0;
    std::vector<TranscriptStep> trace;  // populated when record_trace is set

    bool both_synchronized() const
    {
        return status_a == SessionStatus::synchronized &&
               status_b == SessionStatus::synchronized;
    }
};

struct PairOptions {
    bool record_trace = false;
    // Stop as soon as the weights first coincide, without waiting for the
    // protocol-level window. Used by the timing experiments.
    bool stop_when_identical = false;
    // Keep exchanging for at least this many further iterations once both
    // sides report synchronized (rounded up to whole packages).
    std::uint64_t extra_steps_after_sync = 0;
};

// Drives two in-process sessions in lockstep, exchanging packages until both
// reach a terminal status (or a stop option fires). The sessions are left in
// their final state for inspection or key derivation.
TranscriptPair run_pair(Session& a, Session& b, const PairOptions& opt = {});

// Convenience wrapper: builds both sessions from seeds and runs them.
TranscriptPair run_honest_pair(const SessionConfig& cfg_a, const SessionConfig& cfg_b,
                               std::uint64_t weight_seed_a, std::uint64_t weight_seed_b,
                               const PairOptions& opt = {});

// Mean of d over trace steps with t > t_from.
double mean_distance_after(const TranscriptPair& transcript, std::uint64_t t_from);

// Columns: t,d,statusA,statusB,kind
void write_transcript_csv(std::ostream& out, const TranscriptPair& transcript);

} // namespace neurokex

#endif // NEUROKEX_DRIVER_HPP
