#ifndef NEUROKEX_ADVERSARY_HPP
#define NEUROKEX_ADVERSARY_HPP

#include <cstdint>
#include <functional>

#include "neurokex/session.hpp"
#include "neurokex/tpm.hpp"

namespace neurokex {

enum class AttackKind { eavesdrop, mitm };

// What the attacker knows about the input stream.
struct AttackerInputs {
    enum class Kind {
        public_stream,      // the honest stream itself (baseline threat model)
        offset,             // same generator, stream shifted by delta (wrong seed)
        different_generator // different register width and tap set
    };
    Kind kind = Kind::offset;
    std::uint64_t delta = 1;
};

// Update applied to the attacker's machine whenever the observed outputs
// agree. Replaceable to experiment with other attack rules.
using AttackerUpdate = std::function<void(Tpm& attacker, const InputVector& x, int observed)>;

// Naive identical-TPM rule: treat the observed common output as one's own
// and apply the usual agreement-gated update.
void naive_attacker_update(Tpm& attacker, const InputVector& x, int observed);

struct AttackScenario {
    AttackKind kind = AttackKind::eavesdrop;
    AttackerInputs inputs;
    int trials = 100;
    SessionConfig honest_cfg;
    std::uint64_t master_seed = 1;
    AttackerUpdate update; // defaults to naive_attacker_update
};

struct AttackReport {
    int trials = 0;
    // eavesdrop: trials where the attacker's distance to A hit zero by the
    // honest pair's sync completion plus a 100-step grace window.
    // mitm: trials where the attacker synchronized with both parties.
    int attacker_sync_count = 0;
    // eavesdrop: trials where the honest pair synchronized.
    // mitm: attacker sessions (2 per trial) accepted by the honest party.
    int honest_sync_count = 0;
    // mitm: attacker sessions rejected by the honest party's auth steps.
    int auth_reject_count = 0;
    double mean_attacker_final_distance = 0.0;
};

AttackReport run_eavesdropper(const AttackScenario& scenario);
AttackReport run_mitm(const AttackScenario& scenario);

} // namespace neurokex

#endif // NEUROKEX_ADVERSARY_HPP
