#include "neurokex/adversary.hpp"

#include <vector>

#include "neurokex/driver.hpp"
#include "neurokex/error.hpp"
#include "neurokex/parallel.hpp"
#include "neurokex/rng.hpp"

namespace neurokex {

namespace {

enum SeedTag : std::uint64_t {
    kStreamSeed = 1,
    kWeightsA = 2,
    kWeightsB = 3,
    kWeightsEveA = 4,
    kWeightsEveB = 5,
    kDiffGenSeed = 6,
};

constexpr std::uint64_t kGraceSteps = 100;

std::uint64_t nonzero_seed(std::uint64_t value, int width)
{
    const std::uint64_t mask = width == 64 ? ~0ULL : (1ULL << width) - 1;
    value &= mask;
    return value == 0 ? 1 : value;
}

// Honest per-trial stream seed, mixed from the scenario master seed.
std::uint64_t trial_stream_seed(const AttackScenario& s, int trial)
{
    const std::uint64_t raw =
        derive_seed(s.master_seed ^ s.honest_cfg.stream.seed, static_cast<std::uint64_t>(trial),
                    kStreamSeed);
    return nonzero_seed(raw, s.honest_cfg.stream.lfsr.width);
}

StreamConfig attacker_stream(const AttackScenario& s, const StreamConfig& honest, int trial)
{
    StreamConfig cfg = honest;
    switch (s.inputs.kind) {
    case AttackerInputs::Kind::public_stream:
        break;
    case AttackerInputs::Kind::offset:
        cfg.offset += s.inputs.delta;
        break;
    case AttackerInputs::Kind::different_generator:
        cfg.lfsr = LfsrSpec{63, {63, 62}};
        cfg.seed = nonzero_seed(
            derive_seed(s.master_seed, static_cast<std::uint64_t>(trial), kDiffGenSeed),
            cfg.lfsr.width);
        cfg.offset = 0;
        break;
    }
    return cfg;
}

void validate_scenario(const AttackScenario& s)
{
    validate_config(s.honest_cfg);
    if (s.trials < 1)
        throw ParameterError("AttackScenario: trials must be >= 1");
    if (s.inputs.kind == AttackerInputs::Kind::public_stream &&
        s.honest_cfg.auth.mode == AuthMode::explicit_zk)
        throw ParameterError(
            "AttackScenario: public attacker inputs are only valid against the baseline");
    if (s.inputs.kind == AttackerInputs::Kind::offset && s.inputs.delta == 0)
        throw ParameterError("AttackScenario: offset attacker needs delta >= 1");
}

AttackerUpdate update_rule(const AttackScenario& s)
{
    return s.update ? s.update : naive_attacker_update;
}

Tpm trial_tpm(const AttackScenario& s, int trial, SeedTag tag)
{
    return Tpm(s.honest_cfg.params,
               seed_bytes(derive_seed(s.master_seed, static_cast<std::uint64_t>(trial), tag)));
}

} // namespace

void naive_attacker_update(Tpm& attacker, const InputVector& x, int observed)
{
    TpmOutput as_own = attacker.compute(x);
    as_own.output = observed;
    attacker.learn(x, as_own, observed);
}

AttackReport run_eavesdropper(const AttackScenario& scenario)
{
    validate_scenario(scenario);
    const AttackerUpdate update = update_rule(scenario);

    const int trials = scenario.trials;
    std::vector<int> eve_hit(static_cast<std::size_t>(trials), 0);
    std::vector<int> honest_sync(static_cast<std::size_t>(trials), 0);
    std::vector<double> final_distance(static_cast<std::size_t>(trials), 0.0);

    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
        const int i = static_cast<int>(trial);
        SessionConfig cfg = scenario.honest_cfg;
        cfg.stream.seed = trial_stream_seed(scenario, i);

        Session a(cfg, trial_tpm(scenario, i, kWeightsA));
        Session b(cfg, trial_tpm(scenario, i, kWeightsB));
        Tpm eve = trial_tpm(scenario, i, kWeightsEveA);
        InputStream eve_stream(attacker_stream(scenario, cfg.stream, i));

        bool hit = false;
        std::uint64_t grace_end = 0;
        while (a.status() != SessionStatus::exhausted && b.status() != SessionStatus::exhausted &&
               a.status() != SessionStatus::rejected && b.status() != SessionStatus::rejected) {
            if (a.status() == SessionStatus::synchronized &&
                b.status() == SessionStatus::synchronized) {
                if (grace_end == 0)
                    grace_end = a.iterations() + kGraceSteps;
                if (a.iterations() >= grace_end)
                    break;
            }
            const BitPackage pkg_a = a.produce_package();
            const BitPackage pkg_b = b.produce_package();
            a.begin_consume(pkg_b);
            b.begin_consume(pkg_a);
            for (std::size_t j = 0; j < pkg_a.size(); ++j) {
                a.consume_step();
                b.consume_step();
                const InputVector xe = eve_stream.next();
                if (pkg_a[j] == pkg_b[j])
                    update(eve, xe, pkg_a[j]);
                if (!hit && weight_distance(eve, a.tpm()) == 0.0)
                    hit = true;
            }
        }
        eve_hit[trial] = hit ? 1 : 0;
        honest_sync[trial] = (a.status() == SessionStatus::synchronized &&
                              b.status() == SessionStatus::synchronized)
                                 ? 1
                                 : 0;
        final_distance[trial] = weight_distance(eve, a.tpm());
    });

    AttackReport report;
    report.trials = trials;
    for (int i = 0; i < trials; ++i) {
        report.attacker_sync_count += eve_hit[static_cast<std::size_t>(i)];
        report.honest_sync_count += honest_sync[static_cast<std::size_t>(i)];
        report.mean_attacker_final_distance += final_distance[static_cast<std::size_t>(i)];
    }
    report.mean_attacker_final_distance /= static_cast<double>(trials);
    return report;
}

AttackReport run_mitm(const AttackScenario& scenario)
{
    validate_scenario(scenario);
    if (scenario.kind != AttackKind::mitm)
        throw ParameterError("run_mitm: scenario kind must be mitm");

    const int trials = scenario.trials;
    std::vector<int> both_synced(static_cast<std::size_t>(trials), 0);
    std::vector<int> accepted(static_cast<std::size_t>(trials), 0);
    std::vector<int> rejected(static_cast<std::size_t>(trials), 0);
    std::vector<double> final_distance(static_cast<std::size_t>(trials), 0.0);

    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
        const int i = static_cast<int>(trial);
        SessionConfig honest = scenario.honest_cfg;
        honest.stream.seed = trial_stream_seed(scenario, i);
        SessionConfig attacker = honest;
        attacker.stream = attacker_stream(scenario, honest.stream, i);

        // The attacker cuts the channel and runs one session towards each
        // honest party with its own stream guess.
        Session a(honest, trial_tpm(scenario, i, kWeightsA));
        Session eve_a(attacker, trial_tpm(scenario, i, kWeightsEveA));
        Session b(honest, trial_tpm(scenario, i, kWeightsB));
        Session eve_b(attacker, trial_tpm(scenario, i, kWeightsEveB));

        TranscriptPair side_a = run_pair(a, eve_a);
        TranscriptPair side_b = run_pair(b, eve_b);

        int accepted_here = 0;
        int rejected_here = 0;
        for (const auto status : {side_a.status_a, side_b.status_a}) {
            if (status == SessionStatus::synchronized)
                ++accepted_here;
            if (status == SessionStatus::rejected)
                ++rejected_here;
        }
        accepted[trial] = accepted_here;
        rejected[trial] = rejected_here;
        both_synced[trial] = (side_a.status_a == SessionStatus::synchronized &&
                              side_b.status_a == SessionStatus::synchronized)
                                 ? 1
                                 : 0;
        final_distance[trial] = weight_distance(eve_a.tpm(), a.tpm());
    });

    AttackReport report;
    report.trials = trials;
    for (int i = 0; i < trials; ++i) {
        report.attacker_sync_count += both_synced[static_cast<std::size_t>(i)];
        report.honest_sync_count += accepted[static_cast<std::size_t>(i)];
        report.auth_reject_count += rejected[static_cast<std::size_t>(i)];
        report.mean_attacker_final_distance += final_distance[static_cast<std::size_t>(i)];
    }
    report.mean_attacker_final_distance /= static_cast<double>(trials);
    return report;
}

} // namespace neurokex
