#include "neurokex/driver.hpp"

#include <ostream>

#include "neurokex/error.hpp"
#include "neurokex/rng.hpp"

namespace neurokex {

namespace {

bool can_continue(const Session& s)
{
    return s.status() != SessionStatus::rejected && s.status() != SessionStatus::exhausted;
}

} // namespace

TranscriptPair run_pair(Session& a, Session& b, const PairOptions& opt)
{
    if (a.config().b != b.config().b)
        throw ParameterError("run_pair: sessions use different package sizes");

    TranscriptPair out;
    std::uint64_t extra_budget = opt.extra_steps_after_sync;

    while (can_continue(a) && can_continue(b)) {
        const bool both_synced = a.status() == SessionStatus::synchronized &&
                                 b.status() == SessionStatus::synchronized;
        if (both_synced) {
            if (extra_budget == 0)
                break;
            const auto step = static_cast<std::uint64_t>(a.config().b);
            extra_budget = extra_budget > step ? extra_budget - step : 0;
        }
        if (opt.stop_when_identical && out.first_identical != 0)
            break;

        const BitPackage pkg_a = a.produce_package();
        const BitPackage pkg_b = b.produce_package();
        a.begin_consume(pkg_b);
        b.begin_consume(pkg_a);
        for (;;) {
            const StepRecord* ra = a.consume_step();
            const StepRecord* rb = b.consume_step();
            if (ra == nullptr || rb == nullptr)
                break;
            const double d = weight_distance(a.tpm(), b.tpm());
            if (out.first_identical == 0 && d == 0.0)
                out.first_identical = ra->t;
            if (opt.record_trace)
                out.trace.push_back({ra->t, d, a.status(), b.status(), ra->kind});
            if (a.status() == SessionStatus::rejected || b.status() == SessionStatus::rejected)
                break;
        }
        if (a.status() == SessionStatus::rejected || b.status() == SessionStatus::rejected)
            break;
    }

    out.status_a = a.status();
    out.status_b = b.status();
    out.iterations = a.iterations();
    out.sync_detected_a = a.sync_detected_at();
    out.sync_detected_b = b.sync_detected_at();
    out.final_distance = weight_distance(a.tpm(), b.tpm());
    return out;
}

TranscriptPair run_honest_pair(const SessionConfig& cfg_a, const SessionConfig& cfg_b,
                               std::uint64_t weight_seed_a, std::uint64_t weight_seed_b,
                               const PairOptions& opt)
{
    Session a = Session::from_seeds(cfg_a, seed_bytes(weight_seed_a), splitmix64(weight_seed_a));
    Session b = Session::from_seeds(cfg_b, seed_bytes(weight_seed_b), splitmix64(weight_seed_b));
    return run_pair(a, b, opt);
}

double mean_distance_after(const TranscriptPair& transcript, std::uint64_t t_from)
{
    double sum = 0.0;
    std::uint64_t count = 0;
    for (const auto& step : transcript.trace) {
        if (step.t > t_from) {
            sum += step.d;
            ++count;
        }
    }
    if (count == 0)
        throw ParameterError("mean_distance_after: no trace steps past t_from");
    return sum / static_cast<double>(count);
}

void write_transcript_csv(std::ostream& out, const TranscriptPair& transcript)
{
    out << "t,d,statusA,statusB,kind\n";
    for (const auto& step : transcript.trace)
        out << step.t << ',' << step.d << ',' << to_string(step.status_a) << ','
            << to_string(step.status_b) << ',' << to_string(step.kind) << '\n';
}

} // namespace neurokex
