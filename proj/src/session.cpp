#include "neurokex/session.hpp"

#include <utility>

#include "neurokex/error.hpp"
#include "neurokex/rng.hpp"

namespace neurokex {

std::string to_string(SessionStatus status)
{
    switch (status) {
    case SessionStatus::authenticating: return "authenticating";
    case SessionStatus::synchronising: return "synchronising";
    case SessionStatus::synchronized: return "synchronized";
    case SessionStatus::rejected: return "rejected";
    case SessionStatus::exhausted: return "exhausted";
    }
    return "?";
}

std::string to_string(StepKind kind)
{
    return kind == StepKind::auth ? "auth" : "sync";
}

void validate_config(const SessionConfig& cfg)
{
    validate_params(cfg.params);
    if (!(cfg.stream.params == cfg.params))
        throw ParameterError("SessionConfig: stream is sized for a different machine");
    validate_spec(cfg.stream.lfsr);
    const std::uint64_t mask =
        cfg.stream.lfsr.width == 64 ? ~0ULL : (1ULL << cfg.stream.lfsr.width) - 1;
    if ((cfg.stream.seed & mask) == 0)
        throw ParameterError("SessionConfig: stream seed must be non-zero");
    if (cfg.b < 1)
        throw ParameterError("SessionConfig: bit-package size must be >= 1");
    if (cfg.t_min < 1)
        throw ParameterError("SessionConfig: t_min must be >= 1");
    if (!(cfg.noise_rate >= 0.0 && cfg.noise_rate <= 1.0))
        throw ParameterError("SessionConfig: noise_rate must lie in [0, 1]");
    if (cfg.max_iterations < 1)
        throw ParameterError("SessionConfig: max_iterations must be >= 1");
    if (cfg.auth.mode == AuthMode::explicit_zk) {
        if (cfg.auth.alpha != derive_alpha(cfg.auth.epsilon))
            throw ParameterError("SessionConfig: alpha does not match epsilon");
        const auto& p = cfg.auth.pattern;
        if (p.m < 1 || p.m > cfg.params.weight_count())
            throw ParameterError("SessionConfig: auth pattern width outside [1, K*N]");
        if (p.m < 64 && p.pattern >= (1ULL << p.m))
            throw ParameterError("SessionConfig: auth pattern value wider than m bits");
    }
}

Session::Session(const SessionConfig& cfg, Tpm tpm, std::variant<InputStream, Replay> feed,
                 std::uint64_t noise_seed)
    : cfg_(cfg),
      tpm_(std::move(tpm)),
      feed_(std::move(feed)),
      noise_rng_(splitmix64(noise_seed)),
      status_(cfg.auth.mode == AuthMode::explicit_zk ? SessionStatus::authenticating
                                                     : SessionStatus::synchronising)
{
    validate_config(cfg_);
    if (!(tpm_.params() == cfg_.params))
        throw ParameterError("Session: machine parameters differ from configuration");
}

Session::Session(const SessionConfig& cfg, Tpm tpm, std::uint64_t noise_seed)
    : Session(cfg, std::move(tpm), InputStream(cfg.stream), noise_seed)
{
}

Session Session::from_seeds(const SessionConfig& cfg, std::span<const std::uint8_t> weight_seed,
                            std::uint64_t noise_seed)
{
    return Session(cfg, Tpm(cfg.params, weight_seed), noise_seed);
}

Session Session::with_replay(const SessionConfig& cfg, Tpm tpm, std::vector<InputVector> inputs,
                             std::uint64_t noise_seed)
{
    return Session(cfg, std::move(tpm), Replay{std::move(inputs), 0}, noise_seed);
}

InputStream Session::stream_copy() const
{
    if (in_flight_)
        throw ProtocolOrderError("stream_copy: package in flight");
    const auto* stream = std::get_if<InputStream>(&feed_);
    if (stream == nullptr)
        throw InvalidStateError("stream_copy: session is replay-fed");
    return *stream;
}

InputVector Session::draw_input()
{
    if (auto* stream = std::get_if<InputStream>(&feed_))
        return stream->next();
    auto& replay = std::get<Replay>(feed_);
    if (replay.next >= replay.inputs.size())
        throw InvalidStateError("Session: replay input feed exhausted");
    return replay.inputs[replay.next++];
}

BitPackage Session::produce_package()
{
    if (status_ == SessionStatus::rejected || status_ == SessionStatus::exhausted)
        throw ProtocolOrderError("produce_package: session is " + to_string(status_));
    if (in_flight_)
        throw ProtocolOrderError("produce_package: package already in flight");

    pending_.clear();
    pending_.reserve(static_cast<std::size_t>(cfg_.b));
    consume_idx_ = 0;
    int tentative_auth = 0;

    for (int i = 0; i < cfg_.b; ++i) {
        StepRecord r;
        r.t = ++t_;
        r.input = draw_input();
        const bool auth_step = cfg_.auth.mode == AuthMode::explicit_zk &&
                               auth_passed_ + tentative_auth < cfg_.auth.alpha &&
                               matches_auth_pattern(r.input, cfg_.auth.pattern);
        if (auth_step) {
            r.kind = StepKind::auth;
            r.own_bit = input_parity(r.input);
            r.sent_bit = r.own_bit;
            ++tentative_auth;
        }
        else {
            r.kind = StepKind::sync;
            r.out = tpm_.compute(r.input);
            r.own_bit = r.out.output;
            r.sent_bit = r.own_bit;
            if (cfg_.noise_rate > 0.0 && uniform_unit(noise_rng_) < cfg_.noise_rate)
                r.sent_bit = -r.sent_bit;
        }
        pending_.push_back(std::move(r));
    }

    in_flight_ = true;
    BitPackage out;
    out.reserve(pending_.size());
    for (const auto& r : pending_)
        out.push_back(static_cast<std::int8_t>(r.sent_bit));
    return out;
}

void Session::begin_consume(const BitPackage& peer)
{
    if (!in_flight_)
        throw ProtocolOrderError("consume: no package in flight");
    if (consuming_)
        throw ProtocolOrderError("consume: already consuming");
    if (peer.size() != pending_.size())
        throw FramingError("consume: peer package has wrong size");
    for (const auto bit : peer)
        if (bit != 1 && bit != -1)
            throw FramingError("consume: peer bit outside {-1, +1}");
    for (std::size_t i = 0; i < peer.size(); ++i)
        pending_[i].peer_bit = peer[i];
    consuming_ = true;
    consume_idx_ = 0;
}

const StepRecord* Session::consume_step()
{
    if (!consuming_)
        throw ProtocolOrderError("consume_step: no consumption in progress");
    if (status_ == SessionStatus::rejected || consume_idx_ >= pending_.size()) {
        close_package();
        return nullptr;
    }
    StepRecord& r = pending_[consume_idx_++];
    process(r);
    if (consume_idx_ >= pending_.size() || status_ == SessionStatus::rejected)
        close_package();
    return &r;
}

void Session::consume_package(const BitPackage& peer)
{
    begin_consume(peer);
    while (consuming_)
        consume_step();
}

void Session::process(StepRecord& r)
{
    if (r.kind == StepKind::auth) {
        if (r.peer_bit != r.own_bit) {
            status_ = SessionStatus::rejected; // abort on first mismatch
            return;
        }
        ++auth_passed_;
        ++equal_run_;
    }
    else {
        tpm_.learn(r.input, r.out, r.peer_bit);
        if (r.peer_bit == r.own_bit)
            ++equal_run_;
        else
            equal_run_ = 0;
    }

    if (status_ == SessionStatus::authenticating && auth_passed_ >= cfg_.auth.alpha)
        status_ = SessionStatus::synchronising;
    if (status_ == SessionStatus::synchronising &&
        equal_run_ >= static_cast<std::uint64_t>(cfg_.t_min)) {
        status_ = SessionStatus::synchronized;
        sync_detected_t_ = r.t;
    }
}

void Session::close_package()
{
    consuming_ = false;
    in_flight_ = false;
    if ((status_ == SessionStatus::authenticating || status_ == SessionStatus::synchronising) &&
        t_ >= cfg_.max_iterations)
        status_ = SessionStatus::exhausted;
}

} // namespace neurokex
