#include "neurokex/keying.hpp"

#include <openssl/sha.h>

#include "neurokex/error.hpp"

namespace neurokex {

int snapshot_bits_per_weight(const TpmParams& params)
{
    const int values = 2 * params.l + 1;
    int bits = 1;
    while ((1 << bits) < values)
        ++bits;
    return bits;
}

Bits encode_weights(const Tpm& tpm)
{
    const int per_weight = snapshot_bits_per_weight(tpm.params());
    Bits out;
    for (const auto w : tpm.weights())
        out.append_uint(static_cast<std::uint64_t>(static_cast<int>(w) + tpm.params().l),
                        per_weight);
    return out;
}

TrajectoryWalker::TrajectoryWalker(Tpm tpm, InputStream stream)
    : tpm_(std::move(tpm)), stream_(std::move(stream))
{
    if (!(tpm_.params() == stream_.config().params))
        throw ParameterError("TrajectoryWalker: stream sized for a different machine");
}

void TrajectoryWalker::advance()
{
    const InputVector x = stream_.next();
    const TpmOutput out = tpm_.compute(x);
    tpm_.learn(x, out, out.output); // own output: always an agreement
    ++step_;
}

TrajectoryWalker walker_from_session(const Session& session)
{
    return TrajectoryWalker(session.tpm(), session.stream_copy());
}

namespace {

Bits snapshot(const TrajectoryWalker& walker, bool whiten)
{
    Bits raw = encode_weights(walker.tpm());
    if (!whiten)
        return raw;
    const auto digest = sha256(raw.bytes());
    Bits out;
    for (const auto byte : digest)
        out.append_uint(byte, 8);
    return out;
}

} // namespace

KeyMaterial derive_key(TrajectoryWalker& walker, std::size_t target_bits, std::size_t stride,
                       bool whiten)
{
    if (target_bits < 1)
        throw ParameterError("derive_key: target_bits must be >= 1");
    if (stride < 1)
        throw ParameterError("derive_key: stride must be >= 1");

    KeyMaterial key;
    key.bits = snapshot(walker, whiten);
    key.source_iterations.push_back(walker.step());
    while (key.bits.size() < target_bits) {
        for (std::size_t i = 0; i < stride; ++i)
            walker.advance();
        key.bits.append(snapshot(walker, whiten));
        key.source_iterations.push_back(walker.step());
    }
    key.bits.truncate(target_bits);
    return key;
}

OtpStream::OtpStream(TrajectoryWalker walker, bool whiten)
    : walker_(std::move(walker)), whiten_(whiten)
{
    buffer_ = snapshot(walker_, whiten_);
}

void OtpStream::refill()
{
    walker_.advance();
    buffer_ = snapshot(walker_, whiten_);
    pos_ = 0;
}

bool OtpStream::next_bit()
{
    if (pos_ >= buffer_.size())
        refill();
    return buffer_[pos_++];
}

std::uint8_t OtpStream::next_byte()
{
    std::uint8_t byte = 0;
    for (int i = 0; i < 8; ++i)
        byte = static_cast<std::uint8_t>((byte << 1) | (next_bit() ? 1 : 0));
    return byte;
}

void OtpStream::xor_buffer(std::span<std::uint8_t> data)
{
    for (auto& byte : data)
        byte ^= next_byte();
}

std::vector<std::uint8_t> sha256(std::span<const std::uint8_t> data)
{
    std::vector<std::uint8_t> digest(SHA256_DIGEST_LENGTH);
    SHA256(data.data(), data.size(), digest.data());
    return digest;
}

} // namespace neurokex
