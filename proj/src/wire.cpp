#include "neurokex/wire.hpp"

#include "neurokex/error.hpp"

namespace neurokex {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t value)
{
    out.push_back(static_cast<std::uint8_t>(value >> 24));
    out.push_back(static_cast<std::uint8_t>(value >> 16));
    out.push_back(static_cast<std::uint8_t>(value >> 8));
    out.push_back(static_cast<std::uint8_t>(value));
}

std::uint32_t get_u32(const std::uint8_t* p)
{
    return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

bool known_type(std::uint8_t byte)
{
    return byte >= static_cast<std::uint8_t>(MessageType::hello) &&
           byte <= static_cast<std::uint8_t>(MessageType::abort_session);
}

} // namespace

std::vector<std::uint8_t> frame_message(const WireMessage& msg)
{
    if (msg.payload.size() > kMaxPayload)
        throw FramingError("frame_message: payload exceeds 2^24 - 1 bytes");
    std::vector<std::uint8_t> out;
    out.reserve(4 + msg.payload.size());
    out.push_back(static_cast<std::uint8_t>(msg.type));
    const auto len = static_cast<std::uint32_t>(msg.payload.size());
    out.push_back(static_cast<std::uint8_t>(len >> 16));
    out.push_back(static_cast<std::uint8_t>(len >> 8));
    out.push_back(static_cast<std::uint8_t>(len));
    out.insert(out.end(), msg.payload.begin(), msg.payload.end());
    return out;
}

WireMessage decode_message(const std::vector<std::uint8_t>& data, std::size_t& consumed)
{
    if (data.size() < 4)
        throw FramingError("decode_message: truncated frame header");
    if (!known_type(data[0]))
        throw FramingError("decode_message: unknown message type");
    const std::size_t len = (static_cast<std::size_t>(data[1]) << 16) |
                            (static_cast<std::size_t>(data[2]) << 8) |
                            static_cast<std::size_t>(data[3]);
    if (data.size() < 4 + len)
        throw FramingError("decode_message: truncated payload");
    WireMessage msg;
    msg.type = static_cast<MessageType>(data[0]);
    msg.payload.assign(data.begin() + 4, data.begin() + 4 + static_cast<std::ptrdiff_t>(len));
    consumed = 4 + len;
    return msg;
}

WireMessage make_hello(std::uint64_t nonce)
{
    WireMessage msg;
    msg.type = MessageType::hello;
    msg.payload.push_back(kProtocolVersion);
    for (int i = 7; i >= 0; --i)
        msg.payload.push_back(static_cast<std::uint8_t>(nonce >> (8 * i)));
    return msg;
}

WireMessage make_package(const BitPackage& bits, std::uint32_t sequence)
{
    WireMessage msg;
    msg.type = MessageType::package;
    msg.payload.assign((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 1 && bits[i] != -1)
            throw FramingError("make_package: bit outside {-1, +1}");
        if (bits[i] == 1)
            msg.payload[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
    put_u32(msg.payload, sequence);
    return msg;
}

WireMessage make_confirm_sync(std::uint32_t sync_iteration)
{
    WireMessage msg;
    msg.type = MessageType::confirm_sync;
    put_u32(msg.payload, sync_iteration);
    return msg;
}

WireMessage make_abort(AbortReason reason)
{
    WireMessage msg;
    msg.type = MessageType::abort_session;
    msg.payload.push_back(static_cast<std::uint8_t>(reason));
    return msg;
}

HelloFields parse_hello(const WireMessage& msg)
{
    if (msg.type != MessageType::hello || msg.payload.size() != 9)
        throw FramingError("parse_hello: malformed HELLO");
    HelloFields fields;
    fields.version = msg.payload[0];
    for (int i = 0; i < 8; ++i)
        fields.nonce = (fields.nonce << 8) | msg.payload[static_cast<std::size_t>(1 + i)];
    return fields;
}

PackageFields parse_package(const WireMessage& msg, int expected_bits)
{
    const std::size_t bit_bytes = (static_cast<std::size_t>(expected_bits) + 7) / 8;
    if (msg.type != MessageType::package || msg.payload.size() != bit_bytes + 4)
        throw FramingError("parse_package: malformed PACKAGE");
    PackageFields fields;
    fields.bits.reserve(static_cast<std::size_t>(expected_bits));
    for (int i = 0; i < expected_bits; ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        const bool set = (msg.payload[idx / 8] >> (7 - idx % 8)) & 1u;
        fields.bits.push_back(set ? 1 : -1);
    }
    // Padding bits must be zero.
    for (std::size_t i = static_cast<std::size_t>(expected_bits); i < bit_bytes * 8; ++i)
        if ((msg.payload[i / 8] >> (7 - i % 8)) & 1u)
            throw FramingError("parse_package: non-zero padding");
    fields.sequence = get_u32(msg.payload.data() + bit_bytes);
    return fields;
}

std::uint32_t parse_confirm_sync(const WireMessage& msg)
{
    if (msg.type != MessageType::confirm_sync || msg.payload.size() != 4)
        throw FramingError("parse_confirm_sync: malformed CONFIRM_SYNC");
    return get_u32(msg.payload.data());
}

AbortReason parse_abort(const WireMessage& msg)
{
    if (msg.type != MessageType::abort_session || msg.payload.size() != 1)
        throw FramingError("parse_abort: malformed ABORT");
    const std::uint8_t reason = msg.payload[0];
    if (reason < static_cast<std::uint8_t>(AbortReason::auth_failure) ||
        reason > static_cast<std::uint8_t>(AbortReason::protocol_error))
        throw FramingError("parse_abort: unknown reason code");
    return static_cast<AbortReason>(reason);
}

} // namespace neurokex
