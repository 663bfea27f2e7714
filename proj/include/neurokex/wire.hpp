#ifndef NEUROKEX_WIRE_HPP
#define NEUROKEX_WIRE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "neurokex/session.hpp"

namespace neurokex {

// Frame layout: 1 type byte, 3-byte big-endian payload length, payload.
//
//   HELLO        payload = 1 version byte + 8 nonce bytes
//   PACKAGE      payload = ceil(b/8) bytes of packed bits (+1 -> 1, -1 -> 0,
//                MSB-first, zero padding) + 4-byte big-endian sequence number
//   CONFIRM_SYNC payload = 4-byte big-endian sync iteration count
//   ABORT        payload = 1 reason byte
//
// No field distinguishes auth bits from sync bits.
enum class MessageType : std::uint8_t {
    hello = 0x01,
    package = 0x02,
    confirm_sync = 0x03,
    abort_session = 0x04,
};

enum class AbortReason : std::uint8_t {
    auth_failure = 0x01,
    exhausted = 0x02,
    frame_error = 0x03,
    protocol_error = 0x04,
};

struct WireMessage {
    MessageType type = MessageType::hello;
    std::vector<std::uint8_t> payload;

    bool operator==(const WireMessage&) const = default;
};

constexpr std::uint8_t kProtocolVersion = 1;
constexpr std::size_t kMaxPayload = (1u << 24) - 1;

std::vector<std::uint8_t> frame_message(const WireMessage& msg);

// Decodes one frame from the front of `data`. Throws FramingError if the
// buffer does not hold a complete, well-formed frame. `consumed` receives
// the number of bytes read.
WireMessage decode_message(const std::vector<std::uint8_t>& data, std::size_t& consumed);

WireMessage make_hello(std::uint64_t nonce);
WireMessage make_package(const BitPackage& bits, std::uint32_t sequence);
WireMessage make_confirm_sync(std::uint32_t sync_iteration);
WireMessage make_abort(AbortReason reason);

// Payload views. Each throws FramingError if the payload shape is wrong.
struct HelloFields {
    std::uint8_t version = 0;
    std::uint64_t nonce = 0;
};
HelloFields parse_hello(const WireMessage& msg);

struct PackageFields {
    BitPackage bits;
    std::uint32_t sequence = 0;
};
PackageFields parse_package(const WireMessage& msg, int expected_bits);

std::uint32_t parse_confirm_sync(const WireMessage& msg);
AbortReason parse_abort(const WireMessage& msg);

} // namespace neurokex

#endif // NEUROKEX_WIRE_HPP
