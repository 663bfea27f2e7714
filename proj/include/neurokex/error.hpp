#ifndef NEUROKEX_ERROR_HPP
#define NEUROKEX_ERROR_HPP

#include <stdexcept>

namespace neurokex {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// LFSR register degenerated (all-zero) or similar unusable object state.
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// produce/consume called out of order, or on a finished session.
struct ProtocolOrderError : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed frame or package of unexpected size.
struct FramingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Peer behaved outside the expected message flow.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConnectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace neurokex

#endif // NEUROKEX_ERROR_HPP
