#ifndef NEUROKEX_AUTH_HPP
#define NEUROKEX_AUTH_HPP

#include "neurokex/input_stream.hpp"

namespace neurokex {

enum class AuthMode {
    secret_inputs_only, // authentication is implicit in the shared stream
    explicit_zk,        // interleaved parity-challenge steps
};

// Number of challenge steps needed for statistical security epsilon:
// the smallest alpha >= 1 with 1 - 2^-alpha >= epsilon, i.e.
// ceil(log2(1 / (1 - epsilon))).
int derive_alpha(double epsilon);

struct AuthPolicy {
    AuthMode mode = AuthMode::secret_inputs_only;
    double epsilon = 0.0;
    int alpha = 0;
    AuthPattern pattern{};

    static AuthPolicy secret_inputs_only()
    {
        return AuthPolicy{};
    }

    static AuthPolicy explicit_zk(double epsilon, AuthPattern pattern = {})
    {
        AuthPolicy p;
        p.mode = AuthMode::explicit_zk;
        p.epsilon = epsilon;
        p.alpha = derive_alpha(epsilon);
        p.pattern = pattern;
        return p;
    }
};

} // namespace neurokex

#endif // NEUROKEX_AUTH_HPP
