#include "neurokex/auth.hpp"

#include <cmath>

#include "neurokex/error.hpp"

namespace neurokex {

int derive_alpha(double epsilon)
{
    if (!(epsilon >= 0.0) || epsilon >= 1.0)
        throw ParameterError("derive_alpha: epsilon must lie in [0, 1)");
    for (int alpha = 1; alpha <= 64; ++alpha) {
        if (1.0 - std::ldexp(1.0, -alpha) >= epsilon)
            return alpha;
    }
    return 64; // epsilon this close to 1 is beyond double resolution
}

} // namespace neurokex
