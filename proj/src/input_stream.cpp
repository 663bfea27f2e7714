#include "neurokex/input_stream.hpp"

#include "neurokex/error.hpp"

namespace neurokex {

InputStream::InputStream(const StreamConfig& cfg) : cfg_(cfg), lfsr_(cfg.lfsr, cfg.seed)
{
    validate_params(cfg.params);
    // Skip offset * K*N bits so step t here equals step t + offset upstream.
    const std::uint64_t skip = cfg.offset * static_cast<std::uint64_t>(cfg.params.weight_count());
    for (std::uint64_t i = 0; i < skip; ++i)
        lfsr_.next_bit();
}

InputVector InputStream::next()
{
    InputVector x;
    x.rows = cfg_.params.k;
    x.cols = cfg_.params.n;
    x.v.resize(static_cast<std::size_t>(cfg_.params.weight_count()));
    for (auto& entry : x.v)
        entry = lfsr_.next_bit() ? 1 : -1;
    ++drawn_;
    return x;
}

bool matches_auth_pattern(const InputVector& x, const AuthPattern& p)
{
    const std::size_t total = x.v.size();
    if (p.m < 1 || static_cast<std::size_t>(p.m) > total)
        throw ParameterError("AuthPattern: width m outside [1, K*N]");
    std::uint64_t tail = 0;
    for (std::size_t i = total - static_cast<std::size_t>(p.m); i < total; ++i)
        tail = (tail << 1) | (x.v[i] > 0 ? 1u : 0u);
    return tail == p.pattern;
}

int input_parity(const InputVector& x)
{
    int parity = 1;
    for (const auto entry : x.v)
        parity *= static_cast<int>(entry);
    return parity;
}

} // namespace neurokex
