#include "neurokex/tpm.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "neurokex/error.hpp"
#include "neurokex/rng.hpp"

namespace neurokex {

void validate_params(const TpmParams& params)
{
    if (params.k < 1 || params.n < 1 || params.l < 1)
        throw ParameterError("TpmParams: K, N, L must be positive");
    if (params.l > 120)
        throw ParameterError("TpmParams: L exceeds the supported weight range");
}

Tpm::Tpm(const TpmParams& params, std::span<const std::uint8_t> seed) : params_(params)
{
    validate_params(params);
    if (seed.empty())
        throw ParameterError("Tpm: seed must be non-empty");
    auto rng = rng_from_bytes(seed);
    const std::uint64_t values = 2u * static_cast<unsigned>(params.l) + 1u;
    weights_.resize(static_cast<std::size_t>(params.weight_count()));
    for (auto& w : weights_)
        w = static_cast<std::int8_t>(static_cast<int>(uniform_below(rng, values)) - params.l);
}

Tpm::Tpm(const TpmParams& params, std::vector<std::int8_t> weights)
    : params_(params), weights_(std::move(weights))
{
    validate_params(params);
    if (weights_.size() != static_cast<std::size_t>(params.weight_count()))
        throw DimensionError("Tpm: weight matrix has wrong size");
    for (const auto w : weights_)
        if (w < -params.l || w > params.l)
            throw ParameterError("Tpm: weight outside [-L, L]");
}

void Tpm::check_shape(const InputVector& x) const
{
    if (x.rows != params_.k || x.cols != params_.n)
        throw DimensionError("input vector shape does not match machine geometry");
}

TpmOutput Tpm::compute(const InputVector& x) const
{
    check_shape(x);
    TpmOutput out;
    out.hidden.resize(static_cast<std::size_t>(params_.k));
    out.output = 1;
    const std::size_t n = static_cast<std::size_t>(params_.n);
    for (int k = 0; k < params_.k; ++k) {
        const std::int8_t* w = weights_.data() + static_cast<std::size_t>(k) * n;
        const std::int8_t* xi = x.v.data() + static_cast<std::size_t>(k) * n;
        int sum = 0;
        for (std::size_t j = 0; j < n; ++j)
            sum += static_cast<int>(w[j]) * static_cast<int>(xi[j]);
        const std::int8_t y = sum > 0 ? 1 : -1; // sigma(0) = -1
        out.hidden[static_cast<std::size_t>(k)] = y;
        out.output *= y;
    }
    return out;
}

void Tpm::learn(const InputVector& x, const TpmOutput& own, int peer_output)
{
    check_shape(x);
    if (own.output != peer_output)
        return;
    const int direction = params_.rule == LearningRule::hebbian ? own.output : -own.output;
    const std::size_t n = static_cast<std::size_t>(params_.n);
    for (int k = 0; k < params_.k; ++k) {
        if (own.hidden[static_cast<std::size_t>(k)] != own.output)
            continue;
        std::int8_t* w = weights_.data() + static_cast<std::size_t>(k) * n;
        const std::int8_t* xi = x.v.data() + static_cast<std::size_t>(k) * n;
        for (std::size_t j = 0; j < n; ++j) {
            int updated = static_cast<int>(w[j]) + direction * static_cast<int>(xi[j]);
            if (updated > params_.l)
                updated = params_.l;
            else if (updated < -params_.l)
                updated = -params_.l;
            w[j] = static_cast<std::int8_t>(updated);
        }
    }
}

double weight_distance(const Tpm& a, const Tpm& b)
{
    if (!(a.params() == b.params()))
        throw ParameterError("weight_distance: machines have different parameters");
    const auto wa = a.weights();
    const auto wb = b.weights();
    long long sum = 0;
    for (std::size_t i = 0; i < wa.size(); ++i)
        sum += std::abs(static_cast<int>(wa[i]) - static_cast<int>(wb[i]));
    const double denom = static_cast<double>(a.params().weight_count()) * 2.0 *
                         static_cast<double>(a.params().l);
    return static_cast<double>(sum) / denom;
}

} // namespace neurokex
