#ifndef NEUROKEX_TPM_HPP
#define NEUROKEX_TPM_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace neurokex {

enum class LearningRule { hebbian, anti_hebbian };

// Machine geometry: K hidden units, N inputs each, weights bounded to [-L, L].
struct TpmParams {
    int k = 3;
    int n = 101;
    int l = 3;
    LearningRule rule = LearningRule::hebbian;

    int weight_count() const { return k * n; }
    bool operator==(const TpmParams&) const = default;
};

// K x N matrix of +-1 entries, row-major (unit index outer).
struct InputVector {
    int rows = 0;
    int cols = 0;
    std::vector<std::int8_t> v;

    std::int8_t at(int k, int j) const { return v[static_cast<std::size_t>(k) * cols + j]; }
};

struct TpmOutput {
    int output = 0;                  // product of hidden signs
    std::vector<std::int8_t> hidden; // one +-1 per hidden unit
};

// Tree parity machine. A value type: copies are independent machines.
class Tpm {
  public:
    // Weights drawn uniformly from the 2L+1 integers in [-L, L],
    // deterministically from the seed bytes.
    Tpm(const TpmParams& params, std::span<const std::uint8_t> seed);

    // Explicit weights (row-major, length K*N, entries in [-L, L]).
    Tpm(const TpmParams& params, std::vector<std::int8_t> weights);

    const TpmParams& params() const { return params_; }
    std::span<const std::int8_t> weights() const { return weights_; }
    std::int8_t weight(int k, int j) const
    {
        return weights_[static_cast<std::size_t>(k) * params_.n + j];
    }

    // Hidden signs and their parity (Eq. 1 shape); sigma(0) = -1. Pure.
    TpmOutput compute(const InputVector& x) const;

    // Agreement-gated weight update: no-op unless own.output == peer_output;
    // otherwise rows with y_k == own.output move by +-x and saturate at +-L.
    void learn(const InputVector& x, const TpmOutput& own, int peer_output);

    friend bool operator==(const Tpm& a, const Tpm& b)
    {
        return a.params_ == b.params_ && a.weights_ == b.weights_;
    }

  private:
    void check_shape(const InputVector& x) const;

    TpmParams params_;
    std::vector<std::int8_t> weights_;
};

void validate_params(const TpmParams& params);

// Normalised sum of absolute weight differences, in [0, 1].
double weight_distance(const Tpm& a, const Tpm& b);

} // namespace neurokex

#endif // NEUROKEX_TPM_HPP
