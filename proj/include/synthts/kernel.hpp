#pragma once

#include "synthts/random.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace synthts {

enum class KernelKind { Harmonic, Uniform };

std::string_view to_string(KernelKind kind) noexcept;
KernelKind kernel_from_string(std::string_view name);

/// Probability mass over neighbour ranks 0..k-1 (rank 0 = nearest).
class ResamplingKernel {
public:
    KernelKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return probabilities_.size(); }
    const std::vector<double>& probabilities() const noexcept { return probabilities_; }

    std::size_t sample(RandomStream& rng) const;

    friend ResamplingKernel harmonic_kernel(std::size_t k);
    friend ResamplingKernel uniform_kernel(std::size_t k);

private:
    ResamplingKernel(KernelKind kind, std::vector<double> probabilities);

    KernelKind kind_;
    std::vector<double> probabilities_;
    std::vector<double> cdf_;
};

// p[j] = (1/(j+1)) / H_k for ranks j = 0..k-1. Throws InvalidKernel for k == 0.
ResamplingKernel harmonic_kernel(std::size_t k);
ResamplingKernel uniform_kernel(std::size_t k);
ResamplingKernel make_kernel(KernelKind kind, std::size_t k);

}  // namespace synthts
