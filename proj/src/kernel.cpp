#include "synthts/kernel.hpp"

#include "synthts/error.hpp"

#include <algorithm>
#include <string>

namespace synthts {

std::string_view to_string(KernelKind kind) noexcept {
    return kind == KernelKind::Harmonic ? "harmonic" : "uniform";
}

KernelKind kernel_from_string(std::string_view name) {
    if (name == "harmonic") return KernelKind::Harmonic;
    if (name == "uniform") return KernelKind::Uniform;
    throw Error(ErrorKind::InvalidKernel, "unknown kernel '" + std::string(name) + "' (expected harmonic or uniform)");
}

ResamplingKernel::ResamplingKernel(KernelKind kind, std::vector<double> probabilities)
    : kind_(kind), probabilities_(std::move(probabilities)) {
    cdf_.resize(probabilities_.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < probabilities_.size(); ++j) {
        acc += probabilities_[j];
        cdf_[j] = acc;
    }
    cdf_.back() = 1.0;
}

std::size_t ResamplingKernel::sample(RandomStream& rng) const {
    if (kind_ == KernelKind::Uniform) return rng.below(probabilities_.size());
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
}

ResamplingKernel harmonic_kernel(std::size_t k) {
    if (k == 0) throw Error(ErrorKind::InvalidKernel, "kernel size k must be >= 1");
    // Sum smallest terms first for the normaliser.
    double h = 0.0;
    for (std::size_t j = k; j >= 1; --j) h += 1.0 / static_cast<double>(j);
    std::vector<double> p(k);
    for (std::size_t j = 0; j < k; ++j) p[j] = (1.0 / static_cast<double>(j + 1)) / h;
    return ResamplingKernel(KernelKind::Harmonic, std::move(p));
}

ResamplingKernel uniform_kernel(std::size_t k) {
    if (k == 0) throw Error(ErrorKind::InvalidKernel, "kernel size k must be >= 1");
    return ResamplingKernel(KernelKind::Uniform, std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

ResamplingKernel make_kernel(KernelKind kind, std::size_t k) {
    return kind == KernelKind::Harmonic ? harmonic_kernel(k) : uniform_kernel(k);
}

}  // namespace synthts
