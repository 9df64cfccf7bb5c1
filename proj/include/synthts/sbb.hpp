#pragma once

#include "synthts/ensemble.hpp"
#include "synthts/kernel.hpp"
#include "synthts/neighbors.hpp"
#include "synthts/series.hpp"

#include <cstddef>
#include <cstdint>

namespace synthts {

// Symmetric block bootstrap. Each point i is the focal slot of the window
// source[i-n .. i+n] (circular, width 1+2n for sash n). The p windows nearest to
// that window form the pool of i, and the synthetic value for i is the focal value
// of a pool window chosen uniformly (or by any other kernel).

/// Row i is the window centred on i; column `sash` is the focal value.
struct WindowMatrix {
    std::size_t sash = 0;
    VectorMatrix windows;

    std::size_t width() const noexcept { return windows.width; }
    std::size_t rows() const noexcept { return windows.rows(); }
    std::span<const double> row(std::size_t i) const { return windows.row(i); }
};

using WindowPools = NeighborLists;

struct SbbConfig {
    std::size_t sash = 2;
    std::size_t pool_size = 20;
    bool include_self = true;
    KernelKind kernel = KernelKind::Uniform;
};

// Throws InvalidSash unless sash >= 1 and 1 + 2*sash <= n.
WindowMatrix build_windows(const HourlySeries& source, std::size_t sash);

// Throws PTooLarge when p exceeds n (n - 1 without self).
WindowPools find_window_pools(const WindowMatrix& windows, std::size_t p, bool include_self, std::size_t threads = 1);

class SbbGenerator {
public:
    SbbGenerator(HourlySeries source, const SbbConfig& config, std::size_t threads = 1);

    HourlySeries generate(std::uint64_t seed) const;

    const HourlySeries& source() const noexcept { return source_; }
    const SbbConfig& config() const noexcept { return config_; }
    const WindowPools& pools() const noexcept { return pools_; }
    const ResamplingKernel& kernel() const noexcept { return kernel_; }

private:
    HourlySeries source_;
    SbbConfig config_;
    WindowPools pools_;
    ResamplingKernel kernel_;
};

HourlySeries generate_sbb(const HourlySeries& source, std::size_t sash, std::size_t p, bool include_self,
                          std::uint64_t seed, KernelKind kernel = KernelKind::Uniform);

Ensemble generate_sbb_batch(const HourlySeries& source, const SbbConfig& config, std::size_t replicates,
                            std::uint64_t master_seed, std::size_t threads = 1);

nlohmann::json to_json(const SbbConfig& config);

}  // namespace synthts
