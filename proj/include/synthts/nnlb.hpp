#pragma once

#include "synthts/ensemble.hpp"
#include "synthts/kernel.hpp"
#include "synthts/neighbors.hpp"
#include "synthts/series.hpp"

#include <cstddef>
#include <cstdint>

namespace synthts {

/**
 * Nearest-neighbours lagged bootstrap.
 *
 * Every point i gets the lag vector of the l values before it (circular). The
 * k points whose lag vectors are closest to that of i form its pool; a synthetic
 * value for i is the pool member's own observation, picked by rank through a
 * resampling kernel (harmonic by default).
 */

/// Row i holds source[i-l .. i-1], wrapping before the start of the series.
struct LagMatrix {
    std::size_t lag = 0;
    VectorMatrix vectors;

    std::size_t rows() const noexcept { return vectors.rows(); }
    std::span<const double> row(std::size_t i) const { return vectors.row(i); }
};

using NeighborPools = NeighborLists;

struct NnlbConfig {
    std::size_t lag = 5;
    std::size_t neighbors = 20;
    bool include_self = true;
    KernelKind kernel = KernelKind::Harmonic;
};

// Throws InvalidLag unless 1 <= l < n.
LagMatrix build_lag_matrix(const HourlySeries& source, std::size_t l);

// Throws KTooLarge when k exceeds n (n - 1 without self).
NeighborPools find_neighbor_pools(const LagMatrix& lags, std::size_t k, bool include_self, std::size_t threads = 1);

/// Precomputes pools and kernel once; each generate() call is then O(n).
class NnlbGenerator {
public:
    NnlbGenerator(HourlySeries source, const NnlbConfig& config, std::size_t threads = 1);

    HourlySeries generate(std::uint64_t seed) const;

    const HourlySeries& source() const noexcept { return source_; }
    const NnlbConfig& config() const noexcept { return config_; }
    const NeighborPools& pools() const noexcept { return pools_; }
    const ResamplingKernel& kernel() const noexcept { return kernel_; }

private:
    HourlySeries source_;
    NnlbConfig config_;
    NeighborPools pools_;
    ResamplingKernel kernel_;
};

HourlySeries generate_nnlb(const HourlySeries& source, std::size_t l, std::size_t k, const ResamplingKernel& kernel,
                           bool include_self, std::uint64_t seed);

// Series b is generated with child_seed(master_seed, b).
Ensemble generate_nnlb_batch(const HourlySeries& source, const NnlbConfig& config, std::size_t replicates,
                             std::uint64_t master_seed, std::size_t threads = 1);

nlohmann::json to_json(const NnlbConfig& config);

}  // namespace synthts
