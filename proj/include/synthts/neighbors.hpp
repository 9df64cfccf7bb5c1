#pragma once

#include "synthts/error.hpp"
#include "synthts/kernel.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace synthts {

/**
 * Per-row lists of the k nearest rows of a point set, stored row-major (n x k).
 *
 * Order within a list: when `include_self` is set the row itself comes first (distance 0),
 * followed by the other rows by ascending Euclidean distance, ties by ascending index.
 * Without `include_self` the row is excluded and the same order applies.
 */
struct NeighborLists {
    std::size_t k = 0;
    bool include_self = true;
    std::vector<std::size_t> indices;
    std::vector<double> distances;

    std::size_t size() const noexcept { return k == 0 ? 0 : indices.size() / k; }
    std::span<const std::size_t> indices_of(std::size_t i) const { return {indices.data() + i * k, k}; }
    std::span<const double> distances_of(std::size_t i) const { return {distances.data() + i * k, k}; }
};

/// Dense row-major matrix of fixed-width vectors (lag vectors or windows).
struct VectorMatrix {
    std::size_t width = 0;
    std::vector<double> data;

    std::size_t rows() const noexcept { return width == 0 ? 0 : data.size() / width; }
    std::span<const double> row(std::size_t i) const { return {data.data() + i * width, width}; }
};

// Exact brute-force search over all pairs. Squared distances are compared, so
// equal vectors always tie exactly. `too_large` is the error kind raised when
// k exceeds the available candidates; `parameter` names k in that message.
NeighborLists nearest_rows(const VectorMatrix& points, std::size_t k, bool include_self, std::size_t threads,
                           ErrorKind too_large, const char* parameter);

// One synthetic series: out[i] = source[pools[i][rank]] with rank drawn from the kernel.
std::vector<double> resample_from_pools(std::span<const double> source, const NeighborLists& pools,
                                        const ResamplingKernel& kernel, std::uint64_t seed);

}  // namespace synthts
