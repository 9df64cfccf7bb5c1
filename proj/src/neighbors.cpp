#include "synthts/neighbors.hpp"

#include "synthts/parallel.hpp"
#include "synthts/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace synthts {

NeighborLists nearest_rows(const VectorMatrix& points, std::size_t k, bool include_self, std::size_t threads,
                           ErrorKind too_large, const char* parameter) {
    const std::size_t n = points.rows();
    const std::size_t available = include_self ? n : n - 1;
    if (k == 0 || k > available) {
        throw Error(too_large, std::string(parameter) + " = " + std::to_string(k) + " must be in [1, " +
                                   std::to_string(available) + "] for " + std::to_string(n) + " points" +
                                   (include_self ? "" : " excluding self"));
    }

    NeighborLists out;
    out.k = k;
    out.include_self = include_self;
    out.indices.resize(n * k);
    out.distances.resize(n * k);

    const std::size_t width = points.width;
    const std::size_t others = include_self ? k - 1 : k;

    parallel_for(n, threads, [&](std::size_t i) {
        const auto query = points.row(i);
        std::vector<std::pair<double, std::size_t>> cand;
        cand.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double* row = points.data.data() + j * width;
            double d2 = 0.0;
            for (std::size_t c = 0; c < width; ++c) {
                const double diff = query[c] - row[c];
                d2 += diff * diff;
            }
            cand.emplace_back(d2, j);
        }
        if (others > 0) {
            auto mid = cand.begin() + static_cast<std::ptrdiff_t>(others);
            std::nth_element(cand.begin(), mid - 1, cand.end());
            std::sort(cand.begin(), mid);
        }

        std::size_t* idx = out.indices.data() + i * k;
        double* dist = out.distances.data() + i * k;
        std::size_t slot = 0;
        if (include_self) {
            idx[slot] = i;
            dist[slot] = 0.0;
            ++slot;
        }
        for (std::size_t m = 0; m < others; ++m, ++slot) {
            idx[slot] = cand[m].second;
            dist[slot] = std::sqrt(cand[m].first);
        }
    });
    return out;
}

std::vector<double> resample_from_pools(std::span<const double> source, const NeighborLists& pools,
                                        const ResamplingKernel& kernel, std::uint64_t seed) {
    if (kernel.size() != pools.k) {
        throw Error(ErrorKind::InvalidKernel, "kernel length " + std::to_string(kernel.size()) +
                                                  " does not match pool size " + std::to_string(pools.k));
    }
    if (pools.size() != source.size()) {
        throw Error(ErrorKind::LengthMismatch, "pools cover " + std::to_string(pools.size()) +
                                                   " points but the source has " + std::to_string(source.size()));
    }
    RandomStream rng(seed);
    std::vector<double> out(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        const std::size_t rank = kernel.sample(rng);
        out[i] = source[pools.indices_of(i)[rank]];
    }
    return out;
}

}  // namespace synthts
