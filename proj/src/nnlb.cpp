#include "synthts/nnlb.hpp"

#include "synthts/error.hpp"
#include "synthts/parallel.hpp"
#include "synthts/random.hpp"

#include <string>

namespace synthts {

LagMatrix build_lag_matrix(const HourlySeries& source, std::size_t l) {
    const std::size_t n = source.size();
    if (l == 0 || l >= n) {
        throw Error(ErrorKind::InvalidLag,
                    "lag l = " + std::to_string(l) + " must be in [1, " + std::to_string(n - 1) + "]");
    }
    LagMatrix m;
    m.lag = l;
    m.vectors.width = l;
    m.vectors.data.resize(n * l);
    const auto values = source.values();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            m.vectors.data[i * l + j] =
                circular_get(values, static_cast<std::int64_t>(i) - static_cast<std::int64_t>(l) + static_cast<std::int64_t>(j));
        }
    }
    return m;
}

NeighborPools find_neighbor_pools(const LagMatrix& lags, std::size_t k, bool include_self, std::size_t threads) {
    return nearest_rows(lags.vectors, k, include_self, threads, ErrorKind::KTooLarge, "nearest neighbours k");
}

NnlbGenerator::NnlbGenerator(HourlySeries source, const NnlbConfig& config, std::size_t threads)
    : source_(std::move(source)),
      config_(config),
      pools_(find_neighbor_pools(build_lag_matrix(source_, config.lag), config.neighbors, config.include_self, threads)),
      kernel_(make_kernel(config.kernel, config.neighbors)) {}

HourlySeries NnlbGenerator::generate(std::uint64_t seed) const {
    return source_.with_values(resample_from_pools(source_.values(), pools_, kernel_, seed));
}

HourlySeries generate_nnlb(const HourlySeries& source, std::size_t l, std::size_t k, const ResamplingKernel& kernel,
                           bool include_self, std::uint64_t seed) {
    const auto pools = find_neighbor_pools(build_lag_matrix(source, l), k, include_self);
    return source.with_values(resample_from_pools(source.values(), pools, kernel, seed));
}

nlohmann::json to_json(const NnlbConfig& config) {
    return {{"method", "nnlb"},
            {"lag", config.lag},
            {"neighbors", config.neighbors},
            {"include_self", config.include_self},
            {"kernel", std::string(to_string(config.kernel))}};
}

Ensemble generate_nnlb_batch(const HourlySeries& source, const NnlbConfig& config, std::size_t replicates,
                             std::uint64_t master_seed, std::size_t threads) {
    if (replicates == 0) throw Error(ErrorKind::InvalidArgument, "replicates B must be >= 1");
    const NnlbGenerator gen(source, config, threads);

    Ensemble ens;
    ens.method = "nnlb";
    ens.config = to_json(config);
    ens.master_seed = master_seed;
    ens.source_label = source.label();
    ens.source_length = source.size();
    ens.source_checksum = checksum(source);
    ens.seeds.resize(replicates);
    for (std::size_t b = 0; b < replicates; ++b) ens.seeds[b] = child_seed(master_seed, b);

    std::vector<std::vector<double>> out(replicates);
    parallel_for(replicates, threads, [&](std::size_t b) {
        out[b] = resample_from_pools(source.values(), gen.pools(), gen.kernel(), ens.seeds[b]);
    });
    ens.series.reserve(replicates);
    for (auto& v : out) ens.series.push_back(source.with_values(std::move(v)));
    return ens;
}

}  // namespace synthts
