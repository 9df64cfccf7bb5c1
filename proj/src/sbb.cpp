#include "synthts/sbb.hpp"

#include "synthts/error.hpp"
#include "synthts/parallel.hpp"
#include "synthts/random.hpp"

#include <string>

namespace synthts {

WindowMatrix build_windows(const HourlySeries& source, std::size_t sash) {
    const std::size_t n = source.size();
    if (sash == 0 || 1 + 2 * sash > n) {
        throw Error(ErrorKind::InvalidSash, "sash n = " + std::to_string(sash) +
                                                " needs n >= 1 and window width 1+2n <= series length " +
                                                std::to_string(n));
    }
    const std::size_t width = 1 + 2 * sash;
    WindowMatrix m;
    m.sash = sash;
    m.windows.width = width;
    m.windows.data.resize(n * width);
    const auto values = source.values();
    for (std::size_t i = 0; i < n; ++i) {
        const auto start = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(sash);
        for (std::size_t j = 0; j < width; ++j) {
            m.windows.data[i * width + j] = circular_get(values, start + static_cast<std::int64_t>(j));
        }
    }
    return m;
}

WindowPools find_window_pools(const WindowMatrix& windows, std::size_t p, bool include_self, std::size_t threads) {
    return nearest_rows(windows.windows, p, include_self, threads, ErrorKind::PTooLarge, "pool size p");
}

SbbGenerator::SbbGenerator(HourlySeries source, const SbbConfig& config, std::size_t threads)
    : source_(std::move(source)),
      config_(config),
      pools_(find_window_pools(build_windows(source_, config.sash), config.pool_size, config.include_self, threads)),
      kernel_(make_kernel(config.kernel, config.pool_size)) {}

HourlySeries SbbGenerator::generate(std::uint64_t seed) const {
    return source_.with_values(resample_from_pools(source_.values(), pools_, kernel_, seed));
}

HourlySeries generate_sbb(const HourlySeries& source, std::size_t sash, std::size_t p, bool include_self,
                          std::uint64_t seed, KernelKind kernel) {
    SbbConfig config{sash, p, include_self, kernel};
    return SbbGenerator(source, config).generate(seed);
}

nlohmann::json to_json(const SbbConfig& config) {
    return {{"method", "sbb"},
            {"sash", config.sash},
            {"window_size", 1 + 2 * config.sash},
            {"pool_size", config.pool_size},
            {"include_self", config.include_self},
            {"kernel", std::string(to_string(config.kernel))}};
}

Ensemble generate_sbb_batch(const HourlySeries& source, const SbbConfig& config, std::size_t replicates,
                            std::uint64_t master_seed, std::size_t threads) {
    if (replicates == 0) throw Error(ErrorKind::InvalidArgument, "replicates B must be >= 1");
    const SbbGenerator gen(source, config, threads);

    Ensemble ens;
    ens.method = "sbb";
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
