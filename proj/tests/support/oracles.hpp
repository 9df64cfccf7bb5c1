#pragma once

// Deliberately naive reference implementations used to cross-check the library.
// They index the raw series directly instead of going through lag matrices,
// windows, chunk objects or the neighbour search.

#include <cstddef>
#include <vector>

namespace synthts::testing {

struct OraclePools {
    std::vector<std::vector<std::size_t>> indices;
    std::vector<std::vector<double>> distances;
};

// NNLB: candidates compared on x[i-l..i-1] (circular).
OraclePools oracle_nnlb_pools(const std::vector<double>& x, std::size_t lag, std::size_t k, bool include_self);
// SBB: candidates compared on x[i-sash..i+sash] (circular).
OraclePools oracle_sbb_pools(const std::vector<double>& x, std::size_t sash, std::size_t p, bool include_self);

struct OracleExceedance {
    double sum = 0.0;
    std::size_t count = 0;
};

// Chunk totals accumulated hour by hour with wrap-around, then compared with the threshold.
OracleExceedance oracle_exceedance(const std::vector<double>& original, const std::vector<double>& synthetic,
                                   std::size_t l, bool proportional, double threshold, bool under);

std::vector<double> oracle_altered_difference(const std::vector<double>& high, const std::vector<double>& low,
                                              double alpha, bool delta_nonneg, bool result_nonneg);

}  // namespace synthts::testing
