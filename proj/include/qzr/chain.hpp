#pragma once

#include "qzr/swap.hpp"

#include <vector>

namespace qzr {

// Which side of the four-qubit register the fresh Bell pair occupies when a
// carried pair enters the next station. Left (fresh pair on A1A2, carried
// pair on B2B1) reproduces the golden station-by-station matrices; Right is
// the mirrored assembly, kept selectable for comparison.
enum class FreshSide { Left, Right };

struct ChainConfig {
    int stations = 9;
    SwapConfig swap;  // fixed_n empty = per-station best-n search over [1, n_max]
    FreshSide fresh_side = FreshSide::Left;

    void validate() const;  // throws std::invalid_argument
};

struct ChainRecord {
    int station;  // 1-based
    double input_negativity;
    SwapResult result;
};

// One station: tensor the carried pair with a fresh Bell pair per
// cfg.fresh_side, then swap. The carried pair's first qubit is measured out
// and its second survives; no correction is applied between stations.
SwapResult chain_step(const DensityMatrix& carried_pair, const ChainConfig& cfg);

// Run the full chain starting from a single Bell pair.
std::vector<ChainRecord> run_chain(const ChainConfig& cfg);

}  // namespace qzr
