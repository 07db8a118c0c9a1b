#include "qzr/chain.hpp"

namespace qzr {

void ChainConfig::validate() const {
    if (stations < 1 || stations > 1000)
        throw std::invalid_argument("ChainConfig: stations outside [1, 1000]");
    swap.validate();
}

SwapResult chain_step(const DensityMatrix& carried_pair, const ChainConfig& cfg) {
    cfg.validate();
    if (carried_pair.qubit_count() != 2)
        throw std::invalid_argument("chain_step: carried pair must be a two-qubit state");
    const DensityMatrix fresh = bell_pair();
    const DensityMatrix input = cfg.fresh_side == FreshSide::Left ? tensor(fresh, carried_pair)
                                                                  : tensor(carried_pair, fresh);
    return zeno_swap(input, cfg.swap);
}

std::vector<ChainRecord> run_chain(const ChainConfig& cfg) {
    cfg.validate();
    std::vector<ChainRecord> records;
    records.reserve(static_cast<std::size_t>(cfg.stations));

    DensityMatrix carried = bell_pair();
    for (int station = 1; station <= cfg.stations; ++station) {
        const double input_neg = negativity(carried);
        SwapResult result = chain_step(carried, cfg);
        carried = result.pair_state;
        records.push_back({station, input_neg, std::move(result)});
    }
    return records;
}

}  // namespace qzr
