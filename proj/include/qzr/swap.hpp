#pragma once

#include "qzr/metrics.hpp"
#include "qzr/states.hpp"

#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace qzr {

// Rotation angle used throughout: one degree per iteration.
inline constexpr double kDefaultTheta = std::numbers::pi / 180.0;

// z-basis result (a on A2, b on B2).
struct ZOutcome {
    int a = 0;
    int b = 0;
    friend bool operator==(ZOutcome lhs, ZOutcome rhs) = default;
};

enum class OutcomePolicy {
    Best,   // keep the z outcome whose pair has the highest negativity
    Fixed,  // post-select a specific z outcome
};

struct SwapConfig {
    double theta = kDefaultTheta;
    int threshold_i = 1;  // j1 = |i><i| (x) |j><j| on A2, B2
    int threshold_j = 1;
    std::optional<int> fixed_n;  // exact iteration count; empty = search for the best n
    int n_max = 100;             // inclusive search bound when fixed_n is empty
    OutcomePolicy outcome_policy = OutcomePolicy::Best;
    ZOutcome fixed_outcome{};  // used when outcome_policy == Fixed

    void validate() const;  // throws std::invalid_argument
};

struct SwapResult {
    DensityMatrix pair_state;  // post-selected A1B1 state, no correction applied
    int n_used;
    ZOutcome z_outcome;
    double negativity;
    double best_bell_fidelity;
    BellLabel closest_bell;
    double cumulative_j0_probability;  // product of the kept-branch probabilities
    double z_outcome_probability;      // probability of the reported z outcome
};

struct SweepPoint {
    int n;
    ZOutcome z_outcome;
    double negativity;
    double best_bell_fidelity;
    double cumulative_j0_probability;
    double z_outcome_probability;
};

// One rotation R(theta) on each of A2 and B2.
DensityMatrix rotate_step(const DensityMatrix& rho, double theta);

// Project onto the j0 branch and renormalize; returns the state and the
// branch probability. Underflow below kProbabilityFloor raises NumericalError.
std::pair<DensityMatrix, double> measure_step(const DensityMatrix& rho,
                                              const ThresholdProjectors& proj);

// n rotate/measure iterations; returns the surviving state and the
// cumulative j0 probability.
std::pair<DensityMatrix, double> zeno_iterate(const DensityMatrix& rho, const SwapConfig& cfg,
                                              int n);

// z-measure A2 and B2 at the given outcome, renormalize, trace down to the
// A1B1 pair; returns the pair and the outcome probability.
std::pair<DensityMatrix, double> final_z_measure(const DensityMatrix& rho, ZOutcome outcome);

// Full swap on a four-qubit input: iterate (fixed n or best-n search), then
// z-measure per the outcome policy.
SwapResult zeno_swap(const DensityMatrix& input, const SwapConfig& cfg);

// Reference swap via the standard gate circuit: CNOT (A2 controls B2),
// Hadamard on A2, z-measurement, then the Z^a X^b correction on B1. On the
// Bell-pair input this yields phi+ exactly for every outcome.
SwapResult circuit_swap(const DensityMatrix& input, ZOutcome outcome);

// Diagnostics for every n in [1, cfg.n_max], sharing the incremental state
// so the sweep costs the same as a single long run.
std::vector<SweepPoint> swap_sweep(const DensityMatrix& input, const SwapConfig& cfg);

}  // namespace qzr
