#include "qzr/swap.hpp"

#include <cmath>
#include <string>

namespace qzr {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void require_station_register(const DensityMatrix& rho, const char* who) {
    if (rho.qubit_count() != 4)
        throw std::invalid_argument(std::string(who) + ": expected the four-qubit register");
}

constexpr ZOutcome kOutcomeOrder[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

// final_z_measure minus the underflow throw, for scanning all branches.
std::optional<std::pair<DensityMatrix, double>> try_final_z(const DensityMatrix& rho,
                                                            ZOutcome outcome) {
    ComplexMatrix ket_a(2, 2), ket_b(2, 2);
    ket_a(outcome.a, outcome.a) = 1.0;
    ket_b(outcome.b, outcome.b) = 1.0;
    const ComplexMatrix proj = lift_station_operator(kron(ket_a, ket_b));

    ComplexMatrix branch = proj * rho.matrix() * proj;
    const double p = trace(branch).real();
    if (p < kProbabilityFloor) return std::nullopt;

    const ComplexMatrix pair = partial_trace(Complex{1.0 / p} * branch, {0, 3}, 4);
    return std::make_pair(DensityMatrix(pair, 2), p);
}

struct Candidate {
    SwapResult result;
};

// Evaluate the configured outcome policy on the current post-selected state.
std::optional<Candidate> evaluate_outcomes(const DensityMatrix& state, const SwapConfig& cfg,
                                           int n, double cumulative) {
    std::optional<Candidate> best;
    for (ZOutcome outcome : kOutcomeOrder) {
        if (cfg.outcome_policy == OutcomePolicy::Fixed && !(outcome == cfg.fixed_outcome))
            continue;
        auto branch = try_final_z(state, outcome);
        if (!branch) {
            if (cfg.outcome_policy == OutcomePolicy::Fixed)
                throw NumericalError("zeno_swap: requested z outcome has probability below 1e-15");
            continue;
        }
        auto& [pair, prob] = *branch;
        const double neg = negativity(pair);
        if (best && neg <= best->result.negativity) continue;
        const BellMatch match = closest_bell(pair);
        best = Candidate{SwapResult{std::move(pair), n, outcome, neg, match.fidelity, match.label,
                                    cumulative, prob}};
    }
    return best;
}

}  // namespace

void SwapConfig::validate() const {
    require(theta > 0.0 && theta < std::numbers::pi / 2.0, "SwapConfig: theta outside (0, pi/2)");
    require((threshold_i == 0 || threshold_i == 1) && (threshold_j == 0 || threshold_j == 1),
            "SwapConfig: threshold indices must be 0 or 1");
    if (fixed_n) require(*fixed_n >= 1 && *fixed_n <= 1000, "SwapConfig: n outside [1, 1000]");
    require(n_max >= 1 && n_max <= 1000, "SwapConfig: n_max outside [1, 1000]");
    require((fixed_outcome.a == 0 || fixed_outcome.a == 1) &&
                (fixed_outcome.b == 0 || fixed_outcome.b == 1),
            "SwapConfig: z outcome bits must be 0 or 1");
}

DensityMatrix rotate_step(const DensityMatrix& rho, double theta) {
    require_station_register(rho, "rotate_step");
    const ComplexMatrix r = rotation_gate(theta);
    return apply_unitary(rho, lift_station_operator(kron(r, r)));
}

std::pair<DensityMatrix, double> measure_step(const DensityMatrix& rho,
                                              const ThresholdProjectors& proj) {
    require_station_register(rho, "measure_step");
    const ComplexMatrix p0 = lift_station_operator(proj.j0);
    ComplexMatrix branch = p0 * rho.matrix() * p0;
    const double p = trace(branch).real();
    if (p < kProbabilityFloor)
        throw NumericalError("measure_step: j0 branch probability below 1e-15");
    return {DensityMatrix(Complex{1.0 / p} * branch, 4), p};
}

std::pair<DensityMatrix, double> zeno_iterate(const DensityMatrix& rho, const SwapConfig& cfg,
                                              int n) {
    cfg.validate();
    require(n >= 1, "zeno_iterate: n must be positive");
    require_station_register(rho, "zeno_iterate");

    const ThresholdProjectors proj = projector_j(cfg.threshold_i, cfg.threshold_j);
    DensityMatrix state = rho;
    double cumulative = 1.0;
    for (int k = 0; k < n; ++k) {
        auto [next, p] = measure_step(rotate_step(state, cfg.theta), proj);
        state = std::move(next);
        cumulative *= p;
    }
    return {std::move(state), cumulative};
}

std::pair<DensityMatrix, double> final_z_measure(const DensityMatrix& rho, ZOutcome outcome) {
    require_station_register(rho, "final_z_measure");
    require((outcome.a == 0 || outcome.a == 1) && (outcome.b == 0 || outcome.b == 1),
            "final_z_measure: outcome bits must be 0 or 1");
    auto branch = try_final_z(rho, outcome);
    if (!branch) throw NumericalError("final_z_measure: outcome probability below 1e-15");
    return *branch;
}

SwapResult zeno_swap(const DensityMatrix& input, const SwapConfig& cfg) {
    cfg.validate();
    require_station_register(input, "zeno_swap");

    const ThresholdProjectors proj = projector_j(cfg.threshold_i, cfg.threshold_j);
    const int last_n = cfg.fixed_n ? *cfg.fixed_n : cfg.n_max;

    DensityMatrix state = input;
    double cumulative = 1.0;
    std::optional<Candidate> best;
    for (int n = 1; n <= last_n; ++n) {
        auto [next, p] = measure_step(rotate_step(state, cfg.theta), proj);
        state = std::move(next);
        cumulative *= p;
        if (cfg.fixed_n && n < *cfg.fixed_n) continue;
        auto candidate = evaluate_outcomes(state, cfg, n, cumulative);
        // Strictly-greater comparison keeps the smallest n on negativity ties.
        if (candidate &&
            (!best || candidate->result.negativity > best->result.negativity))
            best = std::move(candidate);
    }
    if (!best) throw NumericalError("zeno_swap: every z branch underflowed");
    return std::move(best->result);
}

SwapResult circuit_swap(const DensityMatrix& input, ZOutcome outcome) {
    require_station_register(input, "circuit_swap");
    require((outcome.a == 0 || outcome.a == 1) && (outcome.b == 0 || outcome.b == 1),
            "circuit_swap: outcome bits must be 0 or 1");

    ComplexMatrix cnot(4, 4);  // A2 controls B2
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix hadamard(2, 2);
    hadamard(0, 0) = hadamard(0, 1) = hadamard(1, 0) = r;
    hadamard(1, 1) = -r;

    DensityMatrix state = apply_unitary(input, lift_station_operator(cnot));
    state = apply_unitary(state, lift_station_operator(kron(hadamard, ComplexMatrix::identity(2))));

    auto [pair, prob] = final_z_measure(state, outcome);
    if (outcome.b) pair = apply_unitary(pair, pauli_gate(Pauli::X, 1, 2));
    if (outcome.a) pair = apply_unitary(pair, pauli_gate(Pauli::Z, 1, 2));

    const double neg = negativity(pair);
    const BellMatch match = closest_bell(pair);
    return SwapResult{std::move(pair), 0, outcome, neg, match.fidelity, match.label, 1.0, prob};
}

std::vector<SweepPoint> swap_sweep(const DensityMatrix& input, const SwapConfig& cfg) {
    cfg.validate();
    require(!cfg.fixed_n, "swap_sweep: config must use a search range, not fixed n");
    require_station_register(input, "swap_sweep");

    const ThresholdProjectors proj = projector_j(cfg.threshold_i, cfg.threshold_j);
    std::vector<SweepPoint> points;
    points.reserve(static_cast<std::size_t>(cfg.n_max));

    DensityMatrix state = input;
    double cumulative = 1.0;
    for (int n = 1; n <= cfg.n_max; ++n) {
        auto [next, p] = measure_step(rotate_step(state, cfg.theta), proj);
        state = std::move(next);
        cumulative *= p;
        auto candidate = evaluate_outcomes(state, cfg, n, cumulative);
        if (!candidate) throw NumericalError("swap_sweep: every z branch underflowed");
        const SwapResult& res = candidate->result;
        points.push_back({n, res.z_outcome, res.negativity, res.best_bell_fidelity,
                          res.cumulative_j0_probability, res.z_outcome_probability});
    }
    return points;
}

}  // namespace qzr
