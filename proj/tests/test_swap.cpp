#include "qzr/swap.hpp"

#include "support/reference_states.hpp"

#include <doctest.h>

#include <cmath>

using namespace qzr;

namespace {

SwapConfig default_config() { return SwapConfig{}; }

SwapConfig fixed_config(int n, ZOutcome outcome) {
    SwapConfig cfg;
    cfg.fixed_n = n;
    cfg.outcome_policy = OutcomePolicy::Fixed;
    cfg.fixed_outcome = outcome;
    return cfg;
}

}  // namespace

TEST_CASE("SwapConfig validation enforces parameter ranges") {
    SwapConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    cfg.theta = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.theta = std::numbers::pi / 2.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.theta = kDefaultTheta;

    cfg.n_max = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.n_max = 1001;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.n_max = 100;

    cfg.fixed_n = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.fixed_n.reset();

    cfg.threshold_i = 2;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("rotate_step acts only on the station qubits") {
    // Evolve a bit first so the reduced station state is not maximally mixed.
    const auto [evolved, cum] = zeno_iterate(initial_state(), default_config(), 5);

    const ComplexMatrix before = partial_trace(evolved.matrix(), {1, 2}, 4);
    const DensityMatrix rotated = rotate_step(evolved, std::numbers::pi / 2.0);
    const ComplexMatrix after = partial_trace(rotated.matrix(), {1, 2}, 4);

    // A quarter turn on both qubits maps |00> onto |11>.
    CHECK(after(0, 0).real() == doctest::Approx(before(3, 3).real()).epsilon(1e-12));
    CHECK(after(3, 3).real() == doctest::Approx(before(0, 0).real()).epsilon(1e-12));

    // The kept pair is untouched.
    CHECK(max_abs_diff(partial_trace(rotated.matrix(), {0, 3}, 4),
                       partial_trace(evolved.matrix(), {0, 3}, 4)) < 1e-13);
}

TEST_CASE("measure_step keeps 3/4 of the fresh input and is then idempotent") {
    const ThresholdProjectors proj = projector_j(1, 1);

    const auto [state, p] = measure_step(initial_state(), proj);
    CHECK(p == doctest::Approx(0.75).epsilon(1e-12));

    const auto [again, p2] = measure_step(state, proj);
    CHECK(p2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs_diff(again.matrix(), state.matrix()) < 1e-12);
}

TEST_CASE("zeno_iterate composes rotate and measure steps") {
    const SwapConfig cfg = default_config();
    const ThresholdProjectors proj = projector_j(1, 1);

    const auto [direct, cum] = zeno_iterate(initial_state(), cfg, 3);

    DensityMatrix manual = initial_state();
    double manual_cum = 1.0;
    for (int k = 0; k < 3; ++k) {
        auto [next, p] = measure_step(rotate_step(manual, cfg.theta), proj);
        manual = next;
        manual_cum *= p;
    }
    CHECK(max_abs_diff(direct.matrix(), manual.matrix()) == 0.0);
    CHECK(cum == doctest::Approx(manual_cum).epsilon(1e-15));

    CHECK_THROWS_AS(zeno_iterate(initial_state(), cfg, 0), std::invalid_argument);
}

TEST_CASE("final_z_measure on the fresh input collapses the pair") {
    // Without iterations, outcome (0,0) heralds |00> on the kept pair.
    const auto [pair, p] = final_z_measure(initial_state(), {0, 0});
    CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(pair.qubit_count() == 2);
    CHECK(pair.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(final_z_measure(initial_state(), {2, 0}), std::invalid_argument);
}

TEST_CASE("a single iteration reproduces the reference pair state") {
    const SwapResult res = zeno_swap(initial_state(), fixed_config(1, {0, 0}));

    CHECK(res.n_used == 1);
    CHECK(res.z_outcome == ZOutcome{0, 0});
    // Against the golden four-figure table.
    CHECK(max_abs_diff(res.pair_state.matrix(),
                       refdata::to_matrix(refdata::kSingleIterationPair)) < 5e-4);
    // Against the full-precision independent reference.
    CHECK(max_abs_diff(res.pair_state.matrix(),
                       refdata::to_matrix(refdata::kSingleIterationPairExact)) < 1e-12);

    CHECK(res.cumulative_j0_probability == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(res.z_outcome_probability == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(res.negativity < 1e-9);  // one iteration is far from entangling the pair
}

TEST_CASE("the best-n search lands on 65 iterations with the frozen diagnostics") {
    const SwapResult res = zeno_swap(initial_state(), default_config());
    const auto& expect = refdata::kStationExpectation[0];

    CHECK(res.n_used == expect.n_used);
    CHECK(res.z_outcome == ZOutcome{0, 0});
    CHECK(res.negativity == doctest::Approx(expect.negativity).epsilon(1e-11));
    CHECK(res.best_bell_fidelity == doctest::Approx(expect.best_bell_fidelity).epsilon(1e-11));
    CHECK(res.closest_bell == BellLabel::PsiPlus);
    CHECK(res.cumulative_j0_probability ==
          doctest::Approx(expect.cumulative_j0_probability).epsilon(1e-11));
    CHECK(res.z_outcome_probability ==
          doctest::Approx(expect.z_outcome_probability).epsilon(1e-11));

    // Probability bookkeeping stays inside (0, 1].
    const double joint = res.cumulative_j0_probability * res.z_outcome_probability;
    CHECK(joint > 0.0);
    CHECK(joint <= 1.0);
}

TEST_CASE("flipping the first pair qubit of the tuned state matches the corrected table") {
    const SwapResult res = zeno_swap(initial_state(), fixed_config(65, {0, 0}));
    const DensityMatrix corrected = apply_unitary(res.pair_state, pauli_gate(Pauli::X, 0, 2));
    CHECK(max_abs_diff(corrected.matrix(),
                       refdata::to_matrix(refdata::kTunedPairAfterCorrection)) < 5e-4);

    // The raw tuned state carries the same fidelity to psi+ as the corrected
    // state does to phi+.
    CHECK(fidelity_to_pure(corrected, bell_vector(BellLabel::PhiPlus)) ==
          doctest::Approx(res.best_bell_fidelity).epsilon(1e-12));
}

TEST_CASE("circuit_swap turns the double Bell input into phi+ for every outcome") {
    const DensityMatrix input = initial_state();
    for (ZOutcome oc : {ZOutcome{0, 0}, ZOutcome{0, 1}, ZOutcome{1, 0}, ZOutcome{1, 1}}) {
        const SwapResult res = circuit_swap(input, oc);
        CHECK(res.n_used == 0);
        CHECK(res.z_outcome == oc);
        CHECK(res.z_outcome_probability == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(res.cumulative_j0_probability == 1.0);
        CHECK(res.best_bell_fidelity == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(res.closest_bell == BellLabel::PhiPlus);
        CHECK(res.negativity == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("circuit_swap teleports any carried pair without losing negativity") {
    // Use a mildly entangled carried pair produced by the iterative swap.
    const DensityMatrix carried = zeno_swap(initial_state(), default_config()).pair_state;
    const double carried_neg = negativity(carried);
    const DensityMatrix input = tensor(bell_pair(), carried);

    for (ZOutcome oc : {ZOutcome{0, 0}, ZOutcome{0, 1}, ZOutcome{1, 0}, ZOutcome{1, 1}}) {
        const SwapResult res = circuit_swap(input, oc);
        CHECK(std::abs(res.negativity - carried_neg) < 1e-12);
    }
}

TEST_CASE("iterative and circuit swaps agree on the entanglement they deliver") {
    const SwapResult zeno = zeno_swap(initial_state(), default_config());
    const SwapResult circuit = circuit_swap(initial_state(), {0, 0});
    CHECK(std::abs(zeno.negativity - circuit.negativity) < 5e-4);
    CHECK(zeno.best_bell_fidelity >= 0.998);
}

TEST_CASE("requesting an impossible z outcome underflows loudly") {
    // After the j0 projection with thresholds (1,1) the (1,1) branch is gone.
    CHECK_THROWS_AS(zeno_swap(initial_state(), fixed_config(1, {1, 1})), NumericalError);
}

TEST_CASE("swap_sweep walks the state incrementally") {
    SwapConfig cfg = default_config();
    cfg.n_max = 70;
    const std::vector<SweepPoint> points = swap_sweep(initial_state(), cfg);
    REQUIRE(points.size() == 70);

    for (std::size_t i = 0; i < points.size(); ++i)
        CHECK(points[i].n == static_cast<int>(i) + 1);

    // Cumulative probability is a product of branch probabilities: decreasing.
    for (std::size_t i = 1; i < points.size(); ++i)
        CHECK(points[i].cumulative_j0_probability <= points[i - 1].cumulative_j0_probability);

    // The n=65 row carries the same numbers the best-n search reports.
    const SwapResult best = zeno_swap(initial_state(), default_config());
    const SweepPoint& at65 = points[64];
    CHECK(at65.n == best.n_used);
    CHECK(at65.negativity == doctest::Approx(best.negativity).epsilon(1e-15));
    CHECK(at65.best_bell_fidelity == doctest::Approx(best.best_bell_fidelity).epsilon(1e-15));

    // And it is the sweep's own argmax.
    for (const SweepPoint& pt : points) CHECK(pt.negativity <= at65.negativity);

    SwapConfig bad = cfg;
    bad.fixed_n = 5;
    CHECK_THROWS_AS(swap_sweep(initial_state(), bad), std::invalid_argument);
}
