#include "qzr/states.hpp"

#include <doctest.h>

#include <cmath>

using namespace qzr;

TEST_CASE("bell_pair is |phi+> and initial_state is its double copy") {
    const DensityMatrix bell = bell_pair();
    CHECK(bell.qubit_count() == 2);
    CHECK(bell.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(bell.matrix()(0, 3).real() == doctest::Approx(0.5));
    CHECK(bell.matrix()(3, 0).real() == doctest::Approx(0.5));
    CHECK(bell.matrix()(3, 3).real() == doctest::Approx(0.5));
    CHECK(std::abs(bell.matrix()(1, 1)) == 0.0);

    const DensityMatrix init = initial_state();
    CHECK(init.qubit_count() == 4);
    CHECK(max_abs_diff(init.matrix(), kron(bell.matrix(), bell.matrix())) == 0.0);

    // Tracing out the measured station qubits leaves the maximally mixed pair.
    const ComplexMatrix reduced = partial_trace(init.matrix(), {0, 3}, 4);
    CHECK(max_abs_diff(reduced, Complex{0.25} * ComplexMatrix::identity(4)) < 1e-15);
}

TEST_CASE("DensityMatrix validation rejects unphysical input") {
    // Wrong dimension for the qubit count.
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(4), 1), std::invalid_argument);

    // Not Hermitian.
    ComplexMatrix nh(2, 2);
    nh(0, 0) = 0.5;
    nh(1, 1) = 0.5;
    nh(0, 1) = 0.3;
    nh(1, 0) = -0.3;
    CHECK_THROWS_AS(DensityMatrix(nh, 1), NumericalError);

    // Trace off by far more than the tolerance.
    ComplexMatrix tr(2, 2);
    tr(0, 0) = 0.7;
    tr(1, 1) = 0.7;
    CHECK_THROWS_AS(DensityMatrix(tr, 1), NumericalError);

    // Hermitian, unit trace, but indefinite.
    ComplexMatrix neg(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix(neg, 1), NumericalError);

    // A tiny negative eigenvalue within the floor is accepted.
    ComplexMatrix ok(2, 2);
    ok(0, 0) = 1.0 + 1e-10;
    ok(1, 1) = -1e-10;
    CHECK_NOTHROW(DensityMatrix(ok, 1));
}

TEST_CASE("rotation_gate is a real orthogonal rotation") {
    const double theta = 0.3;
    const ComplexMatrix r = rotation_gate(theta);
    CHECK(r(0, 0).real() == doctest::Approx(std::cos(theta)));
    CHECK(r(0, 1).real() == doctest::Approx(-std::sin(theta)));
    CHECK(r(1, 0).real() == doctest::Approx(std::sin(theta)));
    CHECK(r(1, 1).real() == doctest::Approx(std::cos(theta)));
    CHECK(max_abs_diff(r * adjoint(r), ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("projector_j builds complementary projectors on the station pair") {
    const ThresholdProjectors proj = projector_j(1, 1);
    CHECK(proj.j1(3, 3).real() == doctest::Approx(1.0));
    CHECK(std::abs(trace(proj.j1) - Complex{1.0}) < 1e-15);
    CHECK(max_abs_diff(proj.j0 + proj.j1, ComplexMatrix::identity(4)) == 0.0);
    CHECK(max_abs_diff(proj.j0 * proj.j0, proj.j0) < 1e-15);  // idempotent
    CHECK(max_abs_diff(proj.j1 * proj.j1, proj.j1) < 1e-15);
    CHECK(max_abs_diff(proj.j0 * proj.j1, ComplexMatrix(4, 4)) < 1e-15);  // orthogonal

    const ThresholdProjectors proj01 = projector_j(0, 1);
    CHECK(proj01.j1(1, 1).real() == doctest::Approx(1.0));

    CHECK_THROWS_AS(projector_j(2, 0), std::invalid_argument);
}

TEST_CASE("lift_station_operator embeds a 4x4 operator as I (x) op (x) I") {
    const ComplexMatrix r = rotation_gate(0.7);
    const ComplexMatrix lifted = lift_station_operator(kron(r, r));
    CHECK(lifted.rows() == 16);
    CHECK(max_abs_diff(lifted * adjoint(lifted), ComplexMatrix::identity(16)) < 1e-14);
    CHECK(max_abs_diff(lift_station_operator(ComplexMatrix::identity(4)),
                       ComplexMatrix::identity(16)) == 0.0);
    CHECK_THROWS_AS(lift_station_operator(ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("apply_unitary conjugates and insists on unitarity") {
    const DensityMatrix bell = bell_pair();
    const ComplexMatrix swap_bits = pauli_gate(Pauli::X, 0, 2) * pauli_gate(Pauli::X, 1, 2);
    const DensityMatrix flipped = apply_unitary(bell, swap_bits);
    // X (x) X leaves |phi+> invariant.
    CHECK(max_abs_diff(flipped.matrix(), bell.matrix()) < 1e-15);

    ComplexMatrix not_unitary = ComplexMatrix::identity(4);
    not_unitary(0, 0) = 2.0;
    CHECK_THROWS_AS(apply_unitary(bell, not_unitary), std::invalid_argument);
    CHECK_THROWS_AS(apply_unitary(bell, ComplexMatrix::identity(8)), std::invalid_argument);
}

TEST_CASE("pauli_gate targets the requested qubit under the leftmost-factor convention") {
    // Qubit 0 owns the most significant bit: Z on qubit 0 of two = sigma_z (x) I.
    ComplexMatrix sz(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    CHECK(max_abs_diff(pauli_gate(Pauli::Z, 0, 2), kron(sz, ComplexMatrix::identity(2))) == 0.0);
    CHECK(max_abs_diff(pauli_gate(Pauli::Z, 1, 2), kron(ComplexMatrix::identity(2), sz)) == 0.0);

    // X on qubit 0 maps (|01> + |10>)/sqrt(2) onto (|11> + |00>)/sqrt(2).
    ComplexMatrix psi_plus(4, 4);
    psi_plus(1, 1) = psi_plus(1, 2) = psi_plus(2, 1) = psi_plus(2, 2) = 0.5;
    const DensityMatrix mapped =
        apply_unitary(DensityMatrix(psi_plus, 2), pauli_gate(Pauli::X, 0, 2));
    CHECK(mapped.matrix()(3, 3).real() == doctest::Approx(0.5));
    CHECK(mapped.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(mapped.matrix()(3, 0).real() == doctest::Approx(0.5));

    CHECK_THROWS_AS(pauli_gate(Pauli::X, 2, 2), std::invalid_argument);
}

TEST_CASE("tensor concatenates registers in order") {
    const DensityMatrix two = tensor(bell_pair(), bell_pair());
    CHECK(two.qubit_count() == 4);
    CHECK(two.dim() == 16);
}
