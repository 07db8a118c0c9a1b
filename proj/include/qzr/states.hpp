#pragma once

#include "qzr/linalg.hpp"

#include <cstddef>

namespace qzr {

// Register layout: four qubits ordered A1, A2, B2, B1. Qubit k is the k-th
// Kronecker factor (so qubit 0 owns the most significant bit of a basis
// index). A1/B1 form the surviving pair; A2/B2 are the measured station pair.

// Validation tolerances for physical states and gates.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdFloor = -1e-9;
inline constexpr double kUnitaryTol = 1e-10;

// Probabilities below this floor are treated as numerical underflow.
inline constexpr double kProbabilityFloor = 1e-15;

// A validated density matrix. Construction checks dimensions, finiteness,
// Hermiticity, unit trace and positive semidefiniteness; any operation that
// produces one of these re-runs the checks, so a drifting state aborts the
// run instead of silently corrupting results.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix m, std::size_t qubit_count);

    const ComplexMatrix& matrix() const { return mat_; }
    std::size_t qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return mat_.rows(); }

private:
    ComplexMatrix mat_;
    std::size_t qubit_count_;
};

// |phi+><phi+| on two qubits.
DensityMatrix bell_pair();

// Tensor product of two states; a's qubits come first.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// bell_pair (x) bell_pair on the A1 A2 B2 B1 register.
DensityMatrix initial_state();

// 2x2 real rotation [[cos, -sin], [sin, cos]].
ComplexMatrix rotation_gate(double theta);

// Threshold measurement pair on the station qubits A2, B2:
// j1 = |i><i| (x) |j><j| and j0 = I4 - j1.
struct ThresholdProjectors {
    int i = 1;
    int j = 1;
    ComplexMatrix j1;
    ComplexMatrix j0;
};
ThresholdProjectors projector_j(int i, int j);

// Embed a 4x4 operator acting on (A2, B2) into the full register: I2 (x) op (x) I2.
ComplexMatrix lift_station_operator(const ComplexMatrix& op);

// u rho u^dagger; u must be unitary within kUnitaryTol.
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

enum class Pauli { X, Z };

// The chosen Pauli on `target`, identity elsewhere.
ComplexMatrix pauli_gate(Pauli which, std::size_t target, std::size_t qubit_count);

}  // namespace qzr
