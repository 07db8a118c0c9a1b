#include "qzr/states.hpp"

#include <cmath>
#include <string>

namespace qzr {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, std::size_t qubit_count)
    : mat_(std::move(m)), qubit_count_(qubit_count) {
    const std::size_t dim = std::size_t{1} << qubit_count_;
    if (qubit_count_ == 0 || mat_.rows() != dim || mat_.cols() != dim)
        throw std::invalid_argument("DensityMatrix: dimension is not 2^qubit_count");

    for (const Complex& z : mat_.data())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NumericalError("DensityMatrix: non-finite entry");

    if (!is_hermitian(mat_, kHermitianTol))
        throw NumericalError("DensityMatrix: not Hermitian within 1e-10");

    const double tr = trace(mat_).real();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw NumericalError("DensityMatrix: trace deviates from 1 by more than 1e-10");

    const std::vector<double> eig = hermitian_eigenvalues(mat_, kHermitianTol);
    if (eig.front() < kPsdFloor)
        throw NumericalError("DensityMatrix: eigenvalue below -1e-9 (not positive semidefinite)");
}

DensityMatrix bell_pair() {
    ComplexMatrix m(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return DensityMatrix(std::move(m), 2);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(kron(a.matrix(), b.matrix()), a.qubit_count() + b.qubit_count());
}

DensityMatrix initial_state() { return tensor(bell_pair(), bell_pair()); }

ComplexMatrix rotation_gate(double theta) {
    ComplexMatrix r(2, 2);
    r(0, 0) = std::cos(theta);
    r(0, 1) = -std::sin(theta);
    r(1, 0) = std::sin(theta);
    r(1, 1) = std::cos(theta);
    return r;
}

ThresholdProjectors projector_j(int i, int j) {
    if ((i != 0 && i != 1) || (j != 0 && j != 1))
        throw std::invalid_argument("projector_j: threshold indices must be 0 or 1");
    ComplexMatrix ket_i(2, 2), ket_j(2, 2);
    ket_i(i, i) = 1.0;
    ket_j(j, j) = 1.0;
    ThresholdProjectors out;
    out.i = i;
    out.j = j;
    out.j1 = kron(ket_i, ket_j);
    out.j0 = ComplexMatrix::identity(4) - out.j1;
    return out;
}

ComplexMatrix lift_station_operator(const ComplexMatrix& op) {
    if (op.rows() != 4 || op.cols() != 4)
        throw std::invalid_argument("lift_station_operator: expected a 4x4 operator");
    return kron(ComplexMatrix::identity(2), kron(op, ComplexMatrix::identity(2)));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
    if (u.rows() != rho.dim() || u.cols() != rho.dim())
        throw std::invalid_argument("apply_unitary: operator dimension mismatch");
    if (max_abs_diff(u * adjoint(u), ComplexMatrix::identity(u.rows())) > kUnitaryTol)
        throw std::invalid_argument("apply_unitary: operator not unitary within 1e-10");
    return DensityMatrix(u * rho.matrix() * adjoint(u), rho.qubit_count());
}

ComplexMatrix pauli_gate(Pauli which, std::size_t target, std::size_t qubit_count) {
    if (target >= qubit_count)
        throw std::invalid_argument("pauli_gate: target out of range");
    ComplexMatrix g(2, 2);
    if (which == Pauli::X) {
        g(0, 1) = 1.0;
        g(1, 0) = 1.0;
    } else {
        g(0, 0) = 1.0;
        g(1, 1) = -1.0;
    }
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t q = 0; q < qubit_count; ++q)
        out = kron(out, q == target ? g : ComplexMatrix::identity(2));
    return out;
}

}  // namespace qzr
