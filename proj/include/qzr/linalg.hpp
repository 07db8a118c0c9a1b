#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzr {

using Complex = std::complex<double>;

// Thrown when an iterative routine fails to converge or a probability
// underflows the working floor. The CLI maps this to exit code 4.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense row-major complex matrix. Everything in this project is at most
// 16x16, so the representation stays simple and value-semantic.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

// Largest entrywise |a - b|; the workhorse of most matrix comparisons here.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol);

// Transpose only the given qubit's index. Qubit 0 is the leftmost Kronecker
// factor, i.e. it owns the most significant bit of a basis index.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t qubit,
                                std::size_t qubit_count);

// Trace out every qubit not listed in `keep` (strictly ascending indices).
// Kept qubits retain their relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& keep,
                            std::size_t qubit_count);

// Eigenvalues of a Hermitian matrix, ascending, via cyclic complex Jacobi
// rotations (off-diagonal Frobenius norm below 1e-12, at most 100 sweeps).
// Throws std::invalid_argument if m is not Hermitian within tol and
// NumericalError if the sweep cap is hit.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = 1e-10);

}  // namespace qzr
