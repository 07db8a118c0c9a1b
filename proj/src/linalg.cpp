#include "qzr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qzr {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Qubit k's bit position inside a basis index (qubit 0 = most significant).
std::size_t bit_shift(std::size_t qubit, std::size_t qubit_count) {
    return qubit_count - 1 - qubit;
}

}  // namespace

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), "matmul: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scale * m(i, j);
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "add: shapes differ");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "sub: shapes differ");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

Complex trace(const ComplexMatrix& m) {
    require(m.rows() == m.cols(), "trace: matrix not square");
    Complex t{};
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: shapes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t qubit,
                                std::size_t qubit_count) {
    const std::size_t dim = std::size_t{1} << qubit_count;
    require(m.rows() == dim && m.cols() == dim, "partial_transpose: dimension mismatch");
    require(qubit < qubit_count, "partial_transpose: qubit index out of range");

    const std::size_t mask = std::size_t{1} << bit_shift(qubit, qubit_count);
    ComplexMatrix out(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            // Swap the chosen qubit's bit between the row and column index.
            const std::size_t rr = (r & ~mask) | (c & mask);
            const std::size_t cc = (c & ~mask) | (r & mask);
            out(rr, cc) = m(r, c);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& keep,
                            std::size_t qubit_count) {
    const std::size_t dim = std::size_t{1} << qubit_count;
    require(m.rows() == dim && m.cols() == dim, "partial_trace: dimension mismatch");
    require(!keep.empty(), "partial_trace: keep list empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        require(keep[i] < qubit_count, "partial_trace: qubit index out of range");
        require(i == 0 || keep[i - 1] < keep[i], "partial_trace: keep list not ascending");
    }

    std::vector<std::size_t> keep_shift;
    for (std::size_t q : keep) keep_shift.push_back(bit_shift(q, qubit_count));
    std::vector<std::size_t> traced_shift;
    for (std::size_t q = 0; q < qubit_count; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end())
            traced_shift.push_back(bit_shift(q, qubit_count));

    const std::size_t kept = keep.size();
    const std::size_t out_dim = std::size_t{1} << kept;
    const std::size_t sum_dim = std::size_t{1} << traced_shift.size();

    // Scatter an output index's bits (plus the traced pattern t) back into a
    // full-register index; kept qubits keep their relative order.
    auto embed = [&](std::size_t idx, std::size_t t) {
        std::size_t full = 0;
        for (std::size_t i = 0; i < kept; ++i)
            full |= ((idx >> (kept - 1 - i)) & 1u) << keep_shift[i];
        for (std::size_t j = 0; j < traced_shift.size(); ++j)
            full |= ((t >> j) & 1u) << traced_shift[j];
        return full;
    };

    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r)
        for (std::size_t c = 0; c < out_dim; ++c) {
            Complex sum{};
            for (std::size_t t = 0; t < sum_dim; ++t) sum += m(embed(r, t), embed(c, t));
            out(r, c) = sum;
        }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
    require(m.rows() == m.cols(), "hermitian_eigenvalues: matrix not square");
    require(is_hermitian(m, tol), "hermitian_eigenvalues: matrix not Hermitian within tol");

    constexpr double kOffNormTol = 1e-12;
    constexpr int kMaxSweeps = 100;

    const std::size_t n = m.rows();
    ComplexMatrix a = m;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q) s += std::norm(a(p, q));
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() > kOffNormTol) {
        if (++sweep > kMaxSweeps) throw NumericalError("hermitian_eigenvalues: Jacobi sweeps exhausted");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double absb = std::abs(apq);
                if (absb < 1e-300) continue;

                // Unitary 2x2 rotation zeroing the (p,q) entry of the
                // Hermitian block [[app, apq], [conj(apq), aqq]].
                const Complex phase = apq / absb;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta_hat = (app - aqq) / (2.0 * absb);
                const double t = (theta_hat >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta_hat) + std::hypot(1.0, theta_hat));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {  // right-multiply by the rotation
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(phase) * akq;
                    a(k, q) = -s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // left-multiply by its adjoint
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + s * phase * aqk;
                    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace qzr
