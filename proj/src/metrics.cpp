#include "qzr/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qzr {

namespace {

constexpr std::array<BellLabel, 4> kBellOrder = {BellLabel::PhiPlus, BellLabel::PhiMinus,
                                                 BellLabel::PsiPlus, BellLabel::PsiMinus};

}  // namespace

const char* bell_name(BellLabel label) {
    switch (label) {
        case BellLabel::PhiPlus: return "phi+";
        case BellLabel::PhiMinus: return "phi-";
        case BellLabel::PsiPlus: return "psi+";
        case BellLabel::PsiMinus: return "psi-";
    }
    throw std::invalid_argument("bell_name: unknown label");
}

std::vector<Complex> bell_vector(BellLabel label) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (label) {
        case BellLabel::PhiPlus: return {r, 0.0, 0.0, r};
        case BellLabel::PhiMinus: return {r, 0.0, 0.0, -r};
        case BellLabel::PsiPlus: return {0.0, r, r, 0.0};
        case BellLabel::PsiMinus: return {0.0, r, -r, 0.0};
    }
    throw std::invalid_argument("bell_vector: unknown label");
}

double negativity(const DensityMatrix& pair) {
    if (pair.qubit_count() != 2)
        throw std::invalid_argument("negativity: expected a two-qubit state");
    const ComplexMatrix pt = partial_transpose(pair.matrix(), 0, 2);
    double sum = 0.0;
    for (double eig : hermitian_eigenvalues(pt, kHermitianTol))
        if (eig < kNegativeEigCutoff) sum -= eig;
    return std::max(sum, 0.0);
}

double fidelity_to_pure(const DensityMatrix& rho, const std::vector<Complex>& psi) {
    if (psi.size() != rho.dim())
        throw std::invalid_argument("fidelity_to_pure: state vector dimension mismatch");
    double norm2 = 0.0;
    for (const Complex& z : psi) norm2 += std::norm(z);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("fidelity_to_pure: state vector not normalized");

    Complex value{};
    for (std::size_t r = 0; r < rho.dim(); ++r)
        for (std::size_t c = 0; c < rho.dim(); ++c)
            value += std::conj(psi[r]) * rho.matrix()(r, c) * psi[c];
    return value.real();
}

BellMatch closest_bell(const DensityMatrix& pair) {
    if (pair.qubit_count() != 2)
        throw std::invalid_argument("closest_bell: expected a two-qubit state");
    BellMatch best{kBellOrder[0], -1.0};
    for (BellLabel label : kBellOrder) {
        const double f = fidelity_to_pure(pair, bell_vector(label));
        if (f > best.fidelity) best = {label, f};
    }
    return best;
}

}  // namespace qzr
