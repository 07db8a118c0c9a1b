#pragma once

#include "qzr/states.hpp"

#include <vector>

namespace qzr {

// Partial-transpose eigenvalues above this cutoff do not count as negative;
// keeps separable states at exactly zero despite rounding.
inline constexpr double kNegativeEigCutoff = -1e-12;

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

const char* bell_name(BellLabel label);  // "phi+", "phi-", "psi+", "psi-"

// State vector of the chosen Bell state in the |00>,|01>,|10>,|11> basis.
std::vector<Complex> bell_vector(BellLabel label);

// Entanglement negativity of a two-qubit state: partial transpose on the
// first qubit, then the absolute sum of negative eigenvalues (clamped >= 0).
double negativity(const DensityMatrix& pair);

// <psi| rho |psi>; psi must be normalized within 1e-12.
double fidelity_to_pure(const DensityMatrix& rho, const std::vector<Complex>& psi);

struct BellMatch {
    BellLabel label;
    double fidelity;
};

// Bell state with the highest fidelity to the pair; ties resolve in the
// order phi+, phi-, psi+, psi-.
BellMatch closest_bell(const DensityMatrix& pair);

}  // namespace qzr
