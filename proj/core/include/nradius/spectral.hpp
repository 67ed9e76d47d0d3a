#pragma once

#include <vector>

#include "nradius/matrix.hpp"

namespace nradius {

struct HermEigDecomp {
    std::vector<double> eigenvalues;  // ascending
    CMatrix eigenvectors;             // column k pairs with eigenvalues[k]
};

// Cyclic complex Jacobi diagonalization. Input must be Hermitian within
// 1e-12 * ||H||_F (it is symmetrized exactly before iterating). Each column's
// phase is fixed so its largest-magnitude component is real positive, making
// the factorization deterministic up to eigenvalue ties.
HermEigDecomp herm_eig(const CMatrix& h);

// Ascending eigenvalues without accumulating the unitary; cheaper when only
// extremes are needed.
std::vector<double> herm_eigenvalues(const CMatrix& h);

// Largest eigenvalue of a Hermitian matrix.
double lambda_max(const CMatrix& h);

// Operator norm of a Hermitian matrix: largest eigenvalue magnitude.
double herm_norm(const CMatrix& h);

// Operator (spectral) norm sqrt(lambda_max(A*A)); works for any square A.
double op_norm(const CMatrix& a);

// Positive semidefinite factor |A| = (A*A)^(1/2).
CMatrix abs_op(const CMatrix& a);

// H^r for Hermitian positive semidefinite H, r >= 1. Eigenvalues slightly
// negative from roundoff (>= -1e-12 * ||H||) are clamped to zero; anything
// more negative throws std::invalid_argument.
CMatrix herm_power(const CMatrix& h, double r);

}  // namespace nradius
