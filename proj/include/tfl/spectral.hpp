// spectral.hpp - eigendecomposition of (generally non-Hermitian) operators,
// singular values, Schatten quasi-norms.

#pragma once

#include <vector>

#include "tfl/quantize.hpp"
#include "tfl/signal.hpp"

namespace tfl {

// Eigenpairs sorted by |lambda| descending (ties: Re then Im descending);
// eigenvectors are unit norm, column-aligned with the eigenvalues.
struct EigenSystem {
    std::vector<cxd> values;
    std::vector<Signal> vectors;
    std::vector<double> residuals; // ||A v - lambda v||_2 per pair
};

// tau_eig = 1e-8 * max|A| * L
double eig_residual_tolerance(const Operator& a);

// Full spectrum; Hermitian-flagged operators go through the self-adjoint
// solver (real eigenvalues), everything else through the dense complex one.
EigenSystem eig(const Operator& a);

// Singular values, nonincreasing.
std::vector<double> singular_values(const Operator& a);

// (sum_k s_k^p)^{1/p}, p > 0.
double schatten_qnorm(const Operator& a, double p);

// Retains pairs with |lambda| > floor * |lambda_1|; an empty result is valid.
EigenSystem point_spectrum_nonzero(const EigenSystem& e, double floor);

} // namespace tfl
