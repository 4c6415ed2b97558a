#pragma once

#include "tubal/tensor3.hpp"

namespace tubal {

// Unnormalized DFT matrix of order n: F(t,s) = w^{t*s}, w = exp(-2*pi*i/n).
// F is symmetric and rows t and n-t are exact elementwise conjugates (the
// matrix is built that way, bit for bit), so transforms of real data carry
// exact conjugate symmetry: slice t and slice (n-t) mod n are conjugates.
const CMatrix& dft_matrix(int n);

// Mode-3 DFT: every tube (j,k,:) is multiplied by F_{d3}. Implemented as one
// (d1*d2) x d3 matrix product against F.
SpectralTensor dft3(const Tensor3& a);

// Inverse mode-3 DFT with enforced real output. The imaginary residue of the
// inverse transform must satisfy ||Im||_F <= tol * ||Re||_F (default 1e-10);
// it is then truncated. A larger residue means the input was not conjugate
// symmetric and raises std::runtime_error.
Tensor3 idft3(const SpectralTensor& ahat, double imag_tol = 1e-10);

// Largest |entry| over the imaginary part of the inverse transform, relative
// to the Frobenius norm scale. Exposed for tests.
double idft3_imag_residue(const SpectralTensor& ahat);

}  // namespace tubal
